#include "rta/explore.hpp"

#include <sstream>

namespace rta {
namespace {

struct DigestStream {
  std::uint64_t h = 1469598103934665603ull;

  void add_line(const std::string& line) {
    for (unsigned char c : line) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= static_cast<unsigned char>('\n');
    h *= 1099511628211ull;
  }
};

}  // namespace

std::vector<std::string> ExploreResult::violating_ids() const {
  std::vector<std::string> out;
  for (const auto& item : items)
    if (!item.report.clean()) out.push_back(item.id);
  return out;
}

bool ExploreResult::all_clean() const {
  for (const auto& item : items)
    if (!item.report.clean()) return false;
  return true;
}

std::size_t ExploreResult::total_inv_violations() const {
  std::size_t n = 0;
  for (const auto& item : items) n += item.report.total_inv_violations();
  return n;
}

std::size_t ExploreResult::total_unsafe_states() const {
  std::size_t n = 0;
  for (const auto& item : items) n += item.report.total_unsafe_states();
  return n;
}

std::string ExploreResult::render_summary() const {
  std::ostringstream os;
  os << "schedules " << schedules() << "\n";
  os << "inv_violations " << total_inv_violations() << "\n";
  os << "unsafe_states " << total_unsafe_states() << "\n";
  auto bad = violating_ids();
  os << "violating_schedules " << bad.size() << "\n";
  std::size_t shown = 0;
  for (const auto& id : bad) {
    if (shown++ == 10) {
      os << "  ...\n";
      break;
    }
    os << "  " << id << "\n";
  }
  return os.str();
}

ExploreItem run_schedule(const SystemSpec& sys, const Schedule& schedule,
                         const ExploreOptions& opts, Trace* retain) {
  // Rebuilt at the exploration horizon so slip admissibility and the actual
  // firing calendar agree, whatever horizon sys.calendar was built for.
  std::vector<NodeSpec> nodes;
  nodes.reserve(sys.nodes.size());
  for (const auto& [name, node] : sys.nodes) nodes.push_back(node);
  Calendar cal = make_calendar(nodes, opts.horizon);
  cal = apply_slips(cal, schedule.slips);
  cal = apply_fault_to_calendar(cal, opts.fault);

  FaultHooks hooks = make_fault_hooks(opts.fault);

  RunOptions run_opts;
  run_opts.horizon = opts.horizon;
  if (!opts.env_choices.empty()) {
    std::size_t pick = static_cast<std::size_t>(schedule.env_choice);
    if (pick >= opts.env_choices.size())
      fail(Errc::bad_scenario, "schedule '" + schedule.id +
                                   "' selects environment alternative " +
                                   std::to_string(pick) + " of " +
                                   std::to_string(opts.env_choices.size()));
    run_opts.env = opts.env_choices[pick];
  }
  run_opts.order = schedule_order(schedule);
  run_opts.calendar = &cal;
  if (opts.fault.kind != FaultKind::none) run_opts.faults = &hooks;

  Auditor auditor(sys);
  DigestStream digest;
  run_opts.sink = [&](const TraceEvent& e) {
    auditor.on_event(e);
    digest.add_line(format_event(e));
    if (retain) retain->events.push_back(e);
  };
  run(sys, run_opts);

  ExploreItem item;
  item.id = schedule.id;
  item.report = auditor.finish();
  item.digest = digest.h;
  return item;
}

ExploreResult explore(const SystemSpec& sys, const ExploreOptions& opts) {
  if (opts.fault.kind != FaultKind::none) {
    auto v = validate_fault(opts.fault, sys);
    if (!v.ok) fail(Errc::bad_scenario, v.detail);
  }
  int env_choices = static_cast<int>(opts.env_choices.size());
  auto schedules =
      enumerate_schedules(sys, opts.policy, opts.horizon, env_choices);
  ExploreResult result;
  result.items.reserve(schedules.size());
  for (const auto& s : schedules)
    result.items.push_back(run_schedule(sys, s, opts));
  return result;
}

ReplayResult replay(const SystemSpec& sys, const std::string& schedule_id,
                    const ExploreOptions& opts) {
  if (opts.fault.kind != FaultKind::none) {
    auto v = validate_fault(opts.fault, sys);
    if (!v.ok) fail(Errc::bad_scenario, v.detail);
  }
  ReplayResult out;
  out.schedule =
      schedule_from_id(schedule_id, sys, opts.horizon, opts.policy.bound,
                       static_cast<int>(opts.env_choices.size()));
  ExploreItem item = run_schedule(sys, out.schedule, opts, &out.trace);
  out.report = std::move(item.report);
  out.digest = item.digest;
  return out;
}

}  // namespace rta
