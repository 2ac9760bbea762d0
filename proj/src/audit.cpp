#include "rta/audit.hpp"

#include <sstream>

namespace rta {
namespace {

std::optional<State> state_from_value(const Value& v) {
  if (const auto* vec = std::get_if<std::vector<double>>(&v)) return *vec;
  if (const double* x = std::get_if<double>(&v)) return State{*x};
  return std::nullopt;
}

}  // namespace

const ModuleAudit* AuditReport::find(const std::string& module) const {
  for (const auto& m : modules)
    if (m.module == module) return &m;
  return nullptr;
}

std::size_t AuditReport::total_inv_violations() const {
  std::size_t n = 0;
  for (const auto& m : modules) n += m.inv_violations;
  return n;
}

std::size_t AuditReport::total_unsafe_states() const {
  std::size_t n = 0;
  for (const auto& m : modules) n += m.unsafe_states;
  return n;
}

std::string AuditReport::render() const {
  std::ostringstream os;
  os << "audit events=" << events << "\n";
  for (const auto& m : modules) {
    os << "module " << m.module << "\n";
    os << "  unsafe_states " << m.unsafe_states;
    if (m.first_unsafe_event) os << " (first at event " << *m.first_unsafe_event << ")";
    os << "\n";
    os << "  inv_violations " << m.inv_violations;
    if (m.first_violation_event)
      os << " (first at event " << *m.first_violation_event << ")";
    os << "\n";
    os << "  disengagements " << m.disengagements << "\n";
    os << "  reengagements " << m.reengagements
       << (m.pending_reengage ? " (one pending)" : "") << "\n";
    os << "  max_reengage_delay " << m.max_reengage_delay << "\n";
    os << "  plant_firings " << m.plant_firings << " ac_fraction "
       << format_double(m.ac_fraction()) << "\n";
  }
  return os.str();
}

Auditor::Auditor(const SystemSpec& sys) : sys_(&sys) {
  tracks_.reserve(sys.modules.size());
  for (const auto& m : sys.modules) {
    ModuleTrack t;
    t.spec = &m;
    t.tally.module = m.name;
    tracks_.push_back(std::move(t));
    by_state_topic_[m.state_topic] = tracks_.size() - 1;
    by_dm_[m.dm_name] = tracks_.size() - 1;
  }
}

void Auditor::observe_state(ModuleTrack& t, Tick, std::size_t event_index,
                            bool plant_firing) {
  if (!t.state) return;
  const ModuleSpec& m = *t.spec;
  bool safe = m.safe.contains(*t.state);
  if (plant_firing) {
    ++t.tally.plant_firings;
    if (t.mode == Mode::AC) ++t.tally.plant_firings_ac;
  }
  if (!safe) {
    ++t.tally.unsafe_states;
    if (!t.tally.first_unsafe_event) t.tally.first_unsafe_event = event_index;
  }
  bool inv;
  if (t.mode == Mode::SC) {
    inv = safe;
  } else if (m.inv_ac) {
    inv = m.inv_ac(*t.state);
  } else {
    return;  // no one-period reach oracle, AC-side invariant unobservable
  }
  if (!inv) {
    ++t.tally.inv_violations;
    if (!t.tally.first_violation_event)
      t.tally.first_violation_event = event_index;
  }
}

void Auditor::on_event(const TraceEvent& e) {
  std::size_t index = events_++;
  if (e.rule == Rule::dm_step) {
    auto it = by_dm_.find(e.node);
    if (it == by_dm_.end()) return;
    ModuleTrack& t = tracks_[it->second];
    Mode before = e.mode_before.value_or(t.mode);
    Mode after = e.mode_after.value_or(before);
    if (before == Mode::AC && after == Mode::SC) {
      ++t.tally.disengagements;
      t.disengaged_at = e.time;
    } else if (before == Mode::SC && after == Mode::AC) {
      ++t.tally.reengagements;
      if (t.disengaged_at) {
        Tick delay = e.time - *t.disengaged_at;
        if (delay > t.tally.max_reengage_delay)
          t.tally.max_reengage_delay = delay;
        t.disengaged_at.reset();
      }
    }
    t.mode = after;
    observe_state(t, e.time, index, false);
    return;
  }
  if (e.rule == Rule::node_step || e.rule == Rule::env_input) {
    for (const auto& [topic, value] : e.writes) {
      auto it = by_state_topic_.find(topic);
      if (it == by_state_topic_.end()) continue;
      ModuleTrack& t = tracks_[it->second];
      if (auto s = state_from_value(value)) {
        t.state = std::move(*s);
        observe_state(t, e.time, index, e.rule == Rule::node_step);
      }
    }
  }
}

AuditReport Auditor::finish() const {
  AuditReport report;
  report.events = events_;
  for (const auto& t : tracks_) {
    ModuleAudit tally = t.tally;
    tally.pending_reengage = t.disengaged_at.has_value();
    report.modules.push_back(std::move(tally));
  }
  return report;
}

AuditReport audit(const Trace& trace, const SystemSpec& sys) {
  Auditor a(sys);
  for (const auto& e : trace.events) a.on_event(e);
  return a.finish();
}

}  // namespace rta
