#include "rta/schedule.hpp"

#include <algorithm>
#include <charconv>
#include <set>
#include <sstream>

#include "rta/rng.hpp"

namespace rta {
namespace {

std::vector<std::string> sorted_node_names(const SystemSpec& sys) {
  std::vector<std::string> names;
  names.reserve(sys.nodes.size());
  for (const auto& [name, node] : sys.nodes) names.push_back(name);
  return names;  // map iteration is already sorted
}

// Permutations are indexed in lexicographic order over the sorted name list.
std::vector<std::string> nth_permutation(std::vector<std::string> names,
                                         std::uint64_t index) {
  std::vector<std::string> out;
  out.reserve(names.size());
  std::uint64_t fact = 1;
  for (std::size_t k = 2; k < names.size(); ++k) fact *= k;
  // fact == (n-1)! here; peel one position at a time.
  for (std::size_t remaining = names.size(); remaining > 0; --remaining) {
    if (remaining == 1) {
      out.push_back(names.front());
      break;
    }
    std::uint64_t pos = index / fact;
    index %= fact;
    out.push_back(names[pos]);
    names.erase(names.begin() + static_cast<std::ptrdiff_t>(pos));
    fact /= remaining - 1;
  }
  return out;
}

std::uint64_t factorial_checked(std::size_t n, std::size_t cap) {
  std::uint64_t f = 1;
  for (std::size_t k = 2; k <= n; ++k) {
    f *= k;
    if (f > cap) return f;  // caller only compares against cap
  }
  return f;
}

std::uint64_t parse_u64(std::string_view text, const std::string& id) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), v);
  if (ec != std::errc{} || ptr != text.data() + text.size())
    fail(Errc::unknown_schedule, "bad number in schedule id '" + id + "'");
  return v;
}

std::string exhaustive_id(int env, std::uint64_t perm,
                          const std::vector<Tick>& slips) {
  std::ostringstream os;
  os << "x" << env << "." << perm << ".";
  for (std::size_t i = 0; i < slips.size(); ++i) {
    if (i) os << "-";
    os << slips[i];
  }
  if (slips.empty()) os << "0";
  return os.str();
}

}  // namespace

const char* schedule_kind_name(ScheduleKind k) {
  switch (k) {
    case ScheduleKind::deterministic: return "det";
    case ScheduleKind::seeded_random: return "random";
    case ScheduleKind::exhaustive: return "exhaustive";
  }
  return "?";
}

std::optional<ScheduleKind> parse_schedule_kind(const std::string& name) {
  if (name == "det" || name == "deterministic")
    return ScheduleKind::deterministic;
  if (name == "random") return ScheduleKind::seeded_random;
  if (name == "exhaustive") return ScheduleKind::exhaustive;
  return std::nullopt;
}

std::map<std::string, Tick> max_slips(const SystemSpec& sys, Tick horizon,
                                      Tick bound) {
  // Module control paths stay on the base calendar: the switching margin is
  // proven against the module's own periods, so a late controller, decision
  // module, or plant is the delay fault, not an admissible schedule.
  std::set<std::string> pinned;
  for (const auto& m : sys.modules) {
    pinned.insert(m.ac.name);
    pinned.insert(m.sc.name);
    pinned.insert(m.dm_name.empty() ? m.name + "_dm" : m.dm_name);
    for (const auto& [name, node] : sys.nodes)
      if (node.outputs.count(m.state_topic)) pinned.insert(name);
  }
  std::map<std::string, Tick> out;
  for (const auto& [name, node] : sys.nodes) {
    Tick last = node.phase;
    if (horizon >= node.phase)
      last = node.phase + ((horizon - node.phase) / node.period) * node.period;
    Tick room = horizon - last;
    if (room < 0) room = 0;
    if (pinned.count(name)) room = 0;
    out[name] = bound < 0 ? room : std::min(bound, room);
  }
  return out;
}

std::vector<Schedule> enumerate_schedules(const SystemSpec& sys,
                                          const SchedulePolicy& policy,
                                          Tick horizon, int env_choices) {
  if (env_choices < 1) env_choices = 1;
  std::vector<Schedule> out;

  if (policy.kind == ScheduleKind::deterministic) {
    for (int env = 0; env < env_choices; ++env) {
      Schedule s;
      s.id = env_choices == 1 ? "det" : "det." + std::to_string(env);
      s.env_choice = env;
      out.push_back(std::move(s));
    }
    return out;
  }

  if (policy.kind == ScheduleKind::seeded_random) {
    for (int i = 0; i < policy.count; ++i) {
      std::uint64_t seed = policy.seed + static_cast<std::uint64_t>(i);
      Schedule s;
      s.id = "r" + std::to_string(seed);
      Rng pick(seed);
      auto limits = max_slips(sys, horizon, policy.bound);
      for (const auto& [name, limit] : limits)
        s.slips[name] = static_cast<Tick>(
            pick.below(static_cast<std::uint64_t>(limit) + 1));
      s.env_choice = env_choices == 1
                         ? 0
                         : static_cast<int>(pick.below(
                               static_cast<std::uint64_t>(env_choices)));
      s.priority = sorted_node_names(sys);
      for (std::size_t k = s.priority.size(); k > 1; --k)
        std::swap(s.priority[k - 1], s.priority[pick.below(k)]);
      out.push_back(std::move(s));
    }
    return out;
  }

  // Exhaustive: environment choice x priority permutation x slip odometer.
  auto names = sorted_node_names(sys);
  auto limits = max_slips(sys, horizon, policy.bound);
  std::uint64_t perms = factorial_checked(names.size(), policy.explosion_cap);
  std::uint64_t total = perms * static_cast<std::uint64_t>(env_choices);
  for (const auto& [name, limit] : limits) {
    total *= static_cast<std::uint64_t>(limit) + 1;
    if (total > policy.explosion_cap)
      fail(Errc::explosion_guard,
           "exhaustive schedule space exceeds cap of " +
               std::to_string(policy.explosion_cap) + " (at least " +
               std::to_string(total) + ")");
  }
  if (total > policy.explosion_cap)
    fail(Errc::explosion_guard,
         "exhaustive schedule space exceeds cap of " +
             std::to_string(policy.explosion_cap) + " (at least " +
             std::to_string(total) + ")");

  out.reserve(total);
  for (int env = 0; env < env_choices; ++env) {
    for (std::uint64_t p = 0; p < perms; ++p) {
      auto ranking = nth_permutation(names, p);
      std::vector<Tick> odo(names.size(), 0);
      for (;;) {
        Schedule s;
        s.id = exhaustive_id(env, p, odo);
        s.priority = ranking;
        for (std::size_t i = 0; i < names.size(); ++i)
          s.slips[names[i]] = odo[i];
        s.env_choice = env;
        out.push_back(std::move(s));
        // Advance the slip odometer, last node fastest.
        std::size_t d = names.size();
        while (d > 0) {
          --d;
          if (odo[d] < limits.at(names[d])) {
            ++odo[d];
            std::fill(odo.begin() + static_cast<std::ptrdiff_t>(d) + 1,
                      odo.end(), 0);
            break;
          }
          if (d == 0) goto next_perm;
        }
        if (names.empty()) break;
      }
    next_perm:;
    }
  }
  return out;
}

Schedule schedule_from_id(const std::string& id, const SystemSpec& sys,
                          Tick horizon, Tick bound, int env_choices) {
  if (id.empty()) fail(Errc::unknown_schedule, "empty schedule id");
  Schedule s;
  s.id = id;
  if (id == "det") return s;
  if (id.rfind("det.", 0) == 0) {
    s.env_choice = static_cast<int>(parse_u64(id.substr(4), id));
    if (s.env_choice >= std::max(env_choices, 1))
      fail(Errc::unknown_schedule,
           "environment choice out of range in '" + id + "'");
    return s;
  }
  if (id[0] == 'r') {
    std::uint64_t seed = parse_u64(std::string_view(id).substr(1), id);
    Rng pick(seed);
    auto limits = max_slips(sys, horizon, bound);
    for (const auto& [name, limit] : limits)
      s.slips[name] =
          static_cast<Tick>(pick.below(static_cast<std::uint64_t>(limit) + 1));
    s.env_choice =
        env_choices <= 1
            ? 0
            : static_cast<int>(
                  pick.below(static_cast<std::uint64_t>(env_choices)));
    s.priority = sorted_node_names(sys);
    for (std::size_t k = s.priority.size(); k > 1; --k)
      std::swap(s.priority[k - 1], s.priority[pick.below(k)]);
    return s;
  }
  if (id[0] == 'x') {
    auto body = std::string_view(id).substr(1);
    auto dot1 = body.find('.');
    auto dot2 = body.find('.', dot1 == std::string_view::npos ? 0 : dot1 + 1);
    if (dot1 == std::string_view::npos || dot2 == std::string_view::npos)
      fail(Errc::unknown_schedule, "malformed schedule id '" + id + "'");
    s.env_choice = static_cast<int>(parse_u64(body.substr(0, dot1), id));
    std::uint64_t perm = parse_u64(body.substr(dot1 + 1, dot2 - dot1 - 1), id);
    auto names = sorted_node_names(sys);
    std::uint64_t perms = factorial_checked(names.size(), ~0ull >> 1);
    if (perm >= perms)
      fail(Errc::unknown_schedule,
           "permutation index out of range in '" + id + "'");
    s.priority = nth_permutation(names, perm);
    auto slip_text = body.substr(dot2 + 1);
    std::vector<Tick> slips;
    std::size_t pos = 0;
    while (pos <= slip_text.size()) {
      auto dash = slip_text.find('-', pos);
      auto piece = slip_text.substr(
          pos, dash == std::string_view::npos ? slip_text.size() - pos
                                              : dash - pos);
      slips.push_back(static_cast<Tick>(parse_u64(piece, id)));
      if (dash == std::string_view::npos) break;
      pos = dash + 1;
    }
    if (names.empty() && slips.size() == 1 && slips[0] == 0) slips.clear();
    if (slips.size() != names.size())
      fail(Errc::unknown_schedule,
           "slip count does not match node count in '" + id + "'");
    auto limits = max_slips(sys, horizon, bound);
    for (std::size_t i = 0; i < names.size(); ++i) {
      if (slips[i] > limits.at(names[i]))
        fail(Errc::unknown_schedule,
             "slip for node '" + names[i] + "' out of range in '" + id + "'");
      s.slips[names[i]] = slips[i];
    }
    if (s.env_choice >= std::max(env_choices, 1))
      fail(Errc::unknown_schedule,
           "environment choice out of range in '" + id + "'");
    return s;
  }
  fail(Errc::unknown_schedule, "unrecognized schedule id '" + id + "'");
}

Calendar apply_slips(const Calendar& base,
                     const std::map<std::string, Tick>& slips) {
  Calendar cal = base;
  for (const auto& [name, shift] : slips)
    if (shift != 0) cal = shift_node(cal, name, shift);
  return cal;
}

OrderFn schedule_order(const Schedule& s) {
  if (!s.priority.empty()) return priority_order(s.priority);
  return default_order();
}

}  // namespace rta
