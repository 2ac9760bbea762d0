#include <algorithm>

#include "rta/calendar.hpp"
#include "rta/node.hpp"

namespace rta {

ValidationResult validate_node(const NodeSpec& node,
                               const std::set<std::string>* declared_topics) {
  for (const auto& t : node.inputs) {
    if (node.outputs.count(t)) {
      return ValidationResult::bad(
          Errc::overlapping_io,
          "node '" + node.name + "' both subscribes and publishes '" + t + "'");
    }
  }
  if (node.period <= 0) {
    return ValidationResult::bad(
        Errc::nonpositive_period,
        "node '" + node.name + "' has period " + std::to_string(node.period));
  }
  if (node.phase < 0) {
    return ValidationResult::bad(
        Errc::negative_phase,
        "node '" + node.name + "' has phase " + std::to_string(node.phase));
  }
  if (declared_topics) {
    for (const auto& t : node.inputs) {
      if (!declared_topics->count(t)) {
        return ValidationResult::bad(
            Errc::unknown_topic,
            "node '" + node.name + "' subscribes undeclared topic '" + t + "'");
      }
    }
    for (const auto& t : node.outputs) {
      if (!declared_topics->count(t)) {
        return ValidationResult::bad(
            Errc::unknown_topic,
            "node '" + node.name + "' publishes undeclared topic '" + t + "'");
      }
    }
  }
  return ValidationResult::good();
}

std::optional<Tick> Calendar::next_time_after(Tick t) const {
  // Entries are sorted by time, so the first later entry wins.
  for (const auto& e : entries) {
    if (e.time > t) return e.time;
  }
  return std::nullopt;
}

std::set<std::string> Calendar::firing_at(Tick t) const {
  std::set<std::string> out;
  for (const auto& e : entries) {
    if (e.time == t) out.insert(e.node);
    if (e.time > t) break;
  }
  return out;
}

namespace {

void sort_entries(std::vector<CalendarEntry>& entries) {
  std::sort(entries.begin(), entries.end(),
            [](const CalendarEntry& a, const CalendarEntry& b) {
              if (a.time != b.time) return a.time < b.time;
              return a.node < b.node;
            });
}

}  // namespace

Calendar make_calendar(const std::vector<NodeSpec>& nodes, Tick horizon) {
  Calendar cal;
  for (const auto& n : nodes) {
    if (n.period <= 0) {
      fail(Errc::nonpositive_period, "node '" + n.name + "' in calendar");
    }
    for (Tick t = n.phase; t <= horizon; t += n.period) {
      cal.entries.push_back({n.name, t});
    }
  }
  sort_entries(cal.entries);
  return cal;
}

Calendar shift_node(const Calendar& cal, const std::string& node, Tick shift) {
  Calendar out = cal;
  for (auto& e : out.entries) {
    if (e.node == node) e.time += shift;
  }
  sort_entries(out.entries);
  return out;
}

}  // namespace rta
