#pragma once

#include <optional>
#include <set>
#include <vector>

#include "rta/node.hpp"

namespace rta {

struct CalendarEntry {
  std::string node;
  Tick time = 0;

  bool operator==(const CalendarEntry&) const = default;
};

// Finite firing calendar up to a horizon, sorted by (time, node name).
struct Calendar {
  std::vector<CalendarEntry> entries;

  // Earliest entry time strictly after t, if any.
  std::optional<Tick> next_time_after(Tick t) const;
  // Names of all nodes with an entry at exactly t.
  std::set<std::string> firing_at(Tick t) const;
  bool empty() const { return entries.empty(); }
};

// Periodic expansion: every node contributes entries phase, phase+period, ...
// up to and including the horizon.
Calendar make_calendar(const std::vector<NodeSpec>& nodes, Tick horizon);

// Shifts every entry of the named node by the given number of ticks and
// re-sorts. Used by the harness to realize bounded firing skew.
Calendar shift_node(const Calendar& cal, const std::string& node, Tick shift);

}  // namespace rta
