#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rta/calendar.hpp"
#include "rta/engine.hpp"
#include "rta/system.hpp"
#include "rta/types.hpp"

namespace rta {

enum class ScheduleKind { deterministic, seeded_random, exhaustive };

const char* schedule_kind_name(ScheduleKind k);
std::optional<ScheduleKind> parse_schedule_kind(const std::string& name);

struct SchedulePolicy {
  ScheduleKind kind = ScheduleKind::deterministic;
  // Maximum per-node calendar slip, in ticks. Negative means "as far as the
  // horizon admits".
  Tick bound = 0;
  std::uint64_t seed = 1;
  // Number of schedules to draw under seeded_random.
  int count = 1;
  // Hard cap on the exhaustive enumeration size.
  std::size_t explosion_cap = 20000;
};

// One concrete interleaving choice: a fixed priority ranking over node names
// (same-instant firings run in this order), a constant calendar slip per
// node, and an index into the scenario's environment script alternatives.
// seeded_random draws all three from the seed, so it samples the same space
// the exhaustive mode enumerates.
struct Schedule {
  std::string id;
  std::vector<std::string> priority;
  std::map<std::string, Tick> slips;
  int env_choice = 0;
};

// Largest slip each node admits without pushing any of its firings past the
// horizon, clamped to the policy bound. Nodes on a module's control path
// (controllers, decision module, and the publisher of the state topic) never
// slip; delaying those is the delay fault, not an admissible schedule.
std::map<std::string, Tick> max_slips(const SystemSpec& sys, Tick horizon,
                                      Tick bound);

// All schedules under the policy, in a stable order (environment choice,
// then priority permutation, then slip vector). Throws explosion_guard when
// the exhaustive product exceeds the cap.
std::vector<Schedule> enumerate_schedules(const SystemSpec& sys,
                                          const SchedulePolicy& policy,
                                          Tick horizon, int env_choices);

// Rebuilds the schedule a given id denotes, so a run can be replayed
// byte-for-byte. Throws unknown_schedule on malformed or out-of-range ids.
Schedule schedule_from_id(const std::string& id, const SystemSpec& sys,
                          Tick horizon, Tick bound, int env_choices);

Calendar apply_slips(const Calendar& base,
                     const std::map<std::string, Tick>& slips);

// Firing-order policy for one schedule: fixed ranking when `priority` is
// set, the default class order otherwise.
OrderFn schedule_order(const Schedule& s);

}  // namespace rta
