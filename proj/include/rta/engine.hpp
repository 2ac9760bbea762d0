#pragma once

#include <functional>

#include "rta/config.hpp"
#include "rta/trace.hpp"

namespace rta {

struct EnvWrite {
  Tick time = 0;
  std::string topic;
  Value value;
};

// Time-stamped environment writes, applied at the first instant >= time,
// before any node at that instant fires.
using EnvScript = std::vector<EnvWrite>;

// Decides the firing order inside one instant, given the due set.
using OrderFn = std::function<std::vector<std::string>(
    const std::set<std::string>&, const SystemSpec&)>;

// Decision modules first, then module controllers, then free nodes,
// lexicographic inside each class.
OrderFn default_order();
// Fixed priority list: due nodes fire in the order they appear in `ranking`.
OrderFn priority_order(std::vector<std::string> ranking);

// Per-firing fault hooks, resolved by the harness before the run.
struct FaultHooks {
  // Return true to swallow the firing entirely (decision modules only).
  std::function<bool(const std::string& node, Tick time, int firing_index)> drop;
  // Rewrite a node's outputs before they land.
  std::function<Valuation(const std::string& node, Tick time, int firing_index,
                          const Valuation& outputs)> rewrite;
};

struct RunOptions {
  Tick horizon = 0;
  EnvScript env;
  OrderFn order;                      // default_order() when empty
  const Calendar* calendar = nullptr; // overrides sys.calendar when set
  const FaultHooks* faults = nullptr;
  // Streaming consumer; when set, events are not retained in the result.
  std::function<void(const TraceEvent&)> sink;
};

// Drives the system from the initial configuration to the horizon:
// environment writes at each instant boundary, then the due nodes in policy
// order, then time progress. Stops cleanly when the calendar is exhausted
// or the next instant would pass the horizon.
Trace run(const SystemSpec& sys, const RunOptions& opts);

}  // namespace rta
