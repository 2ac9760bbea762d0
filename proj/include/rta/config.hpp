#pragma once

#include "rta/system.hpp"

namespace rta {

// Snapshot of a run between rule applications: node-local states, the
// output-enable map for module controllers, current time, the set of nodes
// due to fire at the current instant, and the topic board.
struct Configuration {
  std::map<std::string, LocalState> local_states;
  std::map<std::string, bool> output_enabled;  // module AC/SC nodes only
  Tick current_time = 0;
  std::set<std::string> fire_now;
  Valuation topics;

  bool enabled(const std::string& node) const {
    auto it = output_enabled.find(node);
    return it == output_enabled.end() || it->second;  // free nodes always on
  }
};

// Time zero, nothing due, every topic at its default, every module in SC
// with the safe controller enabled.
Configuration init_configuration(const SystemSpec& sys);

// Environment writes a system-input topic; value must fit the declared
// domain and the topic must not be published by any node.
Configuration step_env_input(const Configuration& c, const SystemSpec& sys,
                             const std::string& topic, const Value& value);

// Advances to the next calendar instant; requires the current instant to be
// fully drained. Loads the nodes due at the new time.
Configuration step_time_progress(const Configuration& c, const SystemSpec& sys,
                                 const Calendar& cal);

struct DmStepOutcome {
  Configuration config;
  Mode before = Mode::SC;
  Mode after = Mode::SC;
};

// Fires a decision module: reads the module's state topic, flips the mode,
// enables exactly one of the two controllers. Publishes nothing.
DmStepOutcome step_dm(const Configuration& c, const SystemSpec& sys,
                      const std::string& dm);

// Hook for fault injection: may rewrite a node's outputs before they land.
using OutputTransform =
    std::function<Valuation(const std::string& node, const Valuation& outputs)>;

struct NodeStepOutcome {
  Configuration config;
  Valuation writes;  // what actually landed on the board (empty if disabled)
};

// Fires an AC/SC or free node: local state always advances; outputs land on
// the board only when the node is output-enabled.
NodeStepOutcome step_node(const Configuration& c, const SystemSpec& sys,
                          const std::string& node,
                          const OutputTransform* transform = nullptr);

// Consumes a firing without running the node's transition (dropped by a
// fault). Local state and board stay as they were.
Configuration skip_firing(const Configuration& c, const std::string& node);

}  // namespace rta
