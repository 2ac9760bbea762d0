#pragma once

#include <any>
#include <functional>
#include <optional>
#include <set>
#include <string>

#include "rta/value.hpp"

namespace rta {

// Node-local state is opaque to the runtime; only the node's own transition
// function ever looks inside.
using LocalState = std::any;

struct StepResult {
  LocalState next_state;
  Valuation outputs;
};

// Deterministic: same local state and same inputs must yield the same result.
using TransitionFn =
    std::function<StepResult(const LocalState&, const Valuation&)>;

struct NodeSpec {
  std::string name;
  std::set<std::string> inputs;
  std::set<std::string> outputs;
  Tick period = 1;
  Tick phase = 0;
  TransitionFn transition;
  LocalState initial_state;
};

struct ValidationResult {
  bool ok = true;
  std::optional<Errc> error;
  std::string detail;

  static ValidationResult good() { return {}; }
  static ValidationResult bad(Errc e, std::string why) {
    return {false, e, std::move(why)};
  }
};

// Checks I/O disjointness, period positivity, phase sanity and, when a topic
// table is supplied, that every referenced topic is declared.
ValidationResult validate_node(const NodeSpec& node,
                               const std::set<std::string>* declared_topics = nullptr);

}  // namespace rta
