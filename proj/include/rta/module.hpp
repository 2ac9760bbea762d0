#pragma once

#include <string>

#include "rta/node.hpp"
#include "rta/predicate.hpp"

namespace rta {

enum class Mode { AC, SC };

inline const char* mode_name(Mode m) { return m == Mode::AC ? "AC" : "SC"; }

// One protected controller pair: advanced controller, safe controller, the
// generated decision module's name, the decision period, and the safety
// envelopes the decision logic consults.
struct ModuleSpec {
  std::string name;
  NodeSpec ac;
  NodeSpec sc;
  std::string dm_name;
  Tick delta = 1;
  SafetyPredicate safe;
  SafetyPredicate safer;
  // True iff failure is possible within 2*delta from s; drives AC -> SC.
  std::function<bool(const State&)> ttf2d;
  // Which topic carries the plant state the decision module reads.
  std::string state_topic = "STATE";
  // Optional exact check that every state reachable within delta stays safe;
  // used by the invariant audit. Null when no oracle is available.
  std::function<bool(const State&)> inv_ac;
};

// Two-branch switching logic: in AC, a pending failure within 2*delta hands
// control to SC; in SC, reaching the stronger envelope hands it back.
Mode dm_transition(Mode mode, const State& s, const ModuleSpec& spec);

// Builds the decision module node: period delta, subscribed to everything the
// two controllers read plus the state topic, publishing nothing, mode-typed
// local state starting in SC. Rejects period/output mismatches between the
// controllers and delta.
NodeSpec generate_dm(const ModuleSpec& spec);

struct InvariantOracle {
  // Reach(s, *, delta) stays inside phi_safe.
  std::function<bool(const State&)> reach_delta_in_safe;
  // Whether s is inside the oracle's domain at all.
  std::function<bool(const State&)> covers;
};

// The safety invariant over (mode, state) pairs: SC implies the state is
// safe; AC implies every state reachable within delta is safe.
bool invariant_holds(Mode mode, const State& s, const ModuleSpec& spec,
                     const InvariantOracle& oracle);

}  // namespace rta
