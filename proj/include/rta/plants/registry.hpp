#pragma once

#include <functional>
#include <map>
#include <string>

#include "rta/node.hpp"
#include "rta/predicate.hpp"
#include "rta/value.hpp"
#include "rta/wellformed.hpp"

namespace rta {

// One named node body: the transition function together with the local
// state it starts from.
struct NodeBody {
  TransitionFn transition;
  LocalState initial_state;
};

// Everything a declaration program can reference by name for one plant:
// node bodies keyed by their canonical node names, safety envelopes,
// switching tests (with the matching one-period reach oracle keyed by the
// same name), per-topic initial values, and the reachability oracle keyed
// by the safe controller's name.
struct PlantBindings {
  std::map<std::string, NodeBody> functions;
  std::map<std::string, SafetyPredicate> predicates;
  std::map<std::string, std::function<bool(const State&)>> switch_tests;
  std::map<std::string, std::function<bool(const State&)>> reach_oracles;
  std::map<std::string, Value> topic_defaults;
  std::map<std::string, ModuleOracle> oracles;
};

// Builds the bindings for a named plant, applying numeric constants and
// named selections from the scenario on top of the plant's defaults.
// Throws std::invalid_argument on an unknown plant or selection name.
//
// Plants and the names they export:
//   mountain_car: carPlant, carAc, carSc, goalWatch, cliffWatch;
//                 carSafe, carSafer; carTtf (oracle paired); oracle at carSc
//   drone:        dronePlant, droneAc, droneSc, doneWatch;
//                 droneSafe, droneSafer; droneTtf; oracle at droneSc
//   battery:      batPlant, batPlanner, batCharge; batSafe, batSafer; batTtf
//   exploration:  explPlant, explAc, explSc; explSafe, explSafer; explTtf
PlantBindings plant_bindings(const std::string& plant,
                             const std::map<std::string, double>& constants,
                             const std::map<std::string, std::string>& names);

}  // namespace rta
