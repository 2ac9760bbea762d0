#pragma once

#include <functional>
#include <vector>

#include "rta/types.hpp"

namespace rta {

// Discrete-time plant model: one step covers dt ticks of engine time and is
// total on bounds x controls. The same step function drives both the plant
// node and the reachability oracles, so there is a single source of truth
// for the physics.
struct DynamicsModel {
  int dims = 0;
  std::vector<double> lo;      // state bounds, informational
  std::vector<double> hi;
  std::vector<Control> controls;  // finite control set U
  Tick dt = 1;
  std::function<State(const State&, const Control&)> step;

  // Nearest element of U under the max norm; plants snap incoming commands
  // through this so the runtime control alphabet equals U exactly.
  Control snap(const Control& u) const;
};

}  // namespace rta
