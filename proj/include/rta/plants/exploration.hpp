#pragma once

#include <cstdint>

#include "rta/dynamics.hpp"
#include "rta/grid.hpp"
#include "rta/mask.hpp"
#include "rta/module.hpp"
#include "rta/plants/wiring.hpp"
#include "rta/system.hpp"

namespace rta {

// Ground truth and accumulated knowledge for the exploration flight: the
// workspace grid, the cells confirmed free so far, the hidden obstacle
// cells, and the speed bound the switching margin is derived from. Walls
// are never marked known, so the known region always avoids them.
struct ExplorationMap {
  GridSpec grid;
  RegionMask known;
  RegionMask walls;
  double v_max = 0.5;
};

// Flight over an unknown floor plan: position integrates velocity commands
// from a 9-direction alphabet, the sensor marks wall-free cells near the
// drone as known, and the protective module keeps the drone from outrunning
// its own knowledge. The plant publishes (x, y, clearance) where clearance
// is the Chebyshev distance from the position to the nearest not-known
// cell; the envelopes and the switching test are thresholds on it, which
// keeps them pure functions of the published state while the map grows.
struct ExplorationParams {
  double extent = 10.0; // square workspace side
  int res = 50;
  double v_max = 0.5;
  double sense_radius = 1.2; // must exceed v_max * 2 * delta to make progress
  Tick delta = 1;
  std::array<double, 2> home{5.0, 5.0};
  double known_radius = 2.0; // initially surveyed disk around home
  std::uint64_t wander_seed = 1;
  Tick wander_hold = 5; // ticks an exploring heading is kept
};

// The initial map: a surveyed disk around home, a border ring of walls, and
// one interior wall strip the drone has to discover at runtime.
ExplorationMap exploration_map(const ExplorationParams& p);

// Chebyshev distance from a position to the nearest cell not marked known
// (zero when the position's own cell is unknown).
double exploration_clearance(const ExplorationMap& map, const State& pos);

DynamicsModel exploration_dynamics(const ExplorationParams& p);

struct ExplorationOptions {
  ExplorationParams params;
  WiringMode wiring = WiringMode::rta;
  Tick calendar_horizon = 0;
};

struct ExplorationBundle {
  SystemSpec sys;
  std::string module_name; // empty for the single-controller wirings
  std::string dm_name;
};

// Assembles the exploration system: plant with the evolving map in its
// local state, a seeded wandering waypoint generator (AC), a return-home
// controller (SC), and the protective module whose switch test fires when
// the two-period reach ball is no longer inside the known region.
ExplorationBundle make_exploration(const ExplorationOptions& opts);

}  // namespace rta
