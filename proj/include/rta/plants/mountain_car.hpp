#pragma once

#include <memory>

#include "rta/module.hpp"
#include "rta/plants/dp.hpp"
#include "rta/plants/wiring.hpp"
#include "rta/system.hpp"
#include "rta/wellformed.hpp"

namespace rta {

// Underpowered car in a valley: thrust alone cannot climb either slope, so
// reaching the goal on the right needs pumped momentum, and the same
// momentum can carry the car over the cliff on the left. State is (x, v),
// control is thrust in {-1, 0, +1}.
struct MountainCarParams {
  double force = 0.001;
  double gravity = 0.0025;
  double x_min = -1.2;
  double x_max = 0.6;
  double v_cap = 0.07;
  double x_goal = 0.5;
  double x_cliff = -1.1;
  int res_x = 180;
  int res_v = 140;
  Tick delta = 1;
  State initial = {-0.5, 0.0};
};

// One plant tick. Past the cliff the car is stuck at the bottom; at or past
// the goal it parks. Both terminal branches are fixed points, so the grid
// analysis can treat them cellwise.
State mountain_car_step(const State& s, double a, const MountainCarParams& p);

DynamicsModel mountain_car_dynamics(const MountainCarParams& p);
GridSpec mountain_car_grid(const MountainCarParams& p);

// The offline construction: the safe set is the viability kernel away from
// the cliff (every cell from which some control keeps the car clear forever,
// robust to in-cell position), the safe controller is that kernel's policy
// biased toward the goal side, and the hand-back region is the two-step
// robust shrink of the safe set. Reaching the goal stays a mission concern;
// the envelope only promises the car never goes over the edge.
struct MountainCarAnalysis {
  MountainCarParams params;
  RobustModel model;
  InvariantKernel kernel;
  RegionMask safe;
  RegionMask safer;
};

MountainCarAnalysis mountain_car_analysis(const MountainCarParams& p);

// The untrusted controller flavors: `pump` builds momentum by thrusting
// with the velocity sign (reaches the goal, swings near the cliff), `dive`
// thrusts left unconditionally (never finishes, presses on the cliff).
enum class CarAcKind { pump, dive };

// Deliberately broken variants for the wellformedness/safety coupling
// suite. Each invalidates exactly one checker condition.
enum class CarMutant {
  none,
  sc_runaway,        // safe controller thrusts left: breaks the stay-safe condition
  safer_unreachable, // empty hand-back region: breaks the finite-recovery condition
  safer_too_wide,    // hand-back region set equal to the safe set: breaks the margin condition
};

struct MountainCarOptions {
  MountainCarParams params;
  CarAcKind ac = CarAcKind::pump;
  CarMutant mutant = CarMutant::none;
  WiringMode wiring = WiringMode::rta;
  // When positive, sys.calendar is prebuilt to this horizon.
  Tick calendar_horizon = 0;
};

struct MountainCarBundle {
  SystemSpec sys;
  std::shared_ptr<const MountainCarAnalysis> analysis;
  std::string module_name;  // empty for the single-controller wirings
  std::string dm_name;
};

// Assembles the topics and nodes. Pass a precomputed analysis to share the
// (expensive) construction across bundles; nullptr recomputes it.
MountainCarBundle make_mountain_car(
    const MountainCarOptions& opts,
    std::shared_ptr<const MountainCarAnalysis> analysis = nullptr);

// Oracle for the wellformedness suite, honoring the mutant's controller.
ModuleOracle mountain_car_oracle(const MountainCarBundle& bundle,
                                 CarMutant mutant = CarMutant::none);

}  // namespace rta
