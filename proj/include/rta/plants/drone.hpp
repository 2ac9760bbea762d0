#pragma once

#include <array>
#include <cstdint>
#include <memory>

#include "rta/module.hpp"
#include "rta/plants/dp.hpp"
#include "rta/plants/wiring.hpp"
#include "rta/system.hpp"
#include "rta/wellformed.hpp"

namespace rta {

// Planar drone position/velocity pair, integrated as a double integrator
// with acceleration controls on both axes.
struct DroneState2D {
  std::array<double, 2> p{0.0, 0.0};
  std::array<double, 2> v{0.0, 0.0};
};

// Straight corridor between two waypoints: the flight must stay within
// `eps` of the axis line. Membership is strict (distance < eps).
struct TubeSpec {
  std::array<double, 2> a{0.0, 0.0};
  std::array<double, 2> b{1.0, 0.0};
  double eps = 0.3;
};

// Euclidean distance from a point to the infinite line through the tube's
// endpoints.
double tube_distance(const std::array<double, 2>& x, const TubeSpec& tube);

// Corridor flight along the x axis: the protected quantity is the lateral
// pair (offset, lateral velocity), which is all the tube constrains; axial
// motion only decides how fast the run finishes. Lateral commands are
// snapped onto a small acceleration alphabet so the grid analysis covers
// every control the plant ever applies.
struct DroneParams {
  TubeSpec tube{{0.0, 0.0}, {8.0, 0.0}, 0.3};
  double done_x = 5.0;   // finish line, crossed at cruise speed
  double a_lat = 0.02;   // lateral acceleration authority per tick
  double v_lat_max = 0.12;
  double d_bound = 0.45; // lateral workspace wall, also the grid edge
  double a_ax = 0.02;
  double vx_max = 0.06;
  double vx_crawl = 0.018; // axial speed while the safe controller holds
  int res_d = 90;
  int res_vd = 48;
  Tick delta = 1;
  // Aggressive tracker toward the far waypoint. `overshoot_gain` g scales
  // the lateral proportional term by g and the damping by (2 - g), so past
  // 2 the velocity feedback flips sign and the tracker pumps energy into
  // the oscillation; `kick` adds a seeded lateral disturbance per firing.
  // Both stand in for third-party controller bugs and are plain scenario
  // configuration.
  double ac_kp = 0.10;
  double ac_kd = 0.60;
  double ac_kp_ax = 0.01;
  double ac_kd_ax = 0.20;
  double overshoot_gain = 1.0;
  double kick = 0.025;
  std::uint64_t kick_seed = 1;
  // Damped proportional recentering law of the safe controller.
  double sc_kp = 0.10;
  double sc_kd = 0.60;
  DroneState2D initial{{0.0, 0.25}, {0.0, 0.0}};
};

// One plant tick: velocities integrate the clamped accelerations, positions
// integrate the new velocities, and the lateral channel saturates at the
// workspace wall.
DroneState2D drone_step(const DroneState2D& s, double ax, double a_lat,
                        const DroneParams& p);

// Aggressive tracker toward `target`: proportional-derivative on both axes,
// reshaped by the overshoot gain. Returns (axial, lateral) acceleration
// before the plant-side clamp and snap.
std::array<double, 2> goto_ac(const DroneState2D& s,
                              const std::array<double, 2>& target,
                              const DroneParams& p);

// Recentering law on the lateral pair: damped proportional toward the tube
// axis, snapped onto the lateral alphabet. From rest it strictly reduces
// the offset until the hand-back region absorbs the state.
double goto_sc(double d, double vd, const DroneParams& p);

// The lateral model the reachability analysis runs on: state (d, vd),
// control the snapped lateral acceleration.
DynamicsModel drone_lateral_dynamics(const DroneParams& p);
GridSpec drone_lateral_grid(const DroneParams& p);

// Offline construction: the safe set is the viability kernel of the
// in-tube cells under the lateral alphabet (the tube states from which
// braking still keeps the flight inside), the hand-back region its
// two-step robust shrink. Cells whose box touches the tube boundary are
// excluded up front because membership is strict.
struct DroneAnalysis {
  DroneParams params;
  RobustModel model;
  InvariantKernel kernel;
  RegionMask safe;
  RegionMask safer;
};

DroneAnalysis drone_analysis(const DroneParams& p);

struct DroneOptions {
  DroneParams params;
  WiringMode wiring = WiringMode::rta;
  // When positive, sys.calendar is prebuilt to this horizon.
  Tick calendar_horizon = 0;
};

struct DroneBundle {
  SystemSpec sys;
  std::shared_ptr<const DroneAnalysis> analysis;
  std::string module_name; // empty for the single-controller wirings
  std::string dm_name;
};

// Assembles topics and nodes. Pass a precomputed analysis to share the
// construction across bundles; nullptr recomputes it.
DroneBundle make_drone(const DroneOptions& opts,
                       std::shared_ptr<const DroneAnalysis> analysis = nullptr);

// Oracle for the wellformedness suite: lateral dynamics, lateral grid, and
// the recentering law as the closed-loop policy.
ModuleOracle drone_oracle(const DroneBundle& bundle);

}  // namespace rta
