#pragma once

#include <cstdint>

#include "rta/dynamics.hpp"
#include "rta/module.hpp"
#include "rta/plants/wiring.hpp"
#include "rta/system.hpp"

namespace rta {

// Charge management around a mission planner that never looks at the
// battery. The plant integrates charge percentage; the planner publishes a
// power draw per tick (with seeded bursts standing in for mission load),
// and the protective controller replaces it with a charge command until
// the hand-back threshold is cleared. State is the single charge value,
// command is one scalar: nonnegative values discharge by that cost,
// negative values charge at the magnitude.
struct BatteryParams {
  double b0 = 50.0;        // initial charge percentage
  double charge_rate = 2.0;
  double draw_base = 1.0;  // planner's steady draw per tick
  double draw_burst = 1.0; // extra draw while a seeded burst is active
  double t_max = 10.0;     // reserve needed to reach the charger
  double safer_threshold = 85.0;
  Tick delta = 1;
  std::uint64_t mission_seed = 1;
};

// One integration tick: charging saturates at 100, discharging at 0.
double battery_step(double b, double u, bool charging, const BatteryParams& p);

// Charge model over the command alphabet {charge, idle, base draw, burst
// draw}; drives the worst-case-spend bound behind the switching test.
DynamicsModel battery_dynamics(const BatteryParams& p);

struct BatteryOptions {
  BatteryParams params;
  WiringMode wiring = WiringMode::rta;
  Tick calendar_horizon = 0;
};

struct BatteryBundle {
  SystemSpec sys;
  std::string module_name; // empty for the single-controller wirings
  std::string dm_name;
};

// Assembles the battery system: plant, planner (AC), charge controller
// (SC), and the protective module whose envelopes are charge thresholds:
// safe is positive charge, the stronger envelope is charge above the
// hand-back threshold, and the switch test fires when the worst-case spend
// over two decision periods could dip below the reserve.
BatteryBundle make_battery(const BatteryOptions& opts);

}  // namespace rta
