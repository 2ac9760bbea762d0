#pragma once

#include "rta/predicate.hpp"
#include "rta/reach.hpp"

namespace rta {

// Failure possible within two_delta: s is outside phi, or some control
// sequence drives the system out of phi before the lookahead expires.
bool ttf_grid(const State& s, const RegionMask& phi_safe, Tick two_delta,
              const DynamicsModel& dyn, const GridSpec& grid);

// Lipschitz bound: the system cannot cross boundary_distance faster than
// l_u per tick, so failure is possible iff distance / l_u <= two_delta.
bool ttf_lipschitz(double boundary_distance, double l_u, Tick two_delta);

// Battery form: failure iff remaining charge minus the worst-case spend over
// the lookahead dips below the reserve needed to reach a charger.
bool ttf_battery(double b, double cost_star, double t_max);

// Worst-case discharge over two_delta, maximized over the control set.
double cost_star(const DynamicsModel& battery_dyn, Tick two_delta);

// Max-velocity ball: true iff some point within v_max * two_delta of s
// (axiswise) falls outside phi_safe. Exact for box and grid regions; for
// membership-only predicates the ball is probed at corners, face centers
// and the center, which is an approximation.
bool ttf_vmax(const State& s, const SafetyPredicate& phi_safe, double v_max,
              Tick two_delta);

}  // namespace rta
