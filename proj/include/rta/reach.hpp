#pragma once

#include <functional>

#include "rta/dynamics.hpp"
#include "rta/mask.hpp"

namespace rta {

// Deterministic feedback law; must return elements of the model's control set
// whenever its closed loop is compared against open-loop reach sets.
using PolicyFn = std::function<Control(const State&)>;

enum class Sampling { center, center_and_corners };

// Cells visited within [0, t] from s under every control sequence over U.
// Exact enumeration with exact-state dedup; layers = ceil(t / dt).
RegionMask reach_star(const State& s, Tick t, const DynamicsModel& dyn,
                      const GridSpec& grid);

// Cells visited by the single closed-loop trajectory from s over [0, t].
RegionMask reach_sc(const State& s, Tick t, const PolicyFn& policy,
                    const DynamicsModel& dyn, const GridSpec& grid);

// Infinite-horizon closed-loop reach at cell granularity: start from every
// cell of `start`, step cell centers through the policy, iterate to fixpoint.
RegionMask reach_sc_fixpoint(const RegionMask& start, const PolicyFn& policy,
                             const DynamicsModel& dyn, const GridSpec& grid);

// R(phi, t): cells of phi whose sampled states cannot leave phi within t.
RegionMask region_shrink(const RegionMask& phi, Tick t, const DynamicsModel& dyn,
                         const GridSpec& grid,
                         Sampling sampling = Sampling::center);

// True iff every state visited within [0, t] from s stays inside phi.
// Early-exit variant of reach_star + containment, shared by region_shrink.
bool reach_stays_within(const State& s, Tick t, const DynamicsModel& dyn,
                        const GridSpec& grid, const RegionMask& phi);

}  // namespace rta
