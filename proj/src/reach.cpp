#include "rta/reach.hpp"

#include <cmath>
#include <deque>
#include <limits>
#include <set>

namespace rta {

Control DynamicsModel::snap(const Control& u) const {
  if (controls.empty()) return u;
  const Control* best = &controls.front();
  double best_d = std::numeric_limits<double>::infinity();
  for (const auto& cand : controls) {
    double d = 0.0;
    for (size_t i = 0; i < cand.size() && i < u.size(); ++i) {
      d = std::max(d, std::abs(cand[i] - u[i]));
    }
    if (d < best_d) {
      best_d = d;
      best = &cand;
    }
  }
  return *best;
}

namespace {

Tick layers_for(Tick t, Tick dt) {
  if (t <= 0) return 0;
  return (t + dt - 1) / dt;  // ceil(t / dt)
}

void require_inside(const State& s, const GridSpec& grid) {
  if (!grid.cell_of(s)) {
    fail(Errc::out_of_bounds_state, "start state outside the grid");
  }
}

}  // namespace

RegionMask reach_star(const State& s, Tick t, const DynamicsModel& dyn,
                      const GridSpec& grid) {
  require_inside(s, grid);
  RegionMask mask(grid.cell_count());
  mask.set(*grid.cell_of(s));

  std::set<State> frontier{s};
  std::set<State> seen{s};
  Tick layers = layers_for(t, dyn.dt);
  for (Tick layer = 0; layer < layers; ++layer) {
    std::set<State> next;
    for (const auto& x : frontier) {
      for (const auto& u : dyn.controls) {
        State y = dyn.step(x, u);
        if (auto c = grid.cell_of(y)) mask.set(*c);
        if (seen.insert(y).second) next.insert(std::move(y));
      }
    }
    frontier.swap(next);
    if (frontier.empty()) break;
  }
  return mask;
}

RegionMask reach_sc(const State& s, Tick t, const PolicyFn& policy,
                    const DynamicsModel& dyn, const GridSpec& grid) {
  require_inside(s, grid);
  RegionMask mask(grid.cell_count());
  mask.set(*grid.cell_of(s));
  State x = s;
  Tick layers = layers_for(t, dyn.dt);
  for (Tick i = 0; i < layers; ++i) {
    x = dyn.step(x, policy(x));
    if (auto c = grid.cell_of(x)) mask.set(*c);
  }
  return mask;
}

RegionMask reach_sc_fixpoint(const RegionMask& start, const PolicyFn& policy,
                             const DynamicsModel& dyn, const GridSpec& grid) {
  RegionMask visited = start;
  std::deque<std::size_t> work;
  for (std::size_t i = 0; i < start.size(); ++i) {
    if (start.test(i)) work.push_back(i);
  }
  while (!work.empty()) {
    std::size_t cell = work.front();
    work.pop_front();
    State x = grid.center_of(cell);
    State y = dyn.step(x, policy(x));
    auto c = grid.cell_of(y);
    if (!c) continue;  // left the gridded domain; nothing further to expand
    if (!visited.test(*c)) {
      visited.set(*c);
      work.push_back(*c);
    }
  }
  return visited;
}

namespace {

// Containment of every state strictly after the start; the caller vouches for
// the start itself. Keeps corner samples from being charged to a neighbor.
bool successors_stay_within(const State& s, Tick t, const DynamicsModel& dyn,
                            const GridSpec& grid, const RegionMask& phi) {
  std::set<State> frontier{s};
  std::set<State> seen{s};
  Tick layers = layers_for(t, dyn.dt);
  for (Tick layer = 0; layer < layers; ++layer) {
    std::set<State> next;
    for (const auto& x : frontier) {
      for (const auto& u : dyn.controls) {
        State y = dyn.step(x, u);
        auto c = grid.cell_of(y);
        if (!c || !phi.test(*c)) return false;
        if (seen.insert(y).second) next.insert(std::move(y));
      }
    }
    frontier.swap(next);
    if (frontier.empty()) break;
  }
  return true;
}

}  // namespace

bool reach_stays_within(const State& s, Tick t, const DynamicsModel& dyn,
                        const GridSpec& grid, const RegionMask& phi) {
  auto start = grid.cell_of(s);
  if (!start || !phi.test(*start)) return false;
  return successors_stay_within(s, t, dyn, grid, phi);
}

RegionMask region_shrink(const RegionMask& phi, Tick t, const DynamicsModel& dyn,
                         const GridSpec& grid, Sampling sampling) {
  RegionMask out(grid.cell_count());
  bool corners = sampling == Sampling::center_and_corners;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    if (!phi.test(i)) continue;
    bool ok = true;
    for (const auto& s : grid.cell_samples(i, corners)) {
      if (!successors_stay_within(s, t, dyn, grid, phi)) {
        ok = false;
        break;
      }
    }
    out.set(i, ok);
  }
  return out;
}

}  // namespace rta
