#include "rta/ttf.hpp"

#include <algorithm>
#include <cmath>

namespace rta {

bool ttf_grid(const State& s, const RegionMask& phi_safe, Tick two_delta,
              const DynamicsModel& dyn, const GridSpec& grid) {
  return !reach_stays_within(s, two_delta, dyn, grid, phi_safe);
}

bool ttf_lipschitz(double boundary_distance, double l_u, Tick two_delta) {
  if (l_u <= 0.0) {
    fail(Errc::nonpositive_lipschitz, "control sensitivity bound must be positive");
  }
  return boundary_distance / l_u <= static_cast<double>(two_delta);
}

bool ttf_battery(double b, double cost_star, double t_max) {
  return b - cost_star < t_max;
}

double cost_star(const DynamicsModel& battery_dyn, Tick two_delta) {
  // Charge is one-dimensional; simulate each constant control from full
  // charge and take the largest drop. Nonlinear per-tick costs are covered
  // because the model's own step function is applied tick by tick.
  const double b0 = 100.0;
  Tick steps = two_delta <= 0 ? 0 : (two_delta + battery_dyn.dt - 1) / battery_dyn.dt;
  double worst = 0.0;
  for (const auto& u : battery_dyn.controls) {
    State b{b0};
    for (Tick i = 0; i < steps; ++i) b = battery_dyn.step(b, u);
    worst = std::max(worst, b0 - b[0]);
  }
  return worst;
}

namespace {

bool ball_inside_box(const State& s, double r, const Box& box) {
  if (s.size() != box.lo.size()) return false;
  for (size_t i = 0; i < s.size(); ++i) {
    if (s[i] - r < box.lo[i] || s[i] + r > box.hi[i]) return false;
  }
  return true;
}

bool ball_inside_grid_region(const State& s, double r, const GridRegion& region) {
  const GridSpec& grid = region.grid;
  // Every cell intersecting the closed axiswise ball must be in the mask,
  // and the ball must not poke outside the gridded domain.
  std::vector<int> lo_c(static_cast<size_t>(grid.dims()));
  std::vector<int> hi_c(static_cast<size_t>(grid.dims()));
  for (int d = 0; d < grid.dims(); ++d) {
    double a = s[d] - r;
    double b = s[d] + r;
    if (a < grid.lo[d] || b > grid.hi[d]) return false;
    lo_c[d] = std::clamp(static_cast<int>(std::floor((a - grid.lo[d]) / grid.cell_width(d))),
                         0, grid.res[d] - 1);
    hi_c[d] = std::clamp(static_cast<int>(std::floor((b - grid.lo[d]) / grid.cell_width(d))),
                         0, grid.res[d] - 1);
  }
  std::vector<int> c = lo_c;
  while (true) {
    if (!region.mask.test(grid.index_of(c))) return false;
    int d = grid.dims() - 1;
    while (d >= 0) {
      if (++c[d] <= hi_c[d]) break;
      c[d] = lo_c[d];
      --d;
    }
    if (d < 0) break;
  }
  return true;
}

}  // namespace

bool ttf_vmax(const State& s, const SafetyPredicate& phi_safe, double v_max,
              Tick two_delta) {
  if (v_max <= 0.0) {
    fail(Errc::malformed_spec, "v_max must be positive");
  }
  double r = v_max * static_cast<double>(two_delta);
  if (phi_safe.box) return !ball_inside_box(s, r, *phi_safe.box);
  if (phi_safe.region) return !ball_inside_grid_region(s, r, *phi_safe.region);

  // Membership-only fallback: probe the ball at its center, corners and face
  // centers. Documented as approximate.
  if (!phi_safe.contains(s)) return true;
  size_t n = s.size();
  for (size_t d = 0; d < n; ++d) {
    for (double sign : {-1.0, 1.0}) {
      State probe = s;
      probe[d] += sign * r;
      if (!phi_safe.contains(probe)) return true;
    }
  }
  for (int bits = 0; bits < (1 << n); ++bits) {
    State probe = s;
    for (size_t d = 0; d < n; ++d) {
      probe[d] += ((bits >> d) & 1) ? r : -r;
    }
    if (!phi_safe.contains(probe)) return true;
  }
  return false;
}

}  // namespace rta
