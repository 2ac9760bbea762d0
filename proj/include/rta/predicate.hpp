#pragma once

#include <functional>
#include <optional>

#include "rta/mask.hpp"

namespace rta {

struct GridRegion {
  GridSpec grid;
  RegionMask mask;
};

struct Box {
  std::vector<double> lo;
  std::vector<double> hi;

  bool contains(const State& s) const {
    if (s.size() != lo.size()) return false;
    for (size_t i = 0; i < lo.size(); ++i) {
      if (s[i] < lo[i] || s[i] > hi[i]) return false;
    }
    return true;
  }
};

// Membership test over plant states, optionally backed by an explicit region
// (grid mask or axis-aligned box) that the reachability checks can consume.
// When a region is present the membership handle is derived from it, so the
// two views agree on every grid point by construction.
struct SafetyPredicate {
  std::function<bool(const State&)> membership;
  std::optional<GridRegion> region;
  std::optional<Box> box;

  bool contains(const State& s) const { return membership && membership(s); }

  static SafetyPredicate from_fn(std::function<bool(const State&)> fn);
  static SafetyPredicate from_mask(GridSpec grid, RegionMask mask);
  static SafetyPredicate from_box(Box box);
};

// Rasterize a box predicate onto a grid: a cell belongs iff its center does.
RegionMask rasterize_box(const Box& box, const GridSpec& grid);

}  // namespace rta
