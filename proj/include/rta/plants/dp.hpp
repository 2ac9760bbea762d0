#pragma once

#include <cstddef>
#include <functional>
#include <vector>

#include "rta/dynamics.hpp"
#include "rta/grid.hpp"
#include "rta/mask.hpp"
#include "rta/predicate.hpp"

namespace rta {

// Grid dynamic programming over interval images. The plant describes, for
// one cell box and one control, a union of axis-aligned boxes covering every
// exact image of every state in the cell; the solvers then only ever reason
// about the grid cells those boxes touch. Guarantees proved this way hold
// for every exact state in a cell, not just its center, which is what lets
// the runtime trajectory inherit them. Clamped monotone dynamics admit exact
// boxes from corner evaluations; curvature terms need a small inflation.
using CellImageFn =
    std::function<std::vector<Box>(const Box& cell, std::size_t control)>;

struct RobustModel {
  DynamicsModel dyn;
  GridSpec grid;
  CellImageFn image;

  // The box spanned by one cell.
  Box cell_box(std::size_t cell) const;

  // Cells touched by the image boxes of one (cell, control) pair. An image
  // box that pokes outside the grid is reported through `escapes` instead
  // of being clipped.
  std::vector<std::size_t> successor_cells(std::size_t cell,
                                           std::size_t control,
                                           bool* escapes = nullptr) const;
};

// Greatest control-invariant subset of `stay`: from every kernel cell the
// chosen control provably keeps the next state in the kernel. `score`
// breaks ties among staying controls by the worst successor-center score,
// steering the closed loop toward low-score cells.
struct InvariantKernel {
  RegionMask kernel;
  std::vector<int> policy;
};

InvariantKernel solve_kernel(const RobustModel& model, const RegionMask& stay,
                             std::function<double(const State&)> score = {});

// Two-step robust shrink of `phi`: every cell whose one-step image cells
// stay in phi under every control, and whose image cells do so again. A
// sound per-exact-state version of the two-period region shrink, used for
// the hand-back region: any state anywhere in a certified cell keeps the
// plant in phi for the next two steps no matter what the controller does.
RegionMask robust_shrink2(const RobustModel& model, const RegionMask& phi);

// The closed-loop policy induced by a per-cell control table; cells with no
// entry fall back to `fallback`.
std::function<Control(const State&)> table_policy(const RobustModel& model,
                                                  std::vector<int> table,
                                                  Control fallback);

}  // namespace rta
