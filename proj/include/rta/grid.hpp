#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "rta/types.hpp"

namespace rta {

// Uniform rectangular grid over a box [lo, hi). Cells are indexed row-major
// with the last dimension fastest. A point exactly on the upper face is
// folded into the last cell so closed boxes rasterize without holes.
struct GridSpec {
  std::vector<double> lo;
  std::vector<double> hi;
  std::vector<int> res;

  GridSpec() = default;
  GridSpec(std::vector<double> lo_, std::vector<double> hi_, std::vector<int> res_);

  int dims() const { return static_cast<int>(res.size()); }
  std::size_t cell_count() const;
  double cell_width(int dim) const;

  std::optional<std::size_t> cell_of(const State& s) const;
  State center_of(std::size_t index) const;
  std::vector<int> coords_of(std::size_t index) const;
  std::size_t index_of(const std::vector<int>& coords) const;
  // Cell corners plus the center; used for conservative per-cell sampling.
  std::vector<State> cell_samples(std::size_t index, bool corners) const;

  bool operator==(const GridSpec&) const = default;
};

}  // namespace rta
