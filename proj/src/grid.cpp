#include "rta/grid.hpp"

#include <cmath>

namespace rta {

GridSpec::GridSpec(std::vector<double> lo_, std::vector<double> hi_,
                   std::vector<int> res_)
    : lo(std::move(lo_)), hi(std::move(hi_)), res(std::move(res_)) {
  if (lo.size() != hi.size() || lo.size() != res.size()) {
    fail(Errc::malformed_spec, "grid lo/hi/res size mismatch");
  }
  for (size_t i = 0; i < res.size(); ++i) {
    if (res[i] <= 0 || !(lo[i] < hi[i])) {
      fail(Errc::malformed_spec, "grid axis " + std::to_string(i) + " is degenerate");
    }
  }
}

std::size_t GridSpec::cell_count() const {
  std::size_t n = 1;
  for (int r : res) n *= static_cast<std::size_t>(r);
  return n;
}

double GridSpec::cell_width(int dim) const {
  return (hi[dim] - lo[dim]) / res[dim];
}

std::optional<std::size_t> GridSpec::cell_of(const State& s) const {
  if (static_cast<int>(s.size()) != dims()) return std::nullopt;
  std::size_t idx = 0;
  for (int d = 0; d < dims(); ++d) {
    if (s[d] < lo[d] || s[d] > hi[d]) return std::nullopt;
    int c = static_cast<int>(std::floor((s[d] - lo[d]) / cell_width(d)));
    if (c >= res[d]) c = res[d] - 1;  // upper face folds in
    if (c < 0) c = 0;
    idx = idx * static_cast<std::size_t>(res[d]) + static_cast<std::size_t>(c);
  }
  return idx;
}

std::vector<int> GridSpec::coords_of(std::size_t index) const {
  std::vector<int> c(static_cast<size_t>(dims()));
  for (int d = dims() - 1; d >= 0; --d) {
    c[d] = static_cast<int>(index % static_cast<std::size_t>(res[d]));
    index /= static_cast<std::size_t>(res[d]);
  }
  return c;
}

std::size_t GridSpec::index_of(const std::vector<int>& coords) const {
  std::size_t idx = 0;
  for (int d = 0; d < dims(); ++d) {
    idx = idx * static_cast<std::size_t>(res[d]) + static_cast<std::size_t>(coords[d]);
  }
  return idx;
}

State GridSpec::center_of(std::size_t index) const {
  auto c = coords_of(index);
  State s(static_cast<size_t>(dims()));
  for (int d = 0; d < dims(); ++d) {
    s[d] = lo[d] + (c[d] + 0.5) * cell_width(d);
  }
  return s;
}

std::vector<State> GridSpec::cell_samples(std::size_t index, bool corners) const {
  std::vector<State> out{center_of(index)};
  if (!corners) return out;
  auto c = coords_of(index);
  int n = dims();
  // 2^n corners of the cell box.
  for (int bits = 0; bits < (1 << n); ++bits) {
    State s(static_cast<size_t>(n));
    for (int d = 0; d < n; ++d) {
      double edge = lo[d] + c[d] * cell_width(d);
      s[d] = (bits >> d) & 1 ? edge + cell_width(d) : edge;
    }
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace rta
