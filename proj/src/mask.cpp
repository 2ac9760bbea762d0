#include "rta/mask.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <sstream>

#include "rta/value.hpp"

namespace rta {

std::size_t RegionMask::count() const {
  std::size_t n = 0;
  for (auto c : cells) n += c ? 1 : 0;
  return n;
}

bool RegionMask::subset_of(const RegionMask& other) const {
  if (cells.size() != other.cells.size()) return false;
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i] && !other.cells[i]) return false;
  }
  return true;
}

RegionMask mask_and(const RegionMask& a, const RegionMask& b) {
  RegionMask out(a.size());
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) {
    out.cells[i] = (a.cells[i] && b.cells[i]) ? 1 : 0;
  }
  return out;
}

bool mask_contains(const GridSpec& grid, const RegionMask& mask, const State& s) {
  auto c = grid.cell_of(s);
  return c && mask.test(*c);
}

double distance_to_boundary(const GridSpec& grid, const RegionMask& mask,
                            const State& s) {
  if (!mask_contains(grid, mask, s)) return 0.0;
  double half_diag = 0.0;
  for (int d = 0; d < grid.dims(); ++d) {
    half_diag += 0.25 * grid.cell_width(d) * grid.cell_width(d);
  }
  half_diag = std::sqrt(half_diag);

  double best = std::numeric_limits<double>::infinity();
  // Distance to the grid hull is exact.
  for (int d = 0; d < grid.dims(); ++d) {
    best = std::min(best, s[d] - grid.lo[d]);
    best = std::min(best, grid.hi[d] - s[d]);
  }
  // Distance to the nearest complement cell, via its center minus half a
  // diagonal so the result underestimates the true boundary distance.
  for (std::size_t i = 0; i < mask.size(); ++i) {
    if (mask.test(i)) continue;
    State c = grid.center_of(i);
    double sq = 0.0;
    for (int d = 0; d < grid.dims(); ++d) sq += (c[d] - s[d]) * (c[d] - s[d]);
    best = std::min(best, std::sqrt(sq) - half_diag);
  }
  return std::max(0.0, best);
}

void save_mask(std::ostream& out, const GridSpec& grid, const RegionMask& mask) {
  out << "regionmask 1\n";
  out << "dims " << grid.dims() << "\n";
  out << "res";
  for (int r : grid.res) out << ' ' << r;
  out << "\nlo";
  for (double x : grid.lo) out << ' ' << format_double(x);
  out << "\nhi";
  for (double x : grid.hi) out << ' ' << format_double(x);
  out << "\ndata\n";
  // One row per slowest index; purely cosmetic, data is row-major.
  std::size_t row = grid.dims() > 0 ? mask.size() / static_cast<std::size_t>(grid.res[0])
                                    : mask.size();
  if (row == 0) row = 1;
  for (std::size_t i = 0; i < mask.size(); ++i) {
    out << (mask.test(i) ? '1' : '0');
    if ((i + 1) % row == 0) out << '\n';
  }
  if (mask.size() % row != 0) out << '\n';
}

void save_mask_file(const std::string& path, const GridSpec& grid,
                    const RegionMask& mask) {
  std::ofstream out(path);
  if (!out) fail(Errc::io_error, "cannot write '" + path + "'");
  save_mask(out, grid, mask);
}

std::pair<GridSpec, RegionMask> load_mask(std::istream& in) {
  std::string word;
  int version = 0;
  if (!(in >> word >> version) || word != "regionmask" || version != 1) {
    fail(Errc::io_error, "bad mask header");
  }
  int dims = 0;
  if (!(in >> word >> dims) || word != "dims" || dims <= 0) {
    fail(Errc::io_error, "bad mask dims");
  }
  std::vector<int> res(static_cast<size_t>(dims));
  std::vector<double> lo(static_cast<size_t>(dims)), hi(static_cast<size_t>(dims));
  if (!(in >> word) || word != "res") fail(Errc::io_error, "bad mask res");
  for (auto& r : res) in >> r;
  if (!(in >> word) || word != "lo") fail(Errc::io_error, "bad mask lo");
  for (auto& x : lo) in >> x;
  if (!(in >> word) || word != "hi") fail(Errc::io_error, "bad mask hi");
  for (auto& x : hi) in >> x;
  if (!(in >> word) || word != "data") fail(Errc::io_error, "bad mask data marker");

  GridSpec grid(lo, hi, res);
  RegionMask mask(grid.cell_count());
  std::size_t i = 0;
  char ch;
  while (i < mask.size() && in.get(ch)) {
    if (ch == '0' || ch == '1') mask.set(i++, ch == '1');
  }
  if (i != mask.size()) fail(Errc::io_error, "mask data truncated");
  return {grid, mask};
}

std::pair<GridSpec, RegionMask> load_mask_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::io_error, "cannot read '" + path + "'");
  return load_mask(in);
}

}  // namespace rta
