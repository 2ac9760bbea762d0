#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "rta/grid.hpp"

namespace rta {

// Boolean region over a grid, stored row-major.
struct RegionMask {
  std::vector<std::uint8_t> cells;

  RegionMask() = default;
  explicit RegionMask(std::size_t n, bool value = false)
      : cells(n, value ? 1 : 0) {}

  bool test(std::size_t i) const { return cells[i] != 0; }
  void set(std::size_t i, bool v = true) { cells[i] = v ? 1 : 0; }
  std::size_t size() const { return cells.size(); }
  std::size_t count() const;
  bool subset_of(const RegionMask& other) const;
  bool operator==(const RegionMask&) const = default;
};

RegionMask mask_and(const RegionMask& a, const RegionMask& b);

// Membership of a point: false outside the grid.
bool mask_contains(const GridSpec& grid, const RegionMask& mask, const State& s);

// Distance from s to the complement of the region (other mask cells, or the
// grid hull), shrunk by the half-diagonal of a cell so the estimate never
// exceeds the true distance to the region boundary. Zero if s is outside.
double distance_to_boundary(const GridSpec& grid, const RegionMask& mask,
                            const State& s);

// Textual grid file: header with dims/res/lo/hi, then row-major 0/1 data.
void save_mask(std::ostream& out, const GridSpec& grid, const RegionMask& mask);
void save_mask_file(const std::string& path, const GridSpec& grid,
                    const RegionMask& mask);
std::pair<GridSpec, RegionMask> load_mask(std::istream& in);
std::pair<GridSpec, RegionMask> load_mask_file(const std::string& path);

}  // namespace rta
