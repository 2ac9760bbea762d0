#include "rta/plants/dp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "rta/types.hpp"

namespace rta {
namespace {

// Appends every cell the box touches. Index ranges mirror cell_of: lower
// faces inclusive, a coordinate exactly on the grid's upper face folds into
// the last cell. Any part of the box outside the grid sets `escapes`.
void collect_box_cells(const GridSpec& grid, const Box& box,
                       std::vector<std::size_t>& out, bool* escapes) {
  int dims = grid.dims();
  std::vector<int> lo_i(dims), hi_i(dims);
  for (int d = 0; d < dims; ++d) {
    if (box.lo[d] < grid.lo[d] || box.hi[d] > grid.hi[d]) {
      if (escapes) *escapes = true;
      return;
    }
    double w = grid.cell_width(d);
    lo_i[d] = std::min(static_cast<int>((box.lo[d] - grid.lo[d]) / w),
                       grid.res[d] - 1);
    hi_i[d] = std::min(static_cast<int>((box.hi[d] - grid.lo[d]) / w),
                       grid.res[d] - 1);
  }
  std::vector<int> coords = lo_i;
  while (true) {
    std::size_t c = grid.index_of(coords);
    if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    int d = dims - 1;
    while (d >= 0 && ++coords[d] > hi_i[d]) coords[d] = lo_i[d], --d;
    if (d < 0) break;
  }
}

}  // namespace

Box RobustModel::cell_box(std::size_t cell) const {
  auto coords = grid.coords_of(cell);
  Box box;
  box.lo.resize(coords.size());
  box.hi.resize(coords.size());
  for (std::size_t d = 0; d < coords.size(); ++d) {
    double w = grid.cell_width(static_cast<int>(d));
    box.lo[d] = grid.lo[d] + coords[d] * w;
    box.hi[d] = box.lo[d] + w;
  }
  return box;
}

std::vector<std::size_t> RobustModel::successor_cells(std::size_t cell,
                                                      std::size_t control,
                                                      bool* escapes) const {
  if (!image) fail(Errc::domain_mismatch, "robust model lacks an image map");
  std::vector<std::size_t> out;
  for (const Box& b : image(cell_box(cell), control))
    collect_box_cells(grid, b, out, escapes);
  return out;
}

InvariantKernel solve_kernel(const RobustModel& model, const RegionMask& stay,
                             std::function<double(const State&)> score) {
  std::size_t cells = model.grid.cell_count();
  std::size_t nctrl = model.dyn.controls.size();

  std::vector<std::vector<std::size_t>> succ(cells * nctrl);
  std::vector<bool> escapes(cells * nctrl, false);
  for (std::size_t c = 0; c < cells; ++c) {
    if (!stay.test(c)) continue;
    for (std::size_t u = 0; u < nctrl; ++u) {
      bool esc = false;
      succ[c * nctrl + u] = model.successor_cells(c, u, &esc);
      escapes[c * nctrl + u] = esc;
    }
  }

  InvariantKernel out;
  out.kernel = stay;
  bool shrank = true;
  while (shrank) {
    shrank = false;
    for (std::size_t c = 0; c < cells; ++c) {
      if (!out.kernel.test(c)) continue;
      bool viable = false;
      for (std::size_t u = 0; u < nctrl && !viable; ++u) {
        if (escapes[c * nctrl + u]) continue;
        viable = true;
        for (std::size_t n : succ[c * nctrl + u]) {
          if (!out.kernel.test(n)) {
            viable = false;
            break;
          }
        }
      }
      if (!viable) {
        out.kernel.set(c, false);
        shrank = true;
      }
    }
  }

  out.policy.assign(cells, -1);
  for (std::size_t c = 0; c < cells; ++c) {
    if (!out.kernel.test(c)) continue;
    double best_score = std::numeric_limits<double>::infinity();
    for (std::size_t u = 0; u < nctrl; ++u) {
      if (escapes[c * nctrl + u]) continue;
      bool stays = true;
      double worst = 0.0;
      for (std::size_t n : succ[c * nctrl + u]) {
        if (!out.kernel.test(n)) {
          stays = false;
          break;
        }
        if (score) worst = std::max(worst, score(model.grid.center_of(n)));
      }
      if (!stays) continue;
      if (!score) {
        out.policy[c] = static_cast<int>(u);
        break;
      }
      if (worst < best_score) {
        best_score = worst;
        out.policy[c] = static_cast<int>(u);
      }
    }
  }
  return out;
}

RegionMask robust_shrink2(const RobustModel& model, const RegionMask& phi) {
  std::size_t cells = model.grid.cell_count();
  std::size_t nctrl = model.dyn.controls.size();

  // step_ok[c]: every image of cell c stays in phi under every control.
  // Computed once, then the two-step condition is a lookup.
  std::vector<char> step_ok(cells, 0);
  std::vector<std::vector<std::size_t>> succ(cells * nctrl);
  for (std::size_t c = 0; c < cells; ++c) {
    if (!phi.test(c)) continue;
    bool ok = true;
    for (std::size_t u = 0; u < nctrl; ++u) {
      bool esc = false;
      succ[c * nctrl + u] = model.successor_cells(c, u, &esc);
      if (esc) ok = false;
      for (std::size_t n : succ[c * nctrl + u])
        if (!phi.test(n)) ok = false;
    }
    step_ok[c] = ok ? 1 : 0;
  }

  RegionMask out(cells);
  for (std::size_t c = 0; c < cells; ++c) {
    if (!step_ok[c]) continue;
    bool ok = true;
    for (std::size_t u = 0; u < nctrl && ok; ++u)
      for (std::size_t n : succ[c * nctrl + u])
        if (!step_ok[n]) {
          ok = false;
          break;
        }
    out.set(c, ok);
  }
  return out;
}

std::function<Control(const State&)> table_policy(const RobustModel& model,
                                                  std::vector<int> table,
                                                  Control fallback) {
  GridSpec grid = model.grid;
  std::vector<Control> controls = model.dyn.controls;
  return [grid, controls, table = std::move(table),
          fallback = std::move(fallback)](const State& s) -> Control {
    auto c = grid.cell_of(s);
    if (!c || table[*c] < 0) return fallback;
    return controls[static_cast<std::size_t>(table[*c])];
  };
}

}  // namespace rta
