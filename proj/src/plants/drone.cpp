#include "rta/plants/drone.hpp"

#include <algorithm>
#include <cmath>

#include "rta/rng.hpp"

namespace rta {
namespace {

constexpr double kAlign = 1e-9;

double cell_width(const DroneParams& p, int dim) {
  return dim == 0 ? (2.0 * p.d_bound) / static_cast<double>(p.res_d)
                  : (2.0 * p.v_lat_max) / static_cast<double>(p.res_vd);
}

std::vector<Control> lateral_alphabet(const DroneParams& p) {
  return {{-p.a_lat}, {-p.a_lat / 2.0}, {0.0}, {p.a_lat / 2.0}, {p.a_lat}};
}

// Exact interval image of one lateral cell under one control: both updated
// coordinates are affine except for the clamps, and the clamps are monotone,
// so the corner evaluations bound every in-cell state's image with no
// inflation.
CellImageFn cell_image(const DroneParams& p, std::vector<Control> us) {
  return [p, us = std::move(us)](const Box& cell,
                                 std::size_t control) -> std::vector<Box> {
    double a = us.at(control)[0];
    auto vstep = [&](double vd) {
      return std::clamp(vd + a, -p.v_lat_max, p.v_lat_max);
    };
    double v2_lo = vstep(cell.lo[1]);
    double v2_hi = vstep(cell.hi[1]);
    double d2_lo = std::clamp(cell.lo[0] + v2_lo, -p.d_bound, p.d_bound);
    double d2_hi = std::clamp(cell.hi[0] + v2_hi, -p.d_bound, p.d_bound);
    return {Box{{d2_lo, v2_lo}, {d2_hi, v2_hi}}};
  };
}

NodeSpec make_plant(const DroneParams& p) {
  NodeSpec plant;
  plant.name = "dronePlant";
  plant.inputs = {"droneCmd"};
  plant.outputs = {"droneLat", "droneAxial"};
  plant.period = 1;
  plant.initial_state = p.initial;
  DynamicsModel lat = drone_lateral_dynamics(p);
  plant.transition = [p, lat](const LocalState& ls, const Valuation& in) {
    DroneState2D s = std::any_cast<DroneState2D>(ls);
    double ax = 0.0, alat = 0.0;
    if (auto it = in.find("droneCmd"); it != in.end())
      if (const auto* v = std::get_if<std::vector<double>>(&it->second))
        if (v->size() == 2) ax = (*v)[0], alat = (*v)[1];
    // Axial commands clamp to the drive authority; lateral commands snap
    // onto the alphabet the reachability analysis considered.
    ax = std::clamp(ax, -p.a_ax, p.a_ax);
    alat = lat.snap({alat})[0];
    DroneState2D next = drone_step(s, ax, alat, p);
    StepResult r;
    r.next_state = next;
    r.outputs["droneLat"] = State{next.p[1], next.v[1]};
    r.outputs["droneAxial"] = State{next.p[0], next.v[0]};
    return r;
  };
  return plant;
}

DroneState2D read_drone_state(const Valuation& in, const DroneState2D& fallback) {
  DroneState2D s = fallback;
  if (auto it = in.find("droneLat"); it != in.end())
    if (const auto* v = std::get_if<std::vector<double>>(&it->second))
      if (v->size() == 2) s.p[1] = (*v)[0], s.v[1] = (*v)[1];
  if (auto it = in.find("droneAxial"); it != in.end())
    if (const auto* v = std::get_if<std::vector<double>>(&it->second))
      if (v->size() == 2) s.p[0] = (*v)[0], s.v[0] = (*v)[1];
  return s;
}

NodeSpec make_ac(const DroneParams& p) {
  NodeSpec node;
  node.name = "droneAc";
  node.inputs = {"droneLat", "droneAxial"};
  node.outputs = {"droneCmd"};
  node.period = 1;
  node.initial_state = p.kick_seed;
  DroneState2D fallback = p.initial;
  std::array<double, 2> target = p.tube.b;
  node.transition = [p, fallback, target](const LocalState& ls,
                                          const Valuation& in) {
    DroneState2D s = read_drone_state(in, fallback);
    auto cmd = goto_ac(s, target, p);
    Rng rng(std::any_cast<std::uint64_t>(ls));
    if (p.kick > 0.0) cmd[1] += rng.range(-p.kick, p.kick);
    StepResult r;
    r.next_state = rng.state;
    r.outputs["droneCmd"] = State{cmd[0], cmd[1]};
    return r;
  };
  return node;
}

NodeSpec make_sc(const DroneParams& p) {
  NodeSpec node;
  node.name = "droneSc";
  node.inputs = {"droneLat", "droneAxial"};
  node.outputs = {"droneCmd"};
  node.period = 1;
  node.initial_state = LocalState{};
  DroneState2D fallback = p.initial;
  node.transition = [p, fallback](const LocalState& ls, const Valuation& in) {
    DroneState2D s = read_drone_state(in, fallback);
    double ax = std::clamp(0.5 * (p.vx_crawl - s.v[0]), -p.a_ax, p.a_ax);
    StepResult r;
    r.next_state = ls;
    r.outputs["droneCmd"] = State{ax, goto_sc(s.p[1], s.v[1], p)};
    return r;
  };
  return node;
}

}  // namespace

double tube_distance(const std::array<double, 2>& x, const TubeSpec& tube) {
  double ux = tube.b[0] - tube.a[0];
  double uy = tube.b[1] - tube.a[1];
  double wx = x[0] - tube.a[0];
  double wy = x[1] - tube.a[1];
  return std::abs(ux * wy - uy * wx) / std::hypot(ux, uy);
}

DroneState2D drone_step(const DroneState2D& s, double ax, double a_lat,
                        const DroneParams& p) {
  DroneState2D n;
  n.v[0] = std::clamp(s.v[0] + ax, 0.0, p.vx_max);
  n.v[1] = std::clamp(s.v[1] + a_lat, -p.v_lat_max, p.v_lat_max);
  n.p[0] = s.p[0] + n.v[0];
  n.p[1] = std::clamp(s.p[1] + n.v[1], -p.d_bound, p.d_bound);
  return n;
}

std::array<double, 2> goto_ac(const DroneState2D& s,
                              const std::array<double, 2>& target,
                              const DroneParams& p) {
  double g = p.overshoot_gain;
  double ax = p.ac_kp_ax * (target[0] - s.p[0]) - p.ac_kd_ax * s.v[0];
  double alat =
      g * p.ac_kp * (target[1] - s.p[1]) - (2.0 - g) * p.ac_kd * s.v[1];
  return {ax, alat};
}

double goto_sc(double d, double vd, const DroneParams& p) {
  double raw = -p.sc_kp * d - p.sc_kd * vd;
  double best = -p.a_lat;
  for (double u : {-p.a_lat, -p.a_lat / 2.0, 0.0, p.a_lat / 2.0, p.a_lat})
    if (std::abs(u - raw) < std::abs(best - raw)) best = u;
  return best;
}

DynamicsModel drone_lateral_dynamics(const DroneParams& p) {
  DynamicsModel dyn;
  dyn.dims = 2;
  dyn.lo = {-p.d_bound, -p.v_lat_max};
  dyn.hi = {p.d_bound, p.v_lat_max};
  dyn.controls = lateral_alphabet(p);
  dyn.dt = 1;
  dyn.step = [p](const State& s, const Control& u) -> State {
    double vd = std::clamp(s[1] + u[0], -p.v_lat_max, p.v_lat_max);
    double d = std::clamp(s[0] + vd, -p.d_bound, p.d_bound);
    return {d, vd};
  };
  return dyn;
}

GridSpec drone_lateral_grid(const DroneParams& p) {
  return GridSpec({-p.d_bound, -p.v_lat_max}, {p.d_bound, p.v_lat_max},
                  {p.res_d, p.res_vd});
}

DroneAnalysis drone_analysis(const DroneParams& p) {
  DroneAnalysis a;
  a.params = p;
  a.model.dyn = drone_lateral_dynamics(p);
  a.model.grid = drone_lateral_grid(p);
  a.model.image = cell_image(p, a.model.dyn.controls);

  const GridSpec& g = a.model.grid;
  double wd = cell_width(p, 0);

  // In-tube cells: the whole cell box strictly inside the corridor. A cell
  // whose face sits on the boundary line still contains one excluded state.
  RegionMask stay(g.cell_count());
  for (std::size_t c = 0; c < g.cell_count(); ++c) {
    auto coords = g.coords_of(c);
    double lo_d = -p.d_bound + static_cast<double>(coords[0]) * wd;
    double hi_d = lo_d + wd;
    stay.set(c, lo_d > -p.tube.eps + kAlign && hi_d < p.tube.eps - kAlign);
  }

  // Tiebreak toward the axis: among staying controls prefer the one whose
  // worst successor sits closest to the centerline.
  a.kernel = solve_kernel(a.model, stay,
                          [](const State& s) { return std::abs(s[0]); });
  a.safe = a.kernel.kernel;
  a.safer = robust_shrink2(a.model, a.safe);
  return a;
}

DroneBundle make_drone(const DroneOptions& opts,
                       std::shared_ptr<const DroneAnalysis> analysis) {
  const DroneParams& p = opts.params;
  DroneBundle bundle;
  bundle.analysis = analysis ? std::move(analysis)
                             : std::make_shared<const DroneAnalysis>(
                                   drone_analysis(p));
  auto a = bundle.analysis;

  SystemSpec& sys = bundle.sys;
  sys.topics.emplace_back("droneLat", ValueDomain::vector(2),
                          Value(State{p.initial.p[1], p.initial.v[1]}));
  sys.topics.emplace_back("droneAxial", ValueDomain::vector(2),
                          Value(State{p.initial.p[0], p.initial.v[0]}));
  sys.topics.emplace_back("droneCmd", ValueDomain::vector(2),
                          Value(State{0.0, 0.0}));
  sys.topics.emplace_back("doneFlag", ValueDomain::scalar(), Value(0.0));

  add_free_node(sys, make_plant(p));
  add_free_node(sys, make_flag_node("doneWatch", "droneAxial", "doneFlag", 2,
                                    [done = p.done_x](const State& s) {
                                      return s[0] >= done ? 1.0 : 0.0;
                                    }));

  if (opts.wiring == WiringMode::ac_only) {
    add_free_node(sys, make_ac(p));
  } else if (opts.wiring == WiringMode::sc_only) {
    add_free_node(sys, make_sc(p));
  } else {
    ModuleSpec m;
    m.name = "droneTube";
    m.ac = make_ac(p);
    m.sc = make_sc(p);
    m.delta = p.delta;
    m.state_topic = "droneLat";
    m.safe = SafetyPredicate::from_mask(a->model.grid, a->safe);
    m.safer = SafetyPredicate::from_mask(a->model.grid, a->safer);
    auto dyn = a->model.dyn;
    auto grid = a->model.grid;
    auto safe_mask = a->safe;
    auto stays = [dyn, grid, safe_mask](const State& s, int steps) {
      auto c0 = grid.cell_of(s);
      if (!c0 || !safe_mask.test(*c0)) return false;
      std::vector<State> frontier{s};
      for (int k = 0; k < steps; ++k) {
        std::vector<State> next;
        next.reserve(frontier.size() * dyn.controls.size());
        for (const auto& x : frontier) {
          for (const auto& u : dyn.controls) {
            State y = dyn.step(x, u);
            auto c = grid.cell_of(y);
            if (!c || !safe_mask.test(*c)) return false;
            next.push_back(std::move(y));
          }
        }
        frontier.swap(next);
      }
      return true;
    };
    m.ttf2d = [stays, two = 2 * static_cast<int>(p.delta)](const State& s) {
      return !stays(s, two);
    };
    m.inv_ac = [stays, one = static_cast<int>(p.delta)](const State& s) {
      return stays(s, one);
    };
    add_module(sys, m);
    bundle.module_name = m.name;
    bundle.dm_name = sys.modules.back().dm_name;
  }

  if (opts.calendar_horizon > 0) {
    std::vector<NodeSpec> nodes;
    for (const auto& [name, node] : sys.nodes) nodes.push_back(node);
    sys.calendar = make_calendar(nodes, opts.calendar_horizon);
  }
  return bundle;
}

ModuleOracle drone_oracle(const DroneBundle& bundle) {
  auto a = bundle.analysis;
  ModuleOracle oracle;
  oracle.dyn = a->model.dyn;
  oracle.grid = a->model.grid;
  DroneParams p = a->params;
  oracle.sc_policy = [p](const State& s) {
    return Control{goto_sc(s[0], s[1], p)};
  };
  return oracle;
}

}  // namespace rta
