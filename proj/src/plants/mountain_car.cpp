#include "rta/plants/mountain_car.hpp"

#include <algorithm>
#include <cmath>

namespace rta {
namespace {

constexpr double kAlign = 1e-9;

double cell_width(const MountainCarParams& p, int dim) {
  return dim == 0 ? (p.x_max - p.x_min) / static_cast<double>(p.res_x)
                  : (2.0 * p.v_cap) / static_cast<double>(p.res_v);
}

// Exact interval image of one cell box under one control. Both updated
// coordinates are nondecreasing in (x, v), so the corner evaluations bound
// every in-cell state's image; only the cosine in the velocity update can
// peak between corners, covered by a second-order inflation. The terminal
// branches are resolved per cell because the goal and cliff lines lie on
// cell faces.
CellImageFn cell_image(const MountainCarParams& p, std::vector<Control> us) {
  double wx = cell_width(p, 0);
  // Interior overshoot of cos(3x) past its values at the cell faces.
  double curve = 9.0 * wx * wx / 8.0;
  return [p, curve, us = std::move(us)](const Box& cell,
                                        std::size_t control) -> std::vector<Box> {
    double a = us.at(control)[0];
    double xl = cell.lo[0], xh = cell.hi[0];
    double vl = cell.lo[1], vh = cell.hi[1];

    std::vector<Box> out;
    Box fallen{{p.x_min, 0.0}, {p.x_min, 0.0}};
    if (xl <= p.x_cliff + kAlign) out.push_back(fallen);
    if (xh <= p.x_cliff + kAlign) return out;
    if (xl >= p.x_goal - kAlign) {
      out.push_back(Box{{xl, 0.0}, {xh, 0.0}});
      return out;
    }

    double cl = std::cos(3.0 * xl);
    double ch = std::cos(3.0 * xh);
    auto vstep = [&](double v, double c) {
      return std::clamp(v + a * p.force - c * p.gravity, -p.v_cap, p.v_cap);
    };
    double v2_lo = vstep(vl, std::max(cl, ch) + curve);
    double v2_hi = vstep(vh, std::min(cl, ch) - curve);
    double x2_lo = std::clamp(xl + vstep(vl, cl), p.x_min, p.x_max);
    double x2_hi = std::clamp(xh + vstep(vh, ch), p.x_min, p.x_max);

    if (x2_lo <= p.x_cliff + kAlign) {
      if (out.empty()) out.push_back(fallen);
      x2_lo = p.x_cliff;
      if (x2_hi <= p.x_cliff + kAlign) return out;
    }
    out.push_back(Box{{x2_lo, v2_lo}, {x2_hi, v2_hi}});
    return out;
  };
}

NodeSpec make_plant(const MountainCarParams& p) {
  NodeSpec plant;
  plant.name = "carPlant";
  plant.inputs = {"carForce"};
  plant.outputs = {"carState"};
  plant.period = 1;
  plant.initial_state = p.initial;
  DynamicsModel dyn = mountain_car_dynamics(p);
  plant.transition = [p, dyn](const LocalState& ls, const Valuation& in) {
    State s = std::any_cast<State>(ls);
    double a = 0.0;
    if (auto it = in.find("carForce"); it != in.end())
      if (const double* x = std::get_if<double>(&it->second)) a = *x;
    // The commanded thrust is snapped onto the plant's control alphabet, so
    // every applied control is one the reachability analysis considered.
    a = dyn.snap({a})[0];
    State next = mountain_car_step(s, a, p);
    StepResult r;
    r.next_state = next;
    r.outputs["carState"] = next;
    return r;
  };
  return plant;
}

NodeSpec make_controller(std::string name, const MountainCarParams& p,
                         std::function<double(const State&)> law) {
  NodeSpec node;
  node.name = std::move(name);
  node.inputs = {"carState"};
  node.outputs = {"carForce"};
  node.period = 1;
  node.initial_state = LocalState{};
  State fallback = p.initial;
  node.transition = [law = std::move(law), fallback](const LocalState& ls,
                                                     const Valuation& in) {
    State s = fallback;
    if (auto it = in.find("carState"); it != in.end())
      if (const auto* v = std::get_if<std::vector<double>>(&it->second))
        s = *v;
    StepResult r;
    r.next_state = ls;
    r.outputs["carForce"] = law(s);
    return r;
  };
  return node;
}

std::function<double(const State&)> pump_law() {
  return [](const State& s) { return s[1] >= 0.0 ? 1.0 : -1.0; };
}

std::function<double(const State&)> dive_law() {
  return [](const State&) { return -1.0; };
}

std::function<double(const State&)> table_law(
    std::shared_ptr<const MountainCarAnalysis> a) {
  return [a](const State& s) -> double {
    auto c = a->model.grid.cell_of(s);
    if (!c || a->kernel.policy[*c] < 0) return 1.0;  // off-map: thrust away from the cliff
    return a->model.dyn.controls[static_cast<std::size_t>(a->kernel.policy[*c])][0];
  };
}

}  // namespace

State mountain_car_step(const State& s, double a, const MountainCarParams& p) {
  double x = s[0];
  double v = s[1];
  if (x <= p.x_cliff) return {p.x_min, 0.0};
  if (x >= p.x_goal) return {x, 0.0};
  double v2 = std::clamp(v + a * p.force - std::cos(3.0 * x) * p.gravity,
                         -p.v_cap, p.v_cap);
  double x2 = std::clamp(x + v2, p.x_min, p.x_max);
  if (x2 <= p.x_cliff) return {p.x_min, 0.0};
  return {x2, v2};
}

DynamicsModel mountain_car_dynamics(const MountainCarParams& p) {
  DynamicsModel dyn;
  dyn.dims = 2;
  dyn.lo = {p.x_min, -p.v_cap};
  dyn.hi = {p.x_max, p.v_cap};
  dyn.controls = {{-1.0}, {0.0}, {1.0}};
  dyn.dt = 1;
  dyn.step = [p](const State& s, const Control& u) {
    return mountain_car_step(s, u[0], p);
  };
  return dyn;
}

GridSpec mountain_car_grid(const MountainCarParams& p) {
  return GridSpec({p.x_min, -p.v_cap}, {p.x_max, p.v_cap},
                  {p.res_x, p.res_v});
}

MountainCarAnalysis mountain_car_analysis(const MountainCarParams& p) {
  MountainCarAnalysis a;
  a.params = p;
  a.model.dyn = mountain_car_dynamics(p);
  a.model.grid = mountain_car_grid(p);
  a.model.image = cell_image(p, a.model.dyn.controls);

  const GridSpec& g = a.model.grid;
  double wx = cell_width(p, 0);

  // Viable region: every cell strictly past the cliff line (the column
  // whose face sits on the line still contains one fallen state). The
  // kernel then also sheds the states whose momentum makes the fall
  // inevitable.
  RegionMask stay(g.cell_count());
  for (std::size_t c = 0; c < g.cell_count(); ++c) {
    auto coords = g.coords_of(c);
    double lo_x = p.x_min + static_cast<double>(coords[0]) * wx;
    stay.set(c, lo_x > p.x_cliff + kAlign);
  }

  // Tiebreak toward larger x: among the viable controls the policy prefers
  // the one whose worst successor sits furthest from the cliff.
  a.kernel = solve_kernel(a.model, stay,
                          [](const State& s) { return -s[0]; });
  a.safe = a.kernel.kernel;
  a.safer = robust_shrink2(a.model, a.safe);
  return a;
}

MountainCarBundle make_mountain_car(
    const MountainCarOptions& opts,
    std::shared_ptr<const MountainCarAnalysis> analysis) {
  const MountainCarParams& p = opts.params;
  MountainCarBundle bundle;
  bundle.analysis = analysis
                        ? std::move(analysis)
                        : std::make_shared<const MountainCarAnalysis>(
                              mountain_car_analysis(p));
  auto a = bundle.analysis;

  SystemSpec& sys = bundle.sys;
  sys.topics.emplace_back("carState", ValueDomain::vector(2),
                          Value(p.initial));
  sys.topics.emplace_back("carForce", ValueDomain::scalar(), Value(0.0));
  sys.topics.emplace_back("goalFlag", ValueDomain::scalar(), Value(0.0));
  sys.topics.emplace_back("fellFlag", ValueDomain::scalar(), Value(0.0));

  auto ac_law = opts.ac == CarAcKind::pump ? pump_law() : dive_law();
  auto sc_law = opts.mutant == CarMutant::sc_runaway ? dive_law()
                                                     : table_law(a);

  add_free_node(sys, make_plant(p));
  add_free_node(sys, make_flag_node("goalWatch", "carState", "goalFlag", 2,
                                    [goal = p.x_goal](const State& s) {
                                      return s[0] >= goal ? 1.0 : 0.0;
                                    }));
  add_free_node(sys, make_flag_node("cliffWatch", "carState", "fellFlag", 2,
                                    [cliff = p.x_cliff](const State& s) {
                                      return s[0] <= cliff ? 1.0 : 0.0;
                                    }));

  if (opts.wiring == WiringMode::ac_only) {
    add_free_node(sys, make_controller("carAc", p, ac_law));
  } else if (opts.wiring == WiringMode::sc_only) {
    add_free_node(sys, make_controller("carSc", p, sc_law));
  } else {
    ModuleSpec m;
    m.name = "carGuard";
    m.ac = make_controller("carAc", p, ac_law);
    m.sc = make_controller("carSc", p, sc_law);
    m.delta = p.delta;
    m.state_topic = "carState";
    m.safe = SafetyPredicate::from_mask(a->model.grid, a->safe);
    switch (opts.mutant) {
      case CarMutant::safer_unreachable:
        m.safer = SafetyPredicate::from_mask(a->model.grid,
                                             RegionMask(a->safe.size()));
        break;
      case CarMutant::safer_too_wide:
        m.safer = SafetyPredicate::from_mask(a->model.grid, a->safe);
        break;
      default:
        m.safer = SafetyPredicate::from_mask(a->model.grid, a->safer);
        break;
    }
    // Hand-rolled one- and two-step sweeps over the control alphabet; same
    // semantics as the reach library on this grid, cheap enough to run at
    // every audited event.
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

ModuleOracle mountain_car_oracle(const MountainCarBundle& bundle,
                                 CarMutant mutant) {
  auto a = bundle.analysis;
  ModuleOracle oracle;
  oracle.dyn = a->model.dyn;
  oracle.grid = a->model.grid;
  if (mutant == CarMutant::sc_runaway) {
    oracle.sc_policy = [](const State&) { return Control{-1.0}; };
  } else {
    auto law = table_law(a);
    oracle.sc_policy = [law](const State& s) { return Control{law(s)}; };
  }
  return oracle;
}

}  // namespace rta
