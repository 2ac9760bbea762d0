#include "rta/plants/battery.hpp"

#include <algorithm>
#include <cmath>

#include "rta/rng.hpp"
#include "rta/ttf.hpp"

namespace rta {
namespace {

NodeSpec make_plant(const BatteryParams& p) {
  NodeSpec plant;
  plant.name = "batPlant";
  plant.inputs = {"batCmd"};
  plant.outputs = {"batState"};
  plant.period = 1;
  plant.initial_state = p.b0;
  plant.transition = [p](const LocalState& ls, const Valuation& in) {
    double b = std::any_cast<double>(ls);
    double cmd = 0.0;
    if (auto it = in.find("batCmd"); it != in.end())
      if (const double* x = std::get_if<double>(&it->second)) cmd = *x;
    double next = cmd < 0.0 ? battery_step(b, 0.0, true, p)
                            : battery_step(b, cmd, false, p);
    StepResult r;
    r.next_state = next;
    r.outputs["batState"] = State{next};
    return r;
  };
  return plant;
}

// Mission planner: steady draw plus seeded bursts, blind to the charge.
NodeSpec make_planner(const BatteryParams& p) {
  NodeSpec node;
  node.name = "batPlanner";
  node.inputs = {"batState"};
  node.outputs = {"batCmd"};
  node.period = 1;
  node.initial_state = p.mission_seed;
  node.transition = [p](const LocalState& ls, const Valuation&) {
    Rng rng(std::any_cast<std::uint64_t>(ls));
    double draw = p.draw_base + (rng.below(4) == 0 ? p.draw_burst : 0.0);
    StepResult r;
    r.next_state = rng.state;
    r.outputs["batCmd"] = draw;
    return r;
  };
  return node;
}

// Charge controller: command the charger until the planner may resume.
NodeSpec make_charger(const BatteryParams& p) {
  NodeSpec node;
  node.name = "batCharge";
  node.inputs = {"batState"};
  node.outputs = {"batCmd"};
  node.period = 1;
  node.initial_state = LocalState{};
  node.transition = [p](const LocalState& ls, const Valuation&) {
    StepResult r;
    r.next_state = ls;
    r.outputs["batCmd"] = -p.charge_rate;
    return r;
  };
  return node;
}

}  // namespace

double battery_step(double b, double u, bool charging,
                    const BatteryParams& p) {
  if (charging) return std::min(100.0, b + p.charge_rate);
  return std::max(0.0, b - u);
}

DynamicsModel battery_dynamics(const BatteryParams& p) {
  DynamicsModel dyn;
  dyn.dims = 1;
  dyn.lo = {0.0};
  dyn.hi = {100.0};
  dyn.controls = {{-p.charge_rate},
                  {0.0},
                  {p.draw_base},
                  {p.draw_base + p.draw_burst}};
  dyn.dt = 1;
  dyn.step = [p](const State& s, const Control& u) -> State {
    double cmd = u[0];
    return {cmd < 0.0 ? battery_step(s[0], 0.0, true, p)
                      : battery_step(s[0], cmd, false, p)};
  };
  return dyn;
}

BatteryBundle make_battery(const BatteryOptions& opts) {
  const BatteryParams& p = opts.params;
  BatteryBundle bundle;
  SystemSpec& sys = bundle.sys;
  sys.topics.emplace_back("batState", ValueDomain::vector(1),
                          Value(State{p.b0}));
  sys.topics.emplace_back("batCmd", ValueDomain::scalar(), Value(0.0));

  add_free_node(sys, make_plant(p));

  if (opts.wiring == WiringMode::ac_only) {
    add_free_node(sys, make_planner(p));
  } else if (opts.wiring == WiringMode::sc_only) {
    add_free_node(sys, make_charger(p));
  } else {
    ModuleSpec m;
    m.name = "batGuard";
    m.ac = make_planner(p);
    m.sc = make_charger(p);
    m.delta = p.delta;
    m.state_topic = "batState";
    m.safe = SafetyPredicate::from_fn(
        [](const State& s) { return !s.empty() && s[0] > 0.0; });
    m.safer = SafetyPredicate::from_fn(
        [th = p.safer_threshold](const State& s) {
          return !s.empty() && s[0] > th;
        });
    double spend2 = cost_star(battery_dynamics(p), 2 * p.delta);
    double spend1 = cost_star(battery_dynamics(p), p.delta);
    m.ttf2d = [spend2, t_max = p.t_max](const State& s) {
      return s.empty() || ttf_battery(s[0], spend2, t_max);
    };
    m.inv_ac = [spend1](const State& s) {
      return !s.empty() && s[0] - spend1 > 0.0;
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

}  // namespace rta
