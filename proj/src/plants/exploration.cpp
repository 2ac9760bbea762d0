#include "rta/plants/exploration.hpp"

#include <algorithm>
#include <cmath>

#include "rta/rng.hpp"

namespace rta {
namespace {

struct PlantState {
  State pos;
  RegionMask known;
};

double cell_size(const ExplorationParams& p) {
  return p.extent / static_cast<double>(p.res);
}

// Chebyshev distance from a point to a cell's box.
double box_distance(const GridSpec& g, std::size_t cell, const State& pos,
                    double w) {
  auto coords = g.coords_of(cell);
  double d = 0.0;
  for (int k = 0; k < 2; ++k) {
    double lo = static_cast<double>(coords[k]) * w;
    double hi = lo + w;
    double axis = std::max({lo - pos[k], pos[k] - hi, 0.0});
    d = std::max(d, axis);
  }
  return d;
}

double clearance_of(const GridSpec& g, const RegionMask& known,
                    const State& pos, double w, double horizon) {
  double best = horizon;
  for (std::size_t c = 0; c < known.size(); ++c) {
    if (known.test(c)) continue;
    best = std::min(best, box_distance(g, c, pos, w));
    if (best == 0.0) break;
  }
  return best;
}

void sense(const ExplorationParams& p, const GridSpec& g,
           const RegionMask& walls, const State& pos, RegionMask& known) {
  double w = cell_size(p);
  for (std::size_t c = 0; c < known.size(); ++c) {
    if (known.test(c) || walls.test(c)) continue;
    if (box_distance(g, c, pos, w) <= p.sense_radius) known.set(c, true);
  }
}

NodeSpec make_plant(const ExplorationParams& p, const ExplorationMap& initial) {
  NodeSpec plant;
  plant.name = "explPlant";
  plant.inputs = {"explCmd"};
  plant.outputs = {"explState"};
  plant.period = 1;
  PlantState init{State{p.home[0], p.home[1]}, initial.known};
  plant.initial_state = init;
  GridSpec grid = initial.grid;
  RegionMask walls = initial.walls;
  DynamicsModel dyn = exploration_dynamics(p);
  plant.transition = [p, grid, walls, dyn](const LocalState& ls,
                                           const Valuation& in) {
    PlantState s = std::any_cast<PlantState>(ls);
    Control v{0.0, 0.0};
    if (auto it = in.find("explCmd"); it != in.end())
      if (const auto* u = std::get_if<std::vector<double>>(&it->second))
        if (u->size() == 2) v = *u;
    v = dyn.snap(v);
    State next = dyn.step(s.pos, v);
    // A commanded move into an obstacle cell bumps and holds position.
    auto c = grid.cell_of(next);
    if (!c || walls.test(*c)) next = s.pos;
    s.pos = next;
    sense(p, grid, walls, next, s.known);
    double w = cell_size(p);
    double clear = clearance_of(grid, s.known, next, w, p.extent);
    StepResult r;
    r.outputs["explState"] = State{next[0], next[1], clear};
    r.next_state = std::move(s);
    return r;
  };
  return plant;
}

State read_pos(const Valuation& in, const State& fallback) {
  if (auto it = in.find("explState"); it != in.end())
    if (const auto* v = std::get_if<std::vector<double>>(&it->second))
      if (v->size() == 3) return {(*v)[0], (*v)[1]};
  return fallback;
}

// Exploring waypoint generator: hold a seeded heading for a few ticks,
// then redraw.
NodeSpec make_wander(const ExplorationParams& p) {
  struct WanderState {
    std::uint64_t rng;
    Control heading;
    Tick left = 0;
  };
  NodeSpec node;
  node.name = "explAc";
  node.inputs = {"explState"};
  node.outputs = {"explCmd"};
  node.period = 1;
  node.initial_state = WanderState{p.wander_seed, {0.0, 0.0}, 0};
  node.transition = [p](const LocalState& ls, const Valuation&) {
    WanderState s = std::any_cast<WanderState>(ls);
    if (s.left <= 0) {
      Rng rng(s.rng);
      double choices[3] = {-p.v_max, 0.0, p.v_max};
      s.heading = {choices[rng.below(3)], choices[rng.below(3)]};
      s.left = p.wander_hold;
      s.rng = rng.state;
    }
    s.left -= 1;
    StepResult r;
    r.outputs["explCmd"] = State{s.heading[0], s.heading[1]};
    r.next_state = s;
    return r;
  };
  return node;
}

// Return-home controller: head for the surveyed area around home.
NodeSpec make_return(const ExplorationParams& p) {
  NodeSpec node;
  node.name = "explSc";
  node.inputs = {"explState"};
  node.outputs = {"explCmd"};
  node.period = 1;
  node.initial_state = LocalState{};
  State home{p.home[0], p.home[1]};
  node.transition = [p, home](const LocalState& ls, const Valuation& in) {
    State pos = read_pos(in, home);
    auto toward = [&](int k) {
      double gap = home[k] - pos[k];
      if (std::abs(gap) < p.v_max / 2.0) return 0.0;
      return gap > 0.0 ? p.v_max : -p.v_max;
    };
    StepResult r;
    r.outputs["explCmd"] = State{toward(0), toward(1)};
    r.next_state = ls;
    return r;
  };
  return node;
}

}  // namespace

ExplorationMap exploration_map(const ExplorationParams& p) {
  ExplorationMap map;
  map.grid = GridSpec({0.0, 0.0}, {p.extent, p.extent}, {p.res, p.res});
  map.v_max = p.v_max;
  map.walls = RegionMask(map.grid.cell_count());
  map.known = RegionMask(map.grid.cell_count());
  double w = cell_size(p);
  for (std::size_t c = 0; c < map.walls.size(); ++c) {
    auto coords = map.grid.coords_of(c);
    bool border = coords[0] == 0 || coords[1] == 0 || coords[0] == p.res - 1 ||
                  coords[1] == p.res - 1;
    double x_lo = static_cast<double>(coords[0]) * w;
    double y_lo = static_cast<double>(coords[1]) * w;
    bool strip = x_lo >= 8.0 - 1e-9 && x_lo < 8.4 - 1e-9 && y_lo >= 2.0 - 1e-9 &&
                 y_lo < 8.0 - 1e-9;
    map.walls.set(c, border || strip);
  }
  for (std::size_t c = 0; c < map.known.size(); ++c) {
    if (map.walls.test(c)) continue;
    State center = map.grid.center_of(c);
    double dx = center[0] - p.home[0];
    double dy = center[1] - p.home[1];
    map.known.set(c, std::hypot(dx, dy) <= p.known_radius);
  }
  return map;
}

double exploration_clearance(const ExplorationMap& map, const State& pos) {
  double w = map.grid.hi[0] / static_cast<double>(map.grid.res[0]);
  return clearance_of(map.grid, map.known, pos, w, map.grid.hi[0]);
}

DynamicsModel exploration_dynamics(const ExplorationParams& p) {
  DynamicsModel dyn;
  dyn.dims = 2;
  dyn.lo = {0.0, 0.0};
  dyn.hi = {p.extent, p.extent};
  for (double vx : {-p.v_max, 0.0, p.v_max})
    for (double vy : {-p.v_max, 0.0, p.v_max}) dyn.controls.push_back({vx, vy});
  dyn.dt = 1;
  dyn.step = [p](const State& s, const Control& u) -> State {
    return {std::clamp(s[0] + u[0], 0.0, p.extent),
            std::clamp(s[1] + u[1], 0.0, p.extent)};
  };
  return dyn;
}

ExplorationBundle make_exploration(const ExplorationOptions& opts) {
  const ExplorationParams& p = opts.params;
  ExplorationMap initial = exploration_map(p);
  ExplorationBundle bundle;
  SystemSpec& sys = bundle.sys;
  double clear0 = exploration_clearance(initial, {p.home[0], p.home[1]});
  sys.topics.emplace_back("explState", ValueDomain::vector(3),
                          Value(State{p.home[0], p.home[1], clear0}));
  sys.topics.emplace_back("explCmd", ValueDomain::vector(2),
                          Value(State{0.0, 0.0}));

  add_free_node(sys, make_plant(p, initial));

  if (opts.wiring == WiringMode::ac_only) {
    add_free_node(sys, make_wander(p));
  } else if (opts.wiring == WiringMode::sc_only) {
    add_free_node(sys, make_return(p));
  } else {
    ModuleSpec m;
    m.name = "explGuard";
    m.ac = make_wander(p);
    m.sc = make_return(p);
    m.delta = p.delta;
    m.state_topic = "explState";
    m.safe = SafetyPredicate::from_fn(
        [](const State& s) { return s.size() == 3 && s[2] > 0.0; });
    double d1 = p.v_max * static_cast<double>(p.delta);
    m.safer = SafetyPredicate::from_fn([d1](const State& s) {
      return s.size() == 3 && s[2] > d1;
    });
    double d2 = 2.0 * d1;
    m.ttf2d = [d2](const State& s) { return s.size() != 3 || s[2] <= d2; };
    m.inv_ac = [d1](const State& s) { return s.size() == 3 && s[2] > d1; };
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
