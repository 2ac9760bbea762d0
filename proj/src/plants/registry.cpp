#include "rta/plants/registry.hpp"

#include <cmath>
#include <cstdint>
#include <set>

#include "rta/plants/battery.hpp"
#include "rta/plants/drone.hpp"
#include "rta/plants/exploration.hpp"
#include "rta/plants/mountain_car.hpp"

namespace rta {

namespace {

// Scenario constants arrive as one flat map; each plant consumes the keys it
// knows and the leftovers are reported as typos.
class ConstantReader {
 public:
  explicit ConstantReader(const std::map<std::string, double>& constants)
      : constants_(constants) {}

  double get(const std::string& key, double fallback) {
    seen_.insert(key);
    auto it = constants_.find(key);
    return it == constants_.end() ? fallback : it->second;
  }

  int get_int(const std::string& key, int fallback) {
    return static_cast<int>(
        std::llround(get(key, static_cast<double>(fallback))));
  }

  Tick get_tick(const std::string& key, Tick fallback) {
    return static_cast<Tick>(
        std::llround(get(key, static_cast<double>(fallback))));
  }

  std::uint64_t get_seed(const std::string& key, std::uint64_t fallback) {
    return static_cast<std::uint64_t>(
        std::llround(get(key, static_cast<double>(fallback))));
  }

  void finish(const std::string& plant) const {
    for (const auto& [key, value] : constants_) {
      (void)value;
      if (seen_.count(key) == 0)
        fail(Errc::bad_scenario, "unknown constant for plant '" + plant +
                                    "': " + key);
    }
  }

 private:
  const std::map<std::string, double>& constants_;
  std::set<std::string> seen_;
};

std::string pick_name(const std::map<std::string, std::string>& names,
                      const std::string& key, const std::string& fallback,
                      std::set<std::string>& seen) {
  seen.insert(key);
  auto it = names.find(key);
  return it == names.end() ? fallback : it->second;
}

void reject_unknown_names(const std::map<std::string, std::string>& names,
                          const std::set<std::string>& seen,
                          const std::string& plant) {
  for (const auto& [key, value] : names) {
    (void)value;
    if (seen.count(key) == 0)
      fail(Errc::bad_scenario, "unknown selection for plant '" + plant +
                                  "': " + key);
  }
}

// Lifts every non-generated node body and every topic default out of a
// built system. Decision modules are skipped: elaboration regenerates them.
void harvest_nodes(PlantBindings& b, const SystemSpec& sys) {
  for (const auto& [name, node] : sys.nodes) {
    if (sys.is_dm(name)) continue;
    b.functions[name] = NodeBody{node.transition, node.initial_state};
  }
  for (const auto& topic : sys.topics)
    b.topic_defaults[topic.name] = topic.default_value;
}

// Lifts the module's envelopes and switching tests under the given export
// names. The one-period reach test shares the switch test's name so the two
// stay paired through a declaration program.
void harvest_module(PlantBindings& b, const SystemSpec& sys,
                    const std::string& module_name, const std::string& safe,
                    const std::string& safer, const std::string& ttf) {
  for (const auto& m : sys.modules) {
    if (m.name != module_name) continue;
    b.predicates[safe] = m.safe;
    b.predicates[safer] = m.safer;
    b.switch_tests[ttf] = m.ttf2d;
    if (m.inv_ac) b.reach_oracles[ttf] = m.inv_ac;
    return;
  }
  fail(Errc::malformed_spec, "plant bundle lacks module: " + module_name);
}

PlantBindings car_bindings(const std::map<std::string, double>& constants,
                           const std::map<std::string, std::string>& names) {
  ConstantReader c(constants);
  MountainCarOptions opts;
  auto& p = opts.params;
  p.force = c.get("force", p.force);
  p.gravity = c.get("gravity", p.gravity);
  p.x_min = c.get("x_min", p.x_min);
  p.x_max = c.get("x_max", p.x_max);
  p.v_cap = c.get("v_cap", p.v_cap);
  p.x_goal = c.get("x_goal", p.x_goal);
  p.x_cliff = c.get("x_cliff", p.x_cliff);
  p.res_x = c.get_int("res_x", p.res_x);
  p.res_v = c.get_int("res_v", p.res_v);
  p.delta = c.get_tick("delta", p.delta);
  p.initial = {c.get("x0", p.initial[0]), c.get("v0", p.initial[1])};
  c.finish("mountain_car");

  std::set<std::string> seen;
  std::string ac = pick_name(names, "ac", "pump", seen);
  if (ac == "pump")
    opts.ac = CarAcKind::pump;
  else if (ac == "dive")
    opts.ac = CarAcKind::dive;
  else
    fail(Errc::bad_scenario, "unknown car controller: " + ac);
  std::string mutant = pick_name(names, "mutant", "none", seen);
  if (mutant == "none")
    opts.mutant = CarMutant::none;
  else if (mutant == "sc_runaway")
    opts.mutant = CarMutant::sc_runaway;
  else if (mutant == "safer_unreachable")
    opts.mutant = CarMutant::safer_unreachable;
  else if (mutant == "safer_too_wide")
    opts.mutant = CarMutant::safer_too_wide;
  else
    fail(Errc::bad_scenario, "unknown car mutant: " + mutant);
  reject_unknown_names(names, seen, "mountain_car");

  MountainCarBundle bundle = make_mountain_car(opts);
  PlantBindings b;
  harvest_nodes(b, bundle.sys);
  harvest_module(b, bundle.sys, bundle.module_name, "carSafe", "carSafer",
                 "carTtf");
  b.oracles["carSc"] = mountain_car_oracle(bundle, opts.mutant);
  return b;
}

PlantBindings drone_bindings(const std::map<std::string, double>& constants,
                             const std::map<std::string, std::string>& names) {
  ConstantReader c(constants);
  DroneOptions opts;
  auto& p = opts.params;
  p.tube.eps = c.get("eps", p.tube.eps);
  p.done_x = c.get("done_x", p.done_x);
  p.a_lat = c.get("a_lat", p.a_lat);
  p.v_lat_max = c.get("v_lat_max", p.v_lat_max);
  p.d_bound = c.get("d_bound", p.d_bound);
  p.a_ax = c.get("a_ax", p.a_ax);
  p.vx_max = c.get("vx_max", p.vx_max);
  p.vx_crawl = c.get("vx_crawl", p.vx_crawl);
  p.res_d = c.get_int("res_d", p.res_d);
  p.res_vd = c.get_int("res_vd", p.res_vd);
  p.delta = c.get_tick("delta", p.delta);
  p.overshoot_gain = c.get("overshoot_gain", p.overshoot_gain);
  p.kick = c.get("kick", p.kick);
  p.kick_seed = c.get_seed("kick_seed", p.kick_seed);
  p.initial.p = {c.get("x0", p.initial.p[0]), c.get("d0", p.initial.p[1])};
  p.initial.v = {c.get("vx0", p.initial.v[0]), c.get("vd0", p.initial.v[1])};
  c.finish("drone");
  reject_unknown_names(names, {}, "drone");

  DroneBundle bundle = make_drone(opts);
  PlantBindings b;
  harvest_nodes(b, bundle.sys);
  harvest_module(b, bundle.sys, bundle.module_name, "droneSafe", "droneSafer",
                 "droneTtf");
  b.oracles["droneSc"] = drone_oracle(bundle);
  return b;
}

PlantBindings battery_bindings(
    const std::map<std::string, double>& constants,
    const std::map<std::string, std::string>& names) {
  ConstantReader c(constants);
  BatteryOptions opts;
  auto& p = opts.params;

  // Named hand-back presets; an explicit safer_threshold constant wins.
  std::set<std::string> seen;
  std::string preset = pick_name(names, "preset", "85", seen);
  if (preset == "85")
    p.safer_threshold = 85.0;
  else if (preset == "90")
    p.safer_threshold = 90.0;
  else if (preset == "95")
    p.safer_threshold = 95.0;
  else
    fail(Errc::bad_scenario, "unknown battery preset: " + preset);
  reject_unknown_names(names, seen, "battery");

  p.b0 = c.get("b0", p.b0);
  p.charge_rate = c.get("charge_rate", p.charge_rate);
  p.draw_base = c.get("draw_base", p.draw_base);
  p.draw_burst = c.get("draw_burst", p.draw_burst);
  p.t_max = c.get("t_max", p.t_max);
  p.safer_threshold = c.get("safer_threshold", p.safer_threshold);
  p.delta = c.get_tick("delta", p.delta);
  p.mission_seed = c.get_seed("mission_seed", p.mission_seed);
  c.finish("battery");

  BatteryBundle bundle = make_battery(opts);
  PlantBindings b;
  harvest_nodes(b, bundle.sys);
  harvest_module(b, bundle.sys, bundle.module_name, "batSafe", "batSafer",
                 "batTtf");
  return b;
}

PlantBindings exploration_bindings(
    const std::map<std::string, double>& constants,
    const std::map<std::string, std::string>& names) {
  ConstantReader c(constants);
  ExplorationOptions opts;
  auto& p = opts.params;
  p.extent = c.get("extent", p.extent);
  p.res = c.get_int("res", p.res);
  p.v_max = c.get("v_max", p.v_max);
  p.sense_radius = c.get("sense_radius", p.sense_radius);
  p.delta = c.get_tick("delta", p.delta);
  p.home = {c.get("home_x", p.home[0]), c.get("home_y", p.home[1])};
  p.known_radius = c.get("known_radius", p.known_radius);
  p.wander_seed = c.get_seed("wander_seed", p.wander_seed);
  p.wander_hold = c.get_tick("wander_hold", p.wander_hold);
  c.finish("exploration");
  reject_unknown_names(names, {}, "exploration");

  ExplorationBundle bundle = make_exploration(opts);
  PlantBindings b;
  harvest_nodes(b, bundle.sys);
  harvest_module(b, bundle.sys, bundle.module_name, "explSafe", "explSafer",
                 "explTtf");
  return b;
}

}  // namespace

PlantBindings plant_bindings(const std::string& plant,
                             const std::map<std::string, double>& constants,
                             const std::map<std::string, std::string>& names) {
  if (plant == "mountain_car") return car_bindings(constants, names);
  if (plant == "drone") return drone_bindings(constants, names);
  if (plant == "battery") return battery_bindings(constants, names);
  if (plant == "exploration") return exploration_bindings(constants, names);
  fail(Errc::bad_scenario, "unknown plant: " + plant);
}

}  // namespace rta
