#include "rta/module.hpp"

namespace rta {

SafetyPredicate SafetyPredicate::from_fn(std::function<bool(const State&)> fn) {
  SafetyPredicate p;
  p.membership = std::move(fn);
  return p;
}

SafetyPredicate SafetyPredicate::from_mask(GridSpec grid, RegionMask mask) {
  SafetyPredicate p;
  p.region = GridRegion{grid, mask};
  p.membership = [grid = std::move(grid), mask = std::move(mask)](const State& s) {
    return mask_contains(grid, mask, s);
  };
  return p;
}

SafetyPredicate SafetyPredicate::from_box(Box box) {
  SafetyPredicate p;
  p.box = box;
  p.membership = [box = std::move(box)](const State& s) { return box.contains(s); };
  return p;
}

RegionMask rasterize_box(const Box& box, const GridSpec& grid) {
  RegionMask mask(grid.cell_count());
  for (std::size_t i = 0; i < mask.size(); ++i) {
    mask.set(i, box.contains(grid.center_of(i)));
  }
  return mask;
}

Mode dm_transition(Mode mode, const State& s, const ModuleSpec& spec) {
  if (mode == Mode::AC) {
    return spec.ttf2d(s) ? Mode::SC : Mode::AC;
  }
  return spec.safer.contains(s) ? Mode::AC : Mode::SC;
}

NodeSpec generate_dm(const ModuleSpec& spec) {
  if (spec.delta <= 0) {
    fail(Errc::malformed_spec,
         "module '" + spec.name + "' has nonpositive decision period");
  }
  if (spec.ac.period > spec.delta || spec.sc.period > spec.delta) {
    fail(Errc::malformed_spec,
         "module '" + spec.name + "': controller period exceeds decision period");
  }
  if (spec.ac.outputs != spec.sc.outputs) {
    fail(Errc::malformed_spec,
         "module '" + spec.name + "': controllers publish different topic sets");
  }
  if (!spec.ttf2d) {
    fail(Errc::malformed_spec, "module '" + spec.name + "' lacks a ttf handle");
  }

  NodeSpec dm;
  dm.name = spec.dm_name.empty() ? spec.name + "_dm" : spec.dm_name;
  dm.inputs = spec.ac.inputs;
  dm.inputs.insert(spec.sc.inputs.begin(), spec.sc.inputs.end());
  dm.inputs.insert(spec.state_topic);
  dm.period = spec.delta;
  dm.initial_state = Mode::SC;

  // The transition only flips the mode; output gating is the engine's job.
  ModuleSpec logic = spec;
  dm.transition = [logic](const LocalState& l, const Valuation& in) {
    Mode mode = std::any_cast<Mode>(l);
    auto it = in.find(logic.state_topic);
    State s;
    if (it != in.end()) {
      if (const auto* vec = std::get_if<std::vector<double>>(&it->second)) {
        s = *vec;
      } else if (const double* x = std::get_if<double>(&it->second)) {
        s = {*x};
      }
    }
    Mode next = s.empty() ? mode : dm_transition(mode, s, logic);
    return StepResult{next, {}};
  };
  return dm;
}

bool invariant_holds(Mode mode, const State& s, const ModuleSpec& spec,
                     const InvariantOracle& oracle) {
  if (oracle.covers && !oracle.covers(s)) {
    fail(Errc::state_outside_oracle_domain,
         "module '" + spec.name + "': state outside the oracle domain");
  }
  if (mode == Mode::SC) return spec.safe.contains(s);
  return oracle.reach_delta_in_safe && oracle.reach_delta_in_safe(s);
}

}  // namespace rta
