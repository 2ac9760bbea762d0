#include "rta/plants/wiring.hpp"

namespace rta {

const char* wiring_mode_name(WiringMode m) {
  switch (m) {
    case WiringMode::rta: return "rta";
    case WiringMode::ac_only: return "ac-only";
    case WiringMode::sc_only: return "sc-only";
  }
  return "?";
}

NodeSpec make_flag_node(std::string name, std::string state_topic,
                        std::string flag_topic, Tick period,
                        std::function<double(const State&)> fn) {
  NodeSpec node;
  node.name = std::move(name);
  node.inputs = {state_topic};
  node.outputs = {flag_topic};
  node.period = period;
  node.initial_state = LocalState{};
  node.transition = [state_topic = std::move(state_topic),
                     flag_topic = std::move(flag_topic),
                     fn = std::move(fn)](const LocalState& ls,
                                         const Valuation& in) {
    StepResult r;
    r.next_state = ls;
    auto it = in.find(state_topic);
    if (it != in.end()) {
      if (const auto* v = std::get_if<std::vector<double>>(&it->second)) {
        r.outputs[flag_topic] = fn(*v);
      } else if (const double* x = std::get_if<double>(&it->second)) {
        r.outputs[flag_topic] = fn(State{*x});
      }
    }
    return r;
  };
  return node;
}

}  // namespace rta
