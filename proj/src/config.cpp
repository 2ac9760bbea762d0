#include "rta/config.hpp"

namespace rta {

Configuration init_configuration(const SystemSpec& sys) {
  Configuration c;
  for (const auto& t : sys.topics) c.topics[t.name] = t.default_value;
  for (const auto& [name, n] : sys.nodes) c.local_states[name] = n.initial_state;
  for (const auto& [dm, ac] : sys.ac_of) c.output_enabled[ac] = false;
  for (const auto& [dm, sc] : sys.sc_of) c.output_enabled[sc] = true;
  return c;
}

Configuration step_env_input(const Configuration& c, const SystemSpec& sys,
                             const std::string& topic, const Value& value) {
  const TopicDecl* decl = sys.topic(topic);
  if (!decl) fail(Errc::unknown_topic, "environment write to '" + topic + "'");
  auto inputs = sys.input_topics();
  if (!inputs.count(topic)) {
    fail(Errc::not_an_input, "topic '" + topic + "' is published by a node");
  }
  if (!decl->domain.contains(value)) {
    fail(Errc::domain_mismatch, "value does not fit domain of '" + topic + "'");
  }
  Configuration out = c;
  out.topics[topic] = value;
  return out;
}

Configuration step_time_progress(const Configuration& c, const SystemSpec&,
                                 const Calendar& cal) {
  if (!c.fire_now.empty()) {
    fail(Errc::not_quiescent, "firings still pending at the current instant");
  }
  auto next = cal.next_time_after(c.current_time);
  if (!next) fail(Errc::horizon_exhausted, "no calendar entry after current time");
  Configuration out = c;
  out.current_time = *next;
  out.fire_now = cal.firing_at(*next);
  return out;
}

namespace {

const NodeSpec& node_or_die(const SystemSpec& sys, const std::string& name) {
  auto it = sys.nodes.find(name);
  if (it == sys.nodes.end()) fail(Errc::unknown_schedule, "no node '" + name + "'");
  return it->second;
}

Valuation project_inputs(const Configuration& c, const NodeSpec& n) {
  Valuation in;
  for (const auto& t : n.inputs) {
    auto it = c.topics.find(t);
    if (it != c.topics.end()) in.emplace(t, it->second);
  }
  return in;
}

}  // namespace

DmStepOutcome step_dm(const Configuration& c, const SystemSpec& sys,
                      const std::string& dm) {
  if (!c.fire_now.count(dm)) fail(Errc::not_scheduled, "'" + dm + "' is not due");
  if (!sys.is_dm(dm)) fail(Errc::not_a_dm, "'" + dm + "' is not a decision module");

  const NodeSpec& spec = node_or_die(sys, dm);
  DmStepOutcome out;
  out.config = c;
  out.before = std::any_cast<Mode>(c.local_states.at(dm));

  StepResult r = spec.transition(c.local_states.at(dm), project_inputs(c, spec));
  if (!r.outputs.empty()) {
    fail(Errc::malformed_spec, "decision module '" + dm + "' tried to publish");
  }
  out.after = std::any_cast<Mode>(r.next_state);
  out.config.local_states[dm] = r.next_state;

  bool ac_enabled = out.after == Mode::AC;
  out.config.output_enabled[sys.ac_of.at(dm)] = ac_enabled;
  out.config.output_enabled[sys.sc_of.at(dm)] = !ac_enabled;
  out.config.fire_now.erase(dm);
  return out;
}

NodeStepOutcome step_node(const Configuration& c, const SystemSpec& sys,
                          const std::string& node,
                          const OutputTransform* transform) {
  if (!c.fire_now.count(node)) fail(Errc::not_scheduled, "'" + node + "' is not due");
  if (sys.is_dm(node)) fail(Errc::is_a_dm, "'" + node + "' must fire via step_dm");

  const NodeSpec& spec = node_or_die(sys, node);
  StepResult r = spec.transition(c.local_states.at(node), project_inputs(c, spec));

  NodeStepOutcome out;
  out.config = c;
  out.config.local_states[node] = std::move(r.next_state);
  out.config.fire_now.erase(node);

  if (c.enabled(node)) {
    Valuation writes = transform ? (*transform)(node, r.outputs) : r.outputs;
    for (const auto& [topic, value] : writes) {
      if (!spec.outputs.count(topic)) {
        fail(Errc::malformed_spec,
             "node '" + node + "' published undeclared output '" + topic + "'");
      }
      const TopicDecl* decl = sys.topic(topic);
      if (!decl || !decl->domain.contains(value)) {
        fail(Errc::domain_mismatch,
             "node '" + node + "' wrote an ill-typed value to '" + topic + "'");
      }
      out.config.topics[topic] = value;
      out.writes[topic] = value;
    }
  }
  return out;
}

Configuration skip_firing(const Configuration& c, const std::string& node) {
  if (!c.fire_now.count(node)) fail(Errc::not_scheduled, "'" + node + "' is not due");
  Configuration out = c;
  out.fire_now.erase(node);
  return out;
}

}  // namespace rta
