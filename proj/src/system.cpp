#include "rta/system.hpp"

namespace rta {

const ModuleSpec* SystemSpec::module_of_dm(const std::string& dm) const {
  for (const auto& m : modules) {
    if ((m.dm_name.empty() ? m.name + "_dm" : m.dm_name) == dm) return &m;
  }
  return nullptr;
}

const ModuleSpec* SystemSpec::module_of_state_topic(const std::string& t) const {
  for (const auto& m : modules) {
    if (m.state_topic == t) return &m;
  }
  return nullptr;
}

const TopicDecl* SystemSpec::topic(const std::string& name) const {
  for (const auto& t : topics) {
    if (t.name == name) return &t;
  }
  return nullptr;
}

std::set<std::string> SystemSpec::output_topics() const {
  std::set<std::string> out;
  for (const auto& [name, n] : nodes) {
    out.insert(n.outputs.begin(), n.outputs.end());
  }
  return out;
}

std::set<std::string> SystemSpec::input_topics() const {
  std::set<std::string> published = output_topics();
  std::set<std::string> in;
  for (const auto& [name, n] : nodes) {
    for (const auto& t : n.inputs) {
      if (!published.count(t)) in.insert(t);
    }
  }
  return in;
}

void add_module(SystemSpec& sys, const ModuleSpec& module) {
  NodeSpec dm = generate_dm(module);
  for (const NodeSpec* n : {&module.ac, &module.sc,
                            static_cast<const NodeSpec*>(&dm)}) {
    if (sys.nodes.count(n->name)) {
      fail(Errc::duplicate_name, "node '" + n->name + "' already registered");
    }
  }
  sys.nodes[module.ac.name] = module.ac;
  sys.nodes[module.sc.name] = module.sc;
  sys.nodes[dm.name] = dm;
  sys.ac_of[dm.name] = module.ac.name;
  sys.sc_of[dm.name] = module.sc.name;
  ModuleSpec stored = module;
  stored.dm_name = dm.name;
  sys.modules.push_back(std::move(stored));
}

void add_free_node(SystemSpec& sys, const NodeSpec& node) {
  if (sys.nodes.count(node.name)) {
    fail(Errc::duplicate_name, "node '" + node.name + "' already registered");
  }
  sys.nodes[node.name] = node;
}

ValidationResult validate_system(const SystemSpec& sys) {
  std::set<std::string> declared;
  for (const auto& t : sys.topics) {
    if (!declared.insert(t.name).second) {
      return ValidationResult::bad(Errc::duplicate_name,
                                   "topic '" + t.name + "' declared twice");
    }
  }
  for (const auto& [name, n] : sys.nodes) {
    auto r = validate_node(n, &declared);
    if (!r.ok) return r;
  }
  for (const auto& m : sys.modules) {
    if (!declared.count(m.state_topic)) {
      return ValidationResult::bad(
          Errc::unknown_topic,
          "module '" + m.name + "' state topic '" + m.state_topic + "' undeclared");
    }
  }
  return ValidationResult::good();
}

}  // namespace rta
