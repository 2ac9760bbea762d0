#pragma once

#include <map>
#include <vector>

#include "rta/calendar.hpp"
#include "rta/module.hpp"

namespace rta {

// A closed pub/sub system: topics, nodes (controllers, generated decision
// modules, free nodes such as plants and planners), module wiring, and the
// firing calendar up to the run horizon.
struct SystemSpec {
  std::vector<TopicDecl> topics;
  std::map<std::string, NodeSpec> nodes;
  std::vector<ModuleSpec> modules;
  std::map<std::string, std::string> ac_of;  // dm name -> ac name
  std::map<std::string, std::string> sc_of;  // dm name -> sc name
  Calendar calendar;

  bool is_dm(const std::string& node) const { return ac_of.count(node) != 0; }
  const ModuleSpec* module_of_dm(const std::string& dm) const;
  // Module whose state topic the given topic is, if any.
  const ModuleSpec* module_of_state_topic(const std::string& topic) const;
  const TopicDecl* topic(const std::string& name) const;

  // Topics read by some node but published by none: the environment's inputs.
  std::set<std::string> input_topics() const;
  // Topics published by at least one node.
  std::set<std::string> output_topics() const;
};

// Registers a module with a system: adds AC, SC and the generated DM to the
// node table and records the wiring. Throws on duplicate names.
void add_module(SystemSpec& sys, const ModuleSpec& module);
void add_free_node(SystemSpec& sys, const NodeSpec& node);

// Structural checks over the whole system: every node validates, every
// referenced topic is declared, names are unique.
ValidationResult validate_system(const SystemSpec& sys);

}  // namespace rta
