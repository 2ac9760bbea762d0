#pragma once

#include "rta/reach.hpp"
#include "rta/system.hpp"

namespace rta {

enum class Verdict { pass, fail, not_checkable };

const char* verdict_name(Verdict v);

struct ConditionReport {
  std::string condition;
  Verdict verdict = Verdict::not_checkable;
  std::string witness;  // offending cell, node or topic when verdict is fail
};

struct WellformednessReport {
  std::string module_name;
  std::vector<ConditionReport> conditions;

  bool any_fail() const;
  const ConditionReport* find(const std::string& condition) const;
  std::string render() const;
};

// Reachability bundle for one module's plant: shared dynamics, the analysis
// grid, and the safe controller as a feedback law over plant states.
struct ModuleOracle {
  DynamicsModel dyn;
  GridSpec grid;
  PolicyFn sc_policy;
  Sampling sampling = Sampling::center;
};

// Period discipline and output agreement between the two controllers.
std::vector<ConditionReport> check_p1(const ModuleSpec& m);

// Safe set closed under the safe controller, at cell granularity.
ConditionReport check_p2a(const ModuleSpec& m, const ModuleOracle& oracle);

// The safe controller reaches a state whose closed-loop delta-window sits
// inside the stronger envelope, within the given horizon, from every safe cell.
ConditionReport check_p2b(const ModuleSpec& m, const ModuleOracle& oracle,
                          Tick horizon);

// From anywhere in the stronger envelope, no control sequence can leave the
// safe set within two decision periods.
ConditionReport check_p3(const ModuleSpec& m, const ModuleOracle& oracle);

// Pairwise disjoint node names and output topic sets across modules; free
// nodes must not reuse module node names.
ConditionReport check_composable(const std::vector<ModuleSpec>& modules,
                                 const std::vector<NodeSpec>& free_nodes = {});

// All of the above for one module. Pass a null oracle to get not-checkable
// verdicts on the reachability conditions.
WellformednessReport check_module(const ModuleSpec& m, const ModuleOracle* oracle,
                                  Tick p2b_horizon);

}  // namespace rta
