#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rta/module.hpp"
#include "rta/system.hpp"
#include "rta/trace.hpp"

namespace rta {

// Per-module tallies over one run. Verdicts are recomputed from the module
// predicates and the observed state stream, not read back from the trace,
// so the audit cross-checks what the engine logged.
struct ModuleAudit {
  std::string module;
  // States observed outside the safe region.
  std::size_t unsafe_states = 0;
  std::optional<std::size_t> first_unsafe_event;
  // Mode/state pairs violating the switching invariant: SC implies safe,
  // AC implies the one-period reach stays safe.
  std::size_t inv_violations = 0;
  std::optional<std::size_t> first_violation_event;
  // Decision-module transitions.
  std::size_t disengagements = 0;  // AC -> SC
  std::size_t reengagements = 0;   // SC -> AC
  // Largest gap, in ticks, between a disengagement and the next
  // re-engagement. `pending_reengage` reports a disengagement the run never
  // recovered from.
  Tick max_reengage_delay = 0;
  bool pending_reengage = false;
  // Plant firings, and how many ran with the advanced controller enabled.
  std::size_t plant_firings = 0;
  std::size_t plant_firings_ac = 0;

  double ac_fraction() const {
    return plant_firings == 0
               ? 0.0
               : static_cast<double>(plant_firings_ac) /
                     static_cast<double>(plant_firings);
  }
};

struct AuditReport {
  std::vector<ModuleAudit> modules;
  std::size_t events = 0;

  const ModuleAudit* find(const std::string& module) const;
  std::size_t total_inv_violations() const;
  std::size_t total_unsafe_states() const;
  bool clean() const { return total_inv_violations() == 0 && total_unsafe_states() == 0; }
  std::string render() const;
};

// Streaming auditor: feed events in order, then finish(). The plant node of
// a module is whichever node publishes its state topic.
class Auditor {
 public:
  explicit Auditor(const SystemSpec& sys);
  void on_event(const TraceEvent& e);
  AuditReport finish() const;

 private:
  struct ModuleTrack {
    const ModuleSpec* spec = nullptr;
    ModuleAudit tally;
    Mode mode = Mode::SC;
    std::optional<State> state;
    std::optional<Tick> disengaged_at;
  };

  void observe_state(ModuleTrack& t, Tick time, std::size_t event_index,
                     bool plant_firing);

  const SystemSpec* sys_;
  std::vector<ModuleTrack> tracks_;
  std::map<std::string, std::size_t> by_state_topic_;
  std::map<std::string, std::size_t> by_dm_;
  std::size_t events_ = 0;
};

AuditReport audit(const Trace& trace, const SystemSpec& sys);

}  // namespace rta
