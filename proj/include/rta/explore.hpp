#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "rta/audit.hpp"
#include "rta/fault.hpp"
#include "rta/schedule.hpp"
#include "rta/system.hpp"
#include "rta/trace.hpp"

namespace rta {

struct ExploreOptions {
  SchedulePolicy policy;
  Tick horizon = 0;
  // Environment alternatives a schedule picks from; an empty list means one
  // run with no environment writes.
  std::vector<EnvScript> env_choices;
  FaultProfile fault;
};

struct ExploreItem {
  std::string id;
  AuditReport report;
  std::uint64_t digest = 0;
};

struct ExploreResult {
  std::vector<ExploreItem> items;

  std::size_t schedules() const { return items.size(); }
  std::vector<std::string> violating_ids() const;
  bool all_clean() const;
  std::size_t total_inv_violations() const;
  std::size_t total_unsafe_states() const;
  std::string render_summary() const;
};

// Runs every schedule the policy yields, streaming each run through an
// auditor, and keeps the audit plus a digest of the full trace per schedule.
ExploreResult explore(const SystemSpec& sys, const ExploreOptions& opts);

struct ReplayResult {
  Schedule schedule;
  Trace trace;
  AuditReport report;
  std::uint64_t digest = 0;
};

// Re-runs the single schedule an id denotes, retaining the whole trace. The
// digest of the replayed trace equals the digest explore() recorded for the
// same id.
ReplayResult replay(const SystemSpec& sys, const std::string& schedule_id,
                    const ExploreOptions& opts);

// Runs one already-resolved schedule. Shared by explore() and replay();
// `sink` mirrors RunOptions semantics (set: stream, unset: retain).
ExploreItem run_schedule(const SystemSpec& sys, const Schedule& schedule,
                         const ExploreOptions& opts, Trace* retain = nullptr);

}  // namespace rta
