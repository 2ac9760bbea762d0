#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>

#include "rta/calendar.hpp"
#include "rta/engine.hpp"
#include "rta/system.hpp"
#include "rta/types.hpp"
#include "rta/value.hpp"

namespace rta {

enum class FaultKind {
  none,
  // Adds seeded uniform noise of the given magnitude to every numeric
  // component the target publishes.
  output_perturbation,
  // Replaces the target's published values with a fixed valuation.
  output_replacement,
  // Silently discards the decision module's firings, freezing the enable
  // flags at whatever they last were.
  dm_drop,
  // Shifts the target's calendar entries at or after `start` by `shift`.
  delay,
};

const char* fault_kind_name(FaultKind k);
std::optional<FaultKind> parse_fault_kind(const std::string& name);

struct FaultProfile {
  FaultKind kind = FaultKind::none;
  std::string target;
  Tick start = 0;
  // Affect every k-th firing from the first affected one.
  int every = 1;
  double magnitude = 0.0;
  Valuation replacement;
  Tick shift = 0;
  std::uint64_t seed = 1;
};

// Faults model untrusted-component misbehavior, so output faults must land
// on a module's advanced controller or on a free node; only dm_drop may
// name a decision module.
ValidationResult validate_fault(const FaultProfile& f, const SystemSpec& sys);

// Perturbation noise is drawn from a stream owned by the returned hooks, so
// the same profile replays identically.
FaultHooks make_fault_hooks(const FaultProfile& f);

// Applies a delay fault to the calendar; other kinds leave it untouched.
Calendar apply_fault_to_calendar(const Calendar& cal, const FaultProfile& f);

}  // namespace rta
