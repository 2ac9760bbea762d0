#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

namespace rta {

// Engine time is an integer tick count. Periods, phases and reach horizons
// are all expressed in ticks so calendar arithmetic is exact.
using Tick = std::int64_t;

// Plant state and control vectors as seen by the reachability layer.
using State = std::vector<double>;
using Control = std::vector<double>;

enum class Errc {
  overlapping_io,
  nonpositive_period,
  negative_phase,
  unknown_topic,
  duplicate_name,
  not_an_input,
  domain_mismatch,
  not_quiescent,
  horizon_exhausted,
  not_scheduled,
  not_a_dm,
  is_a_dm,
  malformed_spec,
  state_outside_oracle_domain,
  out_of_bounds_state,
  nonpositive_lipschitz,
  no_region,
  explosion_guard,
  trace_spec_mismatch,
  unknown_schedule,
  syntax_error,
  unresolved_reference,
  unbound_function,
  wellformedness_failure,
  bad_scenario,
  io_error,
};

const char* errc_name(Errc code);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what),
        code_(code) {}

  Errc code() const { return code_; }

 private:
  Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& what) {
  throw Error(code, what);
}

}  // namespace rta
