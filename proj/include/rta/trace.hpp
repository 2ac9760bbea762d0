#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>

#include "rta/module.hpp"
#include "rta/value.hpp"

namespace rta {

enum class Rule { env_input, time_progress, dm_step, node_step };

const char* rule_name(Rule r);

// One rule application. Serialized as a tab-separated line with the field
// order fixed below; see docs/trace-format.md.
struct TraceEvent {
  Tick time = 0;
  Rule rule = Rule::node_step;
  std::string node;  // topic name for env-input, "-" for time-progress
  std::optional<Mode> mode_before;
  std::optional<Mode> mode_after;
  std::vector<std::pair<std::string, Value>> writes;  // sorted by topic
  std::optional<bool> safe;   // owning module's phi_safe at this event
  std::optional<bool> safer;  // owning module's phi_safer
  std::optional<bool> inv;    // safety invariant over (mode, state)

  bool operator==(const TraceEvent&) const = default;
};

struct Trace {
  std::vector<TraceEvent> events;

  void serialize(std::ostream& out) const;
  std::string serialize() const;
  static Trace parse(std::istream& in);

  bool operator==(const Trace&) const = default;
};

std::string format_event(const TraceEvent& e);
TraceEvent parse_event(const std::string& line);

// FNV-1a over the serialized bytes; replay equality is checked on this.
std::uint64_t trace_digest(const Trace& t);

}  // namespace rta
