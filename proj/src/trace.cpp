#include "rta/trace.hpp"

#include <sstream>

namespace rta {

const char* rule_name(Rule r) {
  switch (r) {
    case Rule::env_input: return "env-input";
    case Rule::time_progress: return "time-progress";
    case Rule::dm_step: return "dm-step";
    case Rule::node_step: return "node-step";
  }
  return "?";
}

namespace {

std::optional<Rule> rule_from(const std::string& s) {
  if (s == "env-input") return Rule::env_input;
  if (s == "time-progress") return Rule::time_progress;
  if (s == "dm-step") return Rule::dm_step;
  if (s == "node-step") return Rule::node_step;
  return std::nullopt;
}

std::string opt_mode(const std::optional<Mode>& m) {
  return m ? mode_name(*m) : "-";
}

std::string opt_bool(const std::optional<bool>& b) {
  if (!b) return "-";
  return *b ? "1" : "0";
}

std::optional<bool> parse_opt_bool(const std::string& s) {
  if (s == "1") return true;
  if (s == "0") return false;
  return std::nullopt;
}

std::optional<Mode> parse_opt_mode(const std::string& s) {
  if (s == "AC") return Mode::AC;
  if (s == "SC") return Mode::SC;
  return std::nullopt;
}

}  // namespace

std::string format_event(const TraceEvent& e) {
  std::string out;
  out += std::to_string(e.time);
  out += '\t';
  out += rule_name(e.rule);
  out += '\t';
  out += e.node.empty() ? "-" : e.node;
  out += '\t';
  out += opt_mode(e.mode_before);
  out += '\t';
  out += opt_mode(e.mode_after);
  out += '\t';
  if (e.writes.empty()) {
    out += '-';
  } else {
    bool first = true;
    for (const auto& [topic, value] : e.writes) {
      if (!first) out += ',';
      first = false;
      out += topic;
      out += '=';
      out += format_value(value);
    }
  }
  out += '\t';
  out += opt_bool(e.safe);
  out += '\t';
  out += opt_bool(e.safer);
  out += '\t';
  out += opt_bool(e.inv);
  return out;
}

TraceEvent parse_event(const std::string& line) {
  std::vector<std::string> fields;
  std::string::size_type start = 0;
  while (true) {
    auto tab = line.find('\t', start);
    fields.push_back(line.substr(start, tab == std::string::npos
                                            ? std::string::npos
                                            : tab - start));
    if (tab == std::string::npos) break;
    start = tab + 1;
  }
  if (fields.size() != 9) fail(Errc::io_error, "trace line has wrong field count");

  TraceEvent e;
  e.time = std::stoll(fields[0]);
  auto r = rule_from(fields[1]);
  if (!r) fail(Errc::io_error, "unknown rule '" + fields[1] + "'");
  e.rule = *r;
  e.node = fields[2];
  e.mode_before = parse_opt_mode(fields[3]);
  e.mode_after = parse_opt_mode(fields[4]);
  if (fields[5] != "-") {
    std::string item;
    std::istringstream in(fields[5]);
    while (std::getline(in, item, ',')) {
      auto eq = item.find('=');
      if (eq == std::string::npos) fail(Errc::io_error, "bad write item");
      auto v = parse_value(item.substr(eq + 1));
      if (!v) fail(Errc::io_error, "bad write value");
      e.writes.emplace_back(item.substr(0, eq), *v);
    }
  }
  e.safe = parse_opt_bool(fields[6]);
  e.safer = parse_opt_bool(fields[7]);
  e.inv = parse_opt_bool(fields[8]);
  return e;
}

void Trace::serialize(std::ostream& out) const {
  for (const auto& e : events) out << format_event(e) << '\n';
}

std::string Trace::serialize() const {
  std::ostringstream out;
  serialize(out);
  return out.str();
}

Trace Trace::parse(std::istream& in) {
  Trace t;
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    t.events.push_back(parse_event(line));
  }
  return t;
}

std::uint64_t trace_digest(const Trace& t) {
  std::uint64_t h = 1469598103934665603ull;
  for (const auto& e : t.events) {
    std::string line = format_event(e);
    for (unsigned char c : line) {
      h ^= c;
      h *= 1099511628211ull;
    }
    h ^= static_cast<unsigned char>('\n');
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace rta
