#include "rta/value.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <sstream>

namespace rta {

const char* errc_name(Errc code) {
  switch (code) {
    case Errc::overlapping_io: return "overlapping-io";
    case Errc::nonpositive_period: return "nonpositive-period";
    case Errc::negative_phase: return "negative-phase";
    case Errc::unknown_topic: return "unknown-topic";
    case Errc::duplicate_name: return "duplicate-name";
    case Errc::not_an_input: return "not-an-input";
    case Errc::domain_mismatch: return "domain-mismatch";
    case Errc::not_quiescent: return "not-quiescent";
    case Errc::horizon_exhausted: return "horizon-exhausted";
    case Errc::not_scheduled: return "not-scheduled";
    case Errc::not_a_dm: return "not-a-dm";
    case Errc::is_a_dm: return "is-a-dm";
    case Errc::malformed_spec: return "malformed-spec";
    case Errc::state_outside_oracle_domain: return "state-outside-oracle-domain";
    case Errc::out_of_bounds_state: return "out-of-bounds-state";
    case Errc::nonpositive_lipschitz: return "nonpositive-lipschitz";
    case Errc::no_region: return "no-region";
    case Errc::explosion_guard: return "explosion-guard";
    case Errc::trace_spec_mismatch: return "trace-spec-mismatch";
    case Errc::unknown_schedule: return "unknown-schedule";
    case Errc::syntax_error: return "syntax-error";
    case Errc::unresolved_reference: return "unresolved-reference";
    case Errc::unbound_function: return "unbound-function";
    case Errc::wellformedness_failure: return "wellformedness-failure";
    case Errc::bad_scenario: return "bad-scenario";
    case Errc::io_error: return "io-error";
  }
  return "unknown-error";
}

ValueDomain ValueDomain::scalar() { return ValueDomain{}; }

ValueDomain ValueDomain::vector(int dim) {
  ValueDomain d;
  d.kind = Kind::vector;
  d.dim = dim;
  return d;
}

ValueDomain ValueDomain::enumeration(std::vector<std::string> labels) {
  ValueDomain d;
  d.kind = Kind::enumeration;
  d.labels = std::move(labels);
  return d;
}

bool ValueDomain::contains(const Value& v) const {
  switch (kind) {
    case Kind::scalar:
      return std::holds_alternative<double>(v);
    case Kind::vector:
      return std::holds_alternative<std::vector<double>>(v) &&
             static_cast<int>(std::get<std::vector<double>>(v).size()) == dim;
    case Kind::enumeration:
      return std::holds_alternative<std::string>(v) &&
             std::find(labels.begin(), labels.end(),
                       std::get<std::string>(v)) != labels.end();
  }
  return false;
}

Value ValueDomain::default_value() const {
  switch (kind) {
    case Kind::scalar: return 0.0;
    case Kind::vector: return std::vector<double>(static_cast<size_t>(dim), 0.0);
    case Kind::enumeration: return labels.empty() ? std::string() : labels.front();
  }
  return 0.0;
}

std::string format_double(double x) {
  char buf[64];
  auto res = std::to_chars(buf, buf + sizeof(buf), x);
  return std::string(buf, res.ptr);
}

std::string format_value(const Value& v) {
  if (const double* d = std::get_if<double>(&v)) return format_double(*d);
  if (const auto* vec = std::get_if<std::vector<double>>(&v)) {
    std::string out = "[";
    for (size_t i = 0; i < vec->size(); ++i) {
      if (i) out += ' ';
      out += format_double((*vec)[i]);
    }
    out += ']';
    return out;
  }
  return std::get<std::string>(v);
}

namespace {

std::optional<double> parse_double(const std::string& s) {
  double x = 0;
  auto res = std::from_chars(s.data(), s.data() + s.size(), x);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) return std::nullopt;
  return x;
}

}  // namespace

std::optional<Value> parse_value(const std::string& text) {
  if (text.empty()) return std::nullopt;
  if (text.front() == '[') {
    if (text.back() != ']') return std::nullopt;
    std::vector<double> vec;
    std::istringstream in(text.substr(1, text.size() - 2));
    std::string tok;
    while (in >> tok) {
      auto x = parse_double(tok);
      if (!x) return std::nullopt;
      vec.push_back(*x);
    }
    return Value(vec);
  }
  if (auto x = parse_double(text)) return Value(*x);
  return Value(text);
}

bool value_equal(const Value& a, const Value& b) { return a == b; }

}  // namespace rta
