#pragma once

#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "rta/types.hpp"

namespace rta {

// A topic carries either a scalar, a fixed-dimension vector, or a symbolic
// label drawn from an enumeration.
using Value = std::variant<double, std::vector<double>, std::string>;

struct ValueDomain {
  enum class Kind { scalar, vector, enumeration };

  Kind kind = Kind::scalar;
  int dim = 1;                       // vector only
  std::vector<std::string> labels;   // enumeration only

  static ValueDomain scalar();
  static ValueDomain vector(int dim);
  static ValueDomain enumeration(std::vector<std::string> labels);

  bool contains(const Value& v) const;
  Value default_value() const;
  bool operator==(const ValueDomain&) const = default;
};

// Shortest round-trip decimal rendering, stable across runs of the same
// binary; traces and mask files rely on it.
std::string format_double(double x);
std::string format_value(const Value& v);
std::optional<Value> parse_value(const std::string& text);
bool value_equal(const Value& a, const Value& b);

// Topic name -> current value. Ordered so every serialization is canonical.
using Valuation = std::map<std::string, Value>;

struct TopicDecl {
  std::string name;
  ValueDomain domain;
  Value default_value;

  TopicDecl() : domain(ValueDomain::scalar()), default_value(0.0) {}
  TopicDecl(std::string n, ValueDomain d)
      : name(std::move(n)), domain(d), default_value(d.default_value()) {}
  TopicDecl(std::string n, ValueDomain d, Value dflt)
      : name(std::move(n)), domain(d), default_value(std::move(dflt)) {}
};

}  // namespace rta
