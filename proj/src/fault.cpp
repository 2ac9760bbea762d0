#include "rta/fault.hpp"

#include <algorithm>

#include "rta/rng.hpp"

namespace rta {
namespace {

bool firing_hit(const FaultProfile& f, Tick time, int index,
                int first_index) {
  if (time < f.start) return false;
  int every = std::max(f.every, 1);
  return (index - first_index) % every == 0;
}

}  // namespace

const char* fault_kind_name(FaultKind k) {
  switch (k) {
    case FaultKind::none: return "none";
    case FaultKind::output_perturbation: return "output-perturbation";
    case FaultKind::output_replacement: return "output-replacement";
    case FaultKind::dm_drop: return "dm-drop";
    case FaultKind::delay: return "delay";
  }
  return "?";
}

std::optional<FaultKind> parse_fault_kind(const std::string& name) {
  if (name == "none") return FaultKind::none;
  if (name == "output-perturbation" || name == "perturb")
    return FaultKind::output_perturbation;
  if (name == "output-replacement" || name == "replace")
    return FaultKind::output_replacement;
  if (name == "dm-drop") return FaultKind::dm_drop;
  if (name == "delay") return FaultKind::delay;
  return std::nullopt;
}

ValidationResult validate_fault(const FaultProfile& f, const SystemSpec& sys) {
  if (f.kind == FaultKind::none) return ValidationResult::good();
  auto it = sys.nodes.find(f.target);
  if (it == sys.nodes.end())
    return ValidationResult::bad(Errc::bad_scenario, "fault targets unknown node '" + f.target +
                                 "'");
  bool is_dm = sys.is_dm(f.target);
  if (f.kind == FaultKind::dm_drop) {
    if (!is_dm)
      return ValidationResult::bad(Errc::bad_scenario, "dm-drop must target a decision module");
    return ValidationResult::good();
  }
  if (is_dm)
    return ValidationResult::bad(
        Errc::bad_scenario, "output faults may not target a decision module");
  for (const auto& m : sys.modules)
    if (f.target == m.sc.name)
      return ValidationResult::bad(
          Errc::bad_scenario, "output faults may not target a safe controller");
  if (f.kind == FaultKind::output_replacement) {
    for (const auto& [topic, value] : f.replacement) {
      if (!it->second.outputs.count(topic))
        return ValidationResult::bad(Errc::bad_scenario, "replacement writes topic '" + topic +
                                     "' the target does not publish");
      const TopicDecl* decl = sys.topic(topic);
      if (decl && !decl->domain.contains(value))
        return ValidationResult::bad(Errc::bad_scenario, "replacement value for '" + topic +
                                     "' is outside the topic domain");
    }
  }
  if (f.kind == FaultKind::delay && f.shift < 0)
    return ValidationResult::bad(Errc::bad_scenario, "delay shift must be nonnegative");
  return ValidationResult::good();
}

FaultHooks make_fault_hooks(const FaultProfile& f) {
  FaultHooks hooks;
  if (f.kind == FaultKind::none || f.kind == FaultKind::delay) return hooks;

  if (f.kind == FaultKind::dm_drop) {
    // The first affected firing anchors the `every` stride.
    auto first = std::make_shared<std::optional<int>>();
    hooks.drop = [f, first](const std::string& node, Tick time, int index) {
      if (node != f.target || time < f.start) return false;
      if (!first->has_value()) *first = index;
      return firing_hit(f, time, index, **first);
    };
    return hooks;
  }

  auto rng = std::make_shared<Rng>(f.seed);
  auto first = std::make_shared<std::optional<int>>();
  hooks.rewrite = [f, rng, first](const std::string& node, Tick time,
                                  int index,
                                  const Valuation& outputs) -> Valuation {
    if (node != f.target || time < f.start) return outputs;
    if (!first->has_value()) *first = index;
    if (!firing_hit(f, time, index, **first)) return outputs;
    if (f.kind == FaultKind::output_replacement) {
      Valuation out = outputs;
      for (const auto& [topic, value] : f.replacement) out[topic] = value;
      return out;
    }
    Valuation out;
    for (const auto& [topic, value] : outputs) {
      if (const auto* d = std::get_if<double>(&value)) {
        out[topic] = *d + rng->range(-f.magnitude, f.magnitude);
      } else if (const auto* v = std::get_if<std::vector<double>>(&value)) {
        auto noisy = *v;
        for (double& x : noisy) x += rng->range(-f.magnitude, f.magnitude);
        out[topic] = std::move(noisy);
      } else {
        out[topic] = value;
      }
    }
    return out;
  };
  return hooks;
}

Calendar apply_fault_to_calendar(const Calendar& cal, const FaultProfile& f) {
  if (f.kind != FaultKind::delay || f.shift == 0) return cal;
  Calendar out = cal;
  for (auto& entry : out.entries)
    if (entry.node == f.target && entry.time >= f.start)
      entry.time += f.shift;
  std::sort(out.entries.begin(), out.entries.end(),
            [](const CalendarEntry& a, const CalendarEntry& b) {
              return a.time != b.time ? a.time < b.time : a.node < b.node;
            });
  return out;
}

}  // namespace rta
