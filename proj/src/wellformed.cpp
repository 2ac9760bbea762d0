#include "rta/wellformed.hpp"

#include <optional>
#include <sstream>

namespace rta {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::not_checkable: return "not-checkable";
  }
  return "?";
}

bool WellformednessReport::any_fail() const {
  for (const auto& c : conditions) {
    if (c.verdict == Verdict::fail) return true;
  }
  return false;
}

const ConditionReport* WellformednessReport::find(const std::string& cond) const {
  for (const auto& c : conditions) {
    if (c.condition == cond) return &c;
  }
  return nullptr;
}

std::string WellformednessReport::render() const {
  std::ostringstream out;
  out << "module " << module_name << "\n";
  for (const auto& c : conditions) {
    out << "  " << c.condition << ": " << verdict_name(c.verdict);
    if (!c.witness.empty()) out << " (" << c.witness << ")";
    out << "\n";
  }
  out << "overall: " << (any_fail() ? "fail" : "pass") << "\n";
  return out.str();
}

namespace {

std::string describe_cell(const GridSpec& grid, std::size_t cell) {
  State s = grid.center_of(cell);
  std::string out = "cell (";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ", ";
    out += format_double(s[i]);
  }
  out += ")";
  return out;
}

// Predicate as a mask over the oracle grid. Explicit regions rasterize via
// their membership view; membership-only predicates stay unavailable so the
// caller reports not-checkable instead of pretending to verify them.
std::optional<RegionMask> mask_on(const SafetyPredicate& pred, const GridSpec& grid) {
  if (!pred.region && !pred.box) return std::nullopt;
  if (pred.region && pred.region->grid == grid) return pred.region->mask;
  RegionMask mask(grid.cell_count());
  for (std::size_t i = 0; i < mask.size(); ++i) {
    mask.set(i, pred.contains(grid.center_of(i)));
  }
  return mask;
}

// Cell-level successor under the safe controller's closed loop; nullopt when
// the trajectory leaves the gridded domain.
std::vector<std::optional<std::size_t>> closed_loop_successors(
    const ModuleOracle& oracle) {
  std::size_t n = oracle.grid.cell_count();
  std::vector<std::optional<std::size_t>> succ(n);
  for (std::size_t i = 0; i < n; ++i) {
    State x = oracle.grid.center_of(i);
    State y = oracle.dyn.step(x, oracle.sc_policy(x));
    succ[i] = oracle.grid.cell_of(y);
  }
  return succ;
}

}  // namespace

std::vector<ConditionReport> check_p1(const ModuleSpec& m) {
  std::vector<ConditionReport> out;
  ConditionReport p1a{"P1a", Verdict::pass, ""};
  if (m.delta <= 0) {
    p1a.verdict = Verdict::fail;
    p1a.witness = "decision period " + std::to_string(m.delta);
  } else if (m.ac.period > m.delta) {
    p1a.verdict = Verdict::fail;
    p1a.witness = "ac period " + std::to_string(m.ac.period) + " > delta " +
                  std::to_string(m.delta);
  } else if (m.sc.period > m.delta) {
    p1a.verdict = Verdict::fail;
    p1a.witness = "sc period " + std::to_string(m.sc.period) + " > delta " +
                  std::to_string(m.delta);
  }
  out.push_back(p1a);

  ConditionReport p1b{"P1b", Verdict::pass, ""};
  if (m.ac.outputs != m.sc.outputs) {
    p1b.verdict = Verdict::fail;
    p1b.witness = "controllers publish different topic sets";
  }
  out.push_back(p1b);
  return out;
}

ConditionReport check_p2a(const ModuleSpec& m, const ModuleOracle& oracle) {
  ConditionReport r{"P2a", Verdict::not_checkable, ""};
  auto safe = mask_on(m.safe, oracle.grid);
  if (!safe || !oracle.sc_policy) {
    r.witness = "no explicit safe region or no safe-controller law";
    return r;
  }
  auto succ = closed_loop_successors(oracle);

  // The closed loop over cells is a functional graph; walk each safe cell
  // until it escapes, cycles, or reaches an already-classified cell.
  enum : std::uint8_t { unknown = 0, ok = 1, bad = 2, on_path = 3 };
  std::vector<std::uint8_t> status(safe->size(), unknown);
  std::vector<std::size_t> path;
  for (std::size_t start = 0; start < safe->size(); ++start) {
    if (!safe->test(start) || status[start] != unknown) continue;
    path.clear();
    std::size_t cur = start;
    std::uint8_t result;
    while (true) {
      if (status[cur] == ok) { result = ok; break; }
      if (status[cur] == bad) { result = bad; break; }
      if (status[cur] == on_path) { result = ok; break; }  // cycle inside safe
      status[cur] = on_path;
      path.push_back(cur);
      auto next = succ[cur];
      if (!next || !safe->test(*next)) { result = bad; break; }
      cur = *next;
    }
    for (auto cell : path) status[cell] = result;
    if (result == bad) {
      r.verdict = Verdict::fail;
      r.witness = describe_cell(oracle.grid, start) + " escapes the safe set";
      return r;
    }
  }
  r.verdict = Verdict::pass;
  return r;
}

ConditionReport check_p2b(const ModuleSpec& m, const ModuleOracle& oracle,
                          Tick horizon) {
  ConditionReport r{"P2b", Verdict::not_checkable, ""};
  auto safe = mask_on(m.safe, oracle.grid);
  auto safer = mask_on(m.safer, oracle.grid);
  if (!safe || !safer || !oracle.sc_policy) {
    r.witness = "predicates lack explicit regions or no safe-controller law";
    return r;
  }
  Tick delta_steps = (m.delta + oracle.dyn.dt - 1) / oracle.dyn.dt;
  bool safer_empty = safer->count() == 0;

  // Settling means delta_steps + 1 consecutive closed-loop states inside the
  // stronger envelope, the first of them no later than the horizon. The loop
  // follows exact states seeded at cell centers; hopping cell to cell instead
  // would stall wherever one step moves less than one cell.
  for (std::size_t start = 0; start < safe->size(); ++start) {
    if (!safe->test(start)) continue;
    if (safer_empty) {
      r.verdict = Verdict::fail;
      r.witness = "stronger envelope covers no grid cell";
      return r;
    }
    State s = oracle.grid.center_of(start);
    bool found = false;
    bool parked_outside = false;
    Tick run = 0;
    for (Tick t = 0; t <= horizon + delta_steps; ++t) {
      auto cell = oracle.grid.cell_of(s);
      run = (cell && safer->test(*cell)) ? run + 1 : 0;
      if (run > delta_steps) { found = true; break; }
      State next = oracle.dyn.step(s, oracle.sc_policy(s));
      if (next == s && run == 0) { parked_outside = true; break; }
      s = std::move(next);
    }
    if (found) continue;
    if (parked_outside) {
      r.verdict = Verdict::fail;
      r.witness = describe_cell(oracle.grid, start) +
                  " parks at a fixed point outside the stronger envelope";
      return r;
    }
    r.witness = describe_cell(oracle.grid, start) +
                " does not settle in the stronger envelope within " +
                std::to_string(horizon) + " ticks";
    return r;
  }
  r.verdict = Verdict::pass;
  r.witness = "horizon " + std::to_string(horizon);
  return r;
}

ConditionReport check_p3(const ModuleSpec& m, const ModuleOracle& oracle) {
  ConditionReport r{"P3", Verdict::not_checkable, ""};
  auto safe = mask_on(m.safe, oracle.grid);
  auto safer = mask_on(m.safer, oracle.grid);
  if (!safe || !safer) {
    r.witness = "predicates lack explicit regions";
    return r;
  }
  RegionMask shrunk =
      region_shrink(*safe, 2 * m.delta, oracle.dyn, oracle.grid, oracle.sampling);
  for (std::size_t i = 0; i < safer->size(); ++i) {
    if (safer->test(i) && !shrunk.test(i)) {
      r.verdict = Verdict::fail;
      r.witness = describe_cell(oracle.grid, i) +
                  " can leave the safe set within two decision periods";
      return r;
    }
  }
  r.verdict = Verdict::pass;
  return r;
}

ConditionReport check_composable(const std::vector<ModuleSpec>& modules,
                                 const std::vector<NodeSpec>& free_nodes) {
  ConditionReport r{"composability", Verdict::pass, ""};
  auto names_of = [](const ModuleSpec& m) {
    return std::set<std::string>{m.ac.name, m.sc.name,
                                 m.dm_name.empty() ? m.name + "_dm" : m.dm_name};
  };
  for (size_t i = 0; i < modules.size(); ++i) {
    for (size_t j = i + 1; j < modules.size(); ++j) {
      auto a = names_of(modules[i]);
      for (const auto& n : names_of(modules[j])) {
        if (a.count(n)) {
          r.verdict = Verdict::fail;
          r.witness = "modules '" + modules[i].name + "' and '" +
                      modules[j].name + "' share node '" + n + "'";
          return r;
        }
      }
      for (const auto& t : modules[j].ac.outputs) {
        if (modules[i].ac.outputs.count(t)) {
          r.verdict = Verdict::fail;
          r.witness = "modules '" + modules[i].name + "' and '" +
                      modules[j].name + "' share output topic '" + t + "'";
          return r;
        }
      }
    }
  }
  for (const auto& f : free_nodes) {
    for (const auto& m : modules) {
      if (names_of(m).count(f.name)) {
        r.verdict = Verdict::fail;
        r.witness = "free node '" + f.name + "' reuses a node of module '" +
                    m.name + "'";
        return r;
      }
    }
  }
  return r;
}

WellformednessReport check_module(const ModuleSpec& m, const ModuleOracle* oracle,
                                  Tick p2b_horizon) {
  WellformednessReport report;
  report.module_name = m.name;
  for (auto& c : check_p1(m)) report.conditions.push_back(std::move(c));

  ConditionReport subset{"safer-subset", Verdict::pass, ""};
  if (oracle) {
    auto safe = mask_on(m.safe, oracle->grid);
    auto safer = mask_on(m.safer, oracle->grid);
    if (safe && safer) {
      for (std::size_t i = 0; i < safer->size(); ++i) {
        if (safer->test(i) && !safe->test(i)) {
          subset.verdict = Verdict::fail;
          subset.witness = describe_cell(oracle->grid, i) +
                           " is in the stronger envelope but not safe";
          break;
        }
      }
    } else {
      subset.verdict = Verdict::not_checkable;
    }
  } else {
    subset.verdict = Verdict::not_checkable;
  }
  report.conditions.push_back(subset);

  if (oracle) {
    report.conditions.push_back(check_p2a(m, *oracle));
    report.conditions.push_back(check_p2b(m, *oracle, p2b_horizon));
    report.conditions.push_back(check_p3(m, *oracle));
  } else {
    report.conditions.push_back({"P2a", Verdict::not_checkable, "no oracle"});
    report.conditions.push_back({"P2b", Verdict::not_checkable, "no oracle"});
    report.conditions.push_back({"P3", Verdict::not_checkable, "no oracle"});
  }
  return report;
}

}  // namespace rta
