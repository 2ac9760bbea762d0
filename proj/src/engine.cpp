#include "rta/engine.hpp"

#include <algorithm>

namespace rta {

OrderFn default_order() {
  return [](const std::set<std::string>& due, const SystemSpec& sys) {
    std::vector<std::string> dms, ctrls, free_nodes;
    std::set<std::string> controller_names;
    for (const auto& [dm, ac] : sys.ac_of) controller_names.insert(ac);
    for (const auto& [dm, sc] : sys.sc_of) controller_names.insert(sc);
    for (const auto& n : due) {
      if (sys.is_dm(n)) {
        dms.push_back(n);
      } else if (controller_names.count(n)) {
        ctrls.push_back(n);
      } else {
        free_nodes.push_back(n);
      }
    }
    std::vector<std::string> out = std::move(dms);
    out.insert(out.end(), ctrls.begin(), ctrls.end());
    out.insert(out.end(), free_nodes.begin(), free_nodes.end());
    return out;  // each class came from an ordered set, so already sorted
  };
}

OrderFn priority_order(std::vector<std::string> ranking) {
  return [ranking = std::move(ranking)](const std::set<std::string>& due,
                                        const SystemSpec&) {
    std::vector<std::string> out;
    for (const auto& n : ranking) {
      if (due.count(n)) out.push_back(n);
    }
    for (const auto& n : due) {  // anything the ranking missed, stable at the end
      if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(n);
    }
    return out;
  };
}

namespace {

std::optional<State> state_from_value(const Value& v) {
  if (const auto* vec = std::get_if<std::vector<double>>(&v)) return *vec;
  if (const double* x = std::get_if<double>(&v)) return State{*x};
  return std::nullopt;
}

Mode module_mode(const Configuration& c, const ModuleSpec& m) {
  return std::any_cast<Mode>(c.local_states.at(m.dm_name));
}

// Module whose predicates apply to this event: the module owning the node,
// else the module whose state topic the event wrote.
const ModuleSpec* owning_module(const SystemSpec& sys, const std::string& node,
                                const std::vector<std::pair<std::string, Value>>& writes) {
  for (const auto& m : sys.modules) {
    if (m.ac.name == node || m.sc.name == node || m.dm_name == node) return &m;
  }
  for (const auto& [topic, value] : writes) {
    if (const ModuleSpec* m = sys.module_of_state_topic(topic)) return m;
  }
  return nullptr;
}

void eval_predicates(TraceEvent& e, const Configuration& c, const SystemSpec& sys) {
  const ModuleSpec* m = owning_module(sys, e.node, e.writes);
  if (!m) return;
  auto it = c.topics.find(m->state_topic);
  if (it == c.topics.end()) return;
  auto s = state_from_value(it->second);
  if (!s) return;
  e.safe = m->safe.contains(*s);
  e.safer = m->safer.contains(*s);
  Mode mode = e.mode_after ? *e.mode_after : module_mode(c, *m);
  if (mode == Mode::SC) {
    e.inv = e.safe;
  } else if (m->inv_ac) {
    e.inv = m->inv_ac(*s);
  }
}

}  // namespace

Trace run(const SystemSpec& sys, const RunOptions& opts) {
  Trace trace;
  auto emit = [&](TraceEvent e) {
    if (opts.sink) {
      opts.sink(e);
    } else {
      trace.events.push_back(std::move(e));
    }
  };

  const Calendar& cal = opts.calendar ? *opts.calendar : sys.calendar;
  OrderFn order = opts.order ? opts.order : default_order();

  EnvScript env = opts.env;
  std::stable_sort(env.begin(), env.end(),
                   [](const EnvWrite& a, const EnvWrite& b) { return a.time < b.time; });
  std::size_t env_idx = 0;

  Configuration c = init_configuration(sys);
  // The formal initial configuration has an empty due set; entries at exactly
  // t=0 are loaded here so phase-0 nodes get their first firing.
  c.fire_now = cal.firing_at(0);

  std::map<std::string, int> firing_index;

  while (true) {
    while (env_idx < env.size() && env[env_idx].time <= c.current_time) {
      const EnvWrite& w = env[env_idx++];
      c = step_env_input(c, sys, w.topic, w.value);
      TraceEvent e;
      e.time = c.current_time;
      e.rule = Rule::env_input;
      e.node = w.topic;
      e.writes.emplace_back(w.topic, w.value);
      eval_predicates(e, c, sys);
      emit(std::move(e));
    }

    for (const auto& name : order(c.fire_now, sys)) {
      if (!c.fire_now.count(name)) continue;
      int idx = firing_index[name]++;
      TraceEvent e;
      e.time = c.current_time;
      e.node = name;
      if (sys.is_dm(name)) {
        e.rule = Rule::dm_step;
        bool dropped = opts.faults && opts.faults->drop &&
                       opts.faults->drop(name, c.current_time, idx);
        if (dropped) {
          Mode mode = std::any_cast<Mode>(c.local_states.at(name));
          c = skip_firing(c, name);
          e.mode_before = mode;
          e.mode_after = mode;
        } else {
          DmStepOutcome out = step_dm(c, sys, name);
          c = std::move(out.config);
          e.mode_before = out.before;
          e.mode_after = out.after;
        }
      } else {
        e.rule = Rule::node_step;
        OutputTransform transform;
        if (opts.faults && opts.faults->rewrite) {
          transform = [&](const std::string& node, const Valuation& outs) {
            return opts.faults->rewrite(node, c.current_time, idx, outs);
          };
        }
        NodeStepOutcome out = step_node(c, sys, name,
                                        transform ? &transform : nullptr);
        c = std::move(out.config);
        e.writes.assign(out.writes.begin(), out.writes.end());
      }
      eval_predicates(e, c, sys);
      emit(std::move(e));
    }

    auto next = cal.next_time_after(c.current_time);
    if (!next || *next > opts.horizon) break;
    c = step_time_progress(c, sys, cal);
    TraceEvent e;
    e.time = c.current_time;
    e.rule = Rule::time_progress;
    e.node = "-";
    emit(std::move(e));
  }
  return trace;
}

}  // namespace rta
