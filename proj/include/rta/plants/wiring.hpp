#pragma once

#include <functional>
#include <string>

#include "rta/node.hpp"
#include "rta/value.hpp"

namespace rta {

// How a case study is assembled: the full switching module, or one
// controller wired straight to the plant for baseline comparisons.
enum class WiringMode { rta, ac_only, sc_only };

const char* wiring_mode_name(WiringMode m);

// Stateless monitor node: reads a state-valued topic, publishes fn(state)
// on the flag topic every period.
NodeSpec make_flag_node(std::string name, std::string state_topic,
                        std::string flag_topic, Tick period,
                        std::function<double(const State&)> fn);

}  // namespace rta
