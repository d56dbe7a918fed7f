#ifndef PHOTOPLAN_BUILTIN_SCENARIOS_HPP
#define PHOTOPLAN_BUILTIN_SCENARIOS_HPP

#include <map>
#include <string>

#include "photoplan/scenario.hpp"

namespace photoplan {

/// Text of every bundled scenario, keyed by name. The files under
/// scenarios/ carry byte-identical content (a test enforces the sync); the
/// embedded copies keep validation suites independent of the working
/// directory.
const std::map<std::string, std::string>& builtin_scenario_texts();

/// Parses a bundled scenario by name; throws std::invalid_argument with the
/// list of valid names when unknown.
Scenario builtin_scenario(const std::string& name);

}  // namespace photoplan

#endif  // PHOTOPLAN_BUILTIN_SCENARIOS_HPP
