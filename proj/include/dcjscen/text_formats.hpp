#pragma once

#include <string>
#include <string_view>

#include "dcjscen/fission.hpp"
#include "dcjscen/parking.hpp"
#include "dcjscen/tree.hpp"

namespace dcjscen {

// Scenario text: n on the first line, then one "base top" pair per line.
// Tree text: n on the first line, then one "u v" edge per line.
// Parking text: whitespace-separated integers on one line.
// In all three, '#' starts a comment and blank lines are ignored.

FissionScenario parse_scenario_text(std::string_view text);
std::string format_scenario_text(const FissionScenario& s);

ParkingFunction parse_parking_text(std::string_view text);
std::string format_parking_text(const ParkingFunction& pf);

LabeledTree parse_tree_text(std::string_view text);
std::string format_tree_text(const LabeledTree& t);

}  // namespace dcjscen
