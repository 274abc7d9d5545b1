#pragma once

#include <string_view>
#include <vector>

#include "anchorvote/verify.hpp"

namespace anchorvote {

/// Recomputes one worked case and checks each expectation:
/// example1 | example2 | example9 | table3 | fig1.
std::vector<CheckLine> run_reproduction(std::string_view case_id);

}  // namespace anchorvote
