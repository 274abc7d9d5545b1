#pragma once

// Acceptance criteria as library calls, plus the fixed profiles they share
// with the reproduction cases. Every check recomputes from primitives.

#include <string>
#include <string_view>
#include <vector>

#include "anchorvote/core.hpp"
#include "anchorvote/planner.hpp"
#include "anchorvote/rules.hpp"
#include "anchorvote/text_format.hpp"

namespace anchorvote {

struct CheckLine {
  std::string id;
  std::string title;
  bool pass = false;
  std::string detail;
  double seconds = 0;
};

std::string format_check(const CheckLine& line);
bool all_pass(const std::vector<CheckLine>& lines);

namespace fixtures {

/// Two alternatives x, y; two voters top x, three top y; everyone accepts both.
ProfileFile two_project_election();

/// A planner setup whose sigma* the constructive proofs claim is optimal.
struct ManipulationSetup {
  std::string name;
  RuleId rule;
  InfoFunction info;
  Profile profile;
  PlannerPreference pref;
  OrderVector sigma_star;
};

/// SAV and NOM under acceptability points and plurality points, n = 3, m = 3.
std::vector<ManipulationSetup> manipulation_setups();

/// n = 4, m = 3: voter 1 (a b | c), voter 2 (a | b c), voters 3 and 4 (b | a c).
Profile alternative_structure_profile();

}  // namespace fixtures

constexpr int kCriteria = 15;

/// Runs criterion id in 1..kCriteria.
CheckLine run_criterion(int id);

/// suite is "all" or a criterion number.
std::vector<CheckLine> run_verify(std::string_view suite);

}  // namespace anchorvote
