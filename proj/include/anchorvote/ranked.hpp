#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "anchorvote/core.hpp"
#include "anchorvote/enumerate.hpp"

namespace anchorvote {

/// A linear order over some of the alternatives, best first. Everything
/// missing is implicitly below everything listed.
using TruncatedBallot = std::vector<int>;

/// Top-truncated ballot under anchoring: a shown alternative is dropped when
/// something already ranked beats it in p, and otherwise, if acceptable,
/// slotted in where p puts it.
TruncatedBallot generate_truncated(const PreferenceApproval& p, const PresentationOrder& order);

enum class RankRule {
  Plurality,
  FirstVoterSecond,  // {voter 1's second entry}, or her top when she lists one
};

std::string_view to_string(RankRule r);
RankRule parse_rank_rule(std::string_view s);

Outcome eval_rank_rule(RankRule rule, const std::vector<TruncatedBallot>& ballots, int m);

struct RankVerdict {
  bool holds = true;
  // tops-only failure: two inducible ballot profiles with equal tops
  std::optional<std::vector<TruncatedBallot>> first;
  std::optional<std::vector<TruncatedBallot>> second;
  // anchor-proof failure: profile and two order vectors
  std::optional<Profile> profile;
  std::optional<OrderVector> sigma;
  std::optional<OrderVector> pi;
  Outcome outcome_first;
  Outcome outcome_second;
};

/// Every two ballot profiles that some (profile, order vector) can induce
/// and that agree on all tops get the same outcome.
RankVerdict tops_only_check(RankRule rule, int n, int m, Budget& budget);

/// On every profile, all order vectors give the same outcome.
RankVerdict rank_anchor_proof(RankRule rule, int n, int m, Budget& budget);

std::string format_truncated(const TruncatedBallot& b, const Alphabet& alphabet);

}  // namespace anchorvote
