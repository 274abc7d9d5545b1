#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "anchorvote/ballots.hpp"
#include "anchorvote/core.hpp"
#include "anchorvote/enumerate.hpp"
#include "anchorvote/rules.hpp"

namespace anchorvote {

/// Outcome of `rule` for every order vector on one fixed profile, indexed as
/// OrderSpace(n, m).
std::vector<Outcome> outcome_row(const RuleId& rule, const Profile& profile, Budget& budget);

/// Outcomes for every (profile, order vector) of a profile space.
/// Stored order-major so two order vectors compare as two contiguous columns.
class OutcomeTable {
 public:
  OutcomeTable(const RuleId& rule, const ProfileSpace& space, Budget& budget);

  std::uint64_t profiles() const { return profiles_; }
  std::uint64_t orders() const { return orders_; }
  Outcome at(std::uint64_t profile, std::uint64_t order) const {
    return Outcome(cells_[order * profiles_ + profile]);
  }
  const std::uint8_t* column(std::uint64_t order) const { return cells_.data() + order * profiles_; }

 private:
  std::uint64_t profiles_;
  std::uint64_t orders_;
  std::vector<std::uint8_t> cells_;
};

/// Distinct outcomes over all order vectors, ascending by bitmask.
std::vector<Outcome> outcome_set(const RuleId& rule, const Profile& profile, Budget& budget);

/// Result of a decision procedure. The optional fields form the witness that
/// certifies the verdict's polarity, when one exists.
struct Verdict {
  bool holds = false;
  std::optional<Profile> profile;
  std::optional<OrderVector> sigma;
  std::optional<OrderVector> pi;
  std::optional<Outcome> outcome_sigma;
  std::optional<Outcome> outcome_pi;
  std::string note;
};

/// Holds iff every order vector yields the same outcome; a failing verdict
/// carries two order vectors with different outcomes.
Verdict anchor_proof_for_profile(const RuleId& rule, const Profile& profile, Budget& budget);

/// The six quantifier patterns over profiles and order pairs (sigma != pi):
///   Q1  all p, all pairs       Q4  all p, some pair
///   Q2  some p, all pairs      Q5  all pairs, some p
///   Q3  some pair, all p       Q6  some p, some pair
/// each asking for F(A_{p,sigma}) = F(A_{p,pi}).
enum class Question { Q1 = 1, Q2, Q3, Q4, Q5, Q6 };

std::string_view to_string(Question q);
Question parse_question(std::string_view s);

Verdict quantifier_check(const RuleId& rule, Question q, int n, int m, DomainFilter domain, Budget& budget);

/// Closed-form anchor-proofness of SAV. With M the top plurality score: every
/// y below M has acc(y) < M, and when several alternatives tie at M each of
/// them has acc = M. A unique leader may have acc above M.
bool sav_char(const Profile& profile);

/// Closed-form anchor-proofness of nomination: PLUR(p) = ACC(p).
bool nom_char(const Profile& profile);

/// Profiles on which every weakly unanimous rule is anchor-proof: intolerant,
/// or exactly one unanimously accepted alternative which everyone ranks first.
bool weakuna_char(const Profile& profile);

using OrderPair = std::pair<OrderVector, OrderVector>;

/// A pair sigma != pi on which nomination agrees for every tolerant profile:
/// every alternative in X' (all of X when n >= m, else the first n) is shown
/// first to some voter in both orders, X' precedes the rest, and the rest
/// keeps one common order. With fewer than three heads the first two voters
/// trade orders instead. Nothing for a single voter.
std::optional<OrderPair> nomination_order_pair(int n, int m);

/// A profile on which nomination separates sigma and pi (sigma != pi):
/// voter i with x before y in sigma_i and y before x in pi_i ranks (y, x, ...)
/// with both acceptable; every other voter accepts only y.
Profile nomination_separating_profile(const OrderVector& sigma, const OrderVector& pi);

/// sigma shows x first to everyone, pi shows y first; every other position
/// follows index order.
OrderPair first_shown_pair(int n, int m, int x, int y);

/// Tolerant profile on which the cautious SAV rule returns X under both
/// sigma and pi: voter 1 ranks sigma_1's second alternative above its first,
/// voter 2 does the same for pi_2. Needs n >= 2.
Profile cautious_sav_profile(const OrderVector& sigma, const OrderVector& pi);

}  // namespace anchorvote
