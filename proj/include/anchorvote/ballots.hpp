#pragma once

#include <vector>

#include "anchorvote/core.hpp"

namespace anchorvote {

/// Approval ballot formed under anchoring: walking the presentation order,
/// an alternative is approved iff it is acceptable and strictly preferred to
/// everything approved so far. Always contains p's top; always within ACC(p).
ApprovalBallot generate_ballot(const PreferenceApproval& p, const PresentationOrder& order);

BallotProfile generate_ballot_profile(const Profile& profile, const OrderVector& orders);

struct DerivedOrders {
  PresentationOrder worst_first;  // ballot = ACC(p)
  PresentationOrder best_first;   // ballot = {top}
};

DerivedOrders derived_orders(const PreferenceApproval& p);

/// Order whose ballot is (target ∩ ACC(p)) ∪ {top(p)}.
PresentationOrder order_for_target(const PreferenceApproval& p, AltSet target);

/// Preference-approval whose ballot under `order` is exactly `target`.
/// Throws Error on an empty target.
PreferenceApproval preference_for_target(const PresentationOrder& order, AltSet target);

/// Tolerant preference-approval whose ballot under `order` is
/// target ∪ {order's first alternative}.
PreferenceApproval tolerant_preference_for_target(const PresentationOrder& order, AltSet target);

/// app(x): number of voters whose ballot contains x.
std::vector<int> app_points(const Profile& profile, const OrderVector& orders);

/// Ballot lookup by (voter option, order index) for one alternative count;
/// the enumeration engines read ballots from here instead of re-running the walk.
class BallotTable {
 public:
  BallotTable(const std::vector<PreferenceApproval>& options, int m);

  ApprovalBallot at(int option, int order) const {
    return ballots_[static_cast<std::size_t>(option) * orders_ + static_cast<std::size_t>(order)];
  }
  int orders() const { return static_cast<int>(orders_); }

 private:
  std::size_t orders_;
  std::vector<ApprovalBallot> ballots_;
};

}  // namespace anchorvote
