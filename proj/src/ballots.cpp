#include "anchorvote/ballots.hpp"

#include "anchorvote/enumerate.hpp"

namespace anchorvote {

namespace {

void check_dims(int pm, int om) {
  if (pm != om)
    throw Error("preference over " + std::to_string(pm) + " alternatives, order over " + std::to_string(om));
}

// Target members ranked so the last shown is best, then everything else by index.
std::vector<int> rank_by_reverse_appearance(const PresentationOrder& order, AltSet target) {
  std::vector<int> ranking;
  for (int k = order.size() - 1; k >= 0; --k)
    if (target.contains(order[k])) ranking.push_back(order[k]);
  for (int x = 0; x < order.size(); ++x)
    if (!target.contains(x)) ranking.push_back(x);
  return ranking;
}

}  // namespace

ApprovalBallot generate_ballot(const PreferenceApproval& p, const PresentationOrder& order) {
  check_dims(p.alternatives(), order.size());
  // Acceptable alternatives outrank unacceptable ones, so comparing against
  // the best approved so far is the same as comparing against every member.
  AltSet ballot;
  int best = p.threshold();
  for (int k = 0; k < order.size(); ++k) {
    const int x = order[k];
    const int pos = p.position(x);
    if (pos < best) {
      ballot = ballot.with(x);
      best = pos;
    }
  }
  return ballot;
}

BallotProfile generate_ballot_profile(const Profile& profile, const OrderVector& orders) {
  if (static_cast<int>(orders.size()) != profile.voters())
    throw Error("order vector has " + std::to_string(orders.size()) + " entries for " +
                std::to_string(profile.voters()) + " voters");
  BallotProfile out;
  out.reserve(orders.size());
  for (int i = 0; i < profile.voters(); ++i)
    out.push_back(generate_ballot(profile[i], orders[static_cast<std::size_t>(i)]));
  return out;
}

DerivedOrders derived_orders(const PreferenceApproval& p) {
  std::vector<int> worst(p.ranking().rbegin(), p.ranking().rend());
  return {PresentationOrder(std::move(worst)), PresentationOrder(p.ranking())};
}

PresentationOrder order_for_target(const PreferenceApproval& p, AltSet target) {
  const AltSet keep = (target & p.acceptable_set()).with(p.top());
  std::vector<int> seq;
  for (int k = p.alternatives() - 1; k >= 0; --k) {
    const int x = p.ranking()[static_cast<std::size_t>(k)];
    if (keep.contains(x)) seq.push_back(x);
  }
  for (int x = 0; x < p.alternatives(); ++x)
    if (!keep.contains(x)) seq.push_back(x);
  return PresentationOrder(std::move(seq));
}

PreferenceApproval preference_for_target(const PresentationOrder& order, AltSet target) {
  if (target.empty()) throw Error("no preference-approval yields an empty ballot");
  if (!target.subset_of(AltSet::full(order.size()))) throw Error("target outside the alternative set");
  return {rank_by_reverse_appearance(order, target), target.size()};
}

PreferenceApproval tolerant_preference_for_target(const PresentationOrder& order, AltSet target) {
  if (!target.subset_of(AltSet::full(order.size()))) throw Error("target outside the alternative set");
  return {rank_by_reverse_appearance(order, target.with(order.first())), order.size()};
}

std::vector<int> app_points(const Profile& profile, const OrderVector& orders) {
  std::vector<int> app(static_cast<std::size_t>(profile.alternatives()), 0);
  for (ApprovalBallot b : generate_ballot_profile(profile, orders))
    for (int x : b.members()) ++app[static_cast<std::size_t>(x)];
  return app;
}

BallotTable::BallotTable(const std::vector<PreferenceApproval>& options, int m)
    : orders_(all_orders(m).size()) {
  const auto& orders = all_orders(m);
  ballots_.reserve(options.size() * orders_);
  for (const auto& p : options)
    for (const auto& o : orders) ballots_.push_back(generate_ballot(p, o));
}

}  // namespace anchorvote
