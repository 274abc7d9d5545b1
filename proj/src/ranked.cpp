#include "anchorvote/ranked.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace anchorvote {

TruncatedBallot generate_truncated(const PreferenceApproval& p, const PresentationOrder& order) {
  if (p.alternatives() != order.size()) throw Error("preference and order disagree on m");
  TruncatedBallot ballot;
  for (int x : order.sequence()) {
    const bool dominated =
        std::any_of(ballot.begin(), ballot.end(), [&](int y) { return p.prefers(y, x); });
    if (dominated || !p.acceptable(x)) continue;
    auto at = std::find_if(ballot.begin(), ballot.end(), [&](int y) { return p.prefers(x, y); });
    ballot.insert(at, x);
  }
  return ballot;
}

std::string_view to_string(RankRule r) {
  return r == RankRule::Plurality ? "plurality" : "first-voter-second";
}

RankRule parse_rank_rule(std::string_view s) {
  if (s == "plurality") return RankRule::Plurality;
  if (s == "first-voter-second") return RankRule::FirstVoterSecond;
  throw Error("unknown ranked rule '" + std::string(s) + "' (plurality|first-voter-second)");
}

Outcome eval_rank_rule(RankRule rule, const std::vector<TruncatedBallot>& ballots, int m) {
  if (ballots.empty()) throw Error("no ballots");
  for (const auto& b : ballots)
    if (b.empty()) throw Error("empty ranked ballot");
  if (rule == RankRule::FirstVoterSecond) {
    const auto& b = ballots.front();
    return AltSet::single(b.size() >= 2 ? b[1] : b[0]);
  }
  std::vector<int> tops(static_cast<std::size_t>(m), 0);
  for (const auto& b : ballots) ++tops.at(static_cast<std::size_t>(b.front()));
  const int best = *std::max_element(tops.begin(), tops.end());
  AltSet out;
  for (int x = 0; x < m; ++x)
    if (tops[static_cast<std::size_t>(x)] == best) out = out.with(x);
  return out;
}

RankVerdict tops_only_check(RankRule rule, int n, int m, Budget& budget) {
  // Ballots a single voter can be induced to cast, over every preference and order.
  std::set<TruncatedBallot> inducible;
  for (const auto& p : voter_options(m, DomainFilter::All))
    for (const auto& o : all_orders(m)) inducible.insert(generate_truncated(p, o));
  const std::vector<TruncatedBallot> per_voter(inducible.begin(), inducible.end());
  const auto radix = static_cast<std::uint64_t>(per_voter.size());
  const std::uint64_t total = checked_pow(radix, n);
  if (total == UINT64_MAX) throw BudgetExceeded("ballot profile space overflows");
  budget.charge(total, "tops-only check");

  std::map<std::vector<int>, std::pair<std::vector<TruncatedBallot>, Outcome>> by_tops;
  std::vector<TruncatedBallot> ballots(static_cast<std::size_t>(n));
  std::vector<int> tops(static_cast<std::size_t>(n));
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::uint64_t rest = idx;
    for (int i = n - 1; i >= 0; --i) {
      ballots[static_cast<std::size_t>(i)] = per_voter[rest % radix];
      tops[static_cast<std::size_t>(i)] = ballots[static_cast<std::size_t>(i)].front();
      rest /= radix;
    }
    const Outcome out = eval_rank_rule(rule, ballots, m);
    auto [it, fresh] = by_tops.try_emplace(tops, ballots, out);
    if (!fresh && it->second.second != out) {
      RankVerdict v;
      v.holds = false;
      v.first = it->second.first;
      v.second = ballots;
      v.outcome_first = it->second.second;
      v.outcome_second = out;
      return v;
    }
  }
  return {};
}

RankVerdict rank_anchor_proof(RankRule rule, int n, int m, Budget& budget) {
  const ProfileSpace space(n, m);
  const OrderSpace orders(n, m);
  if (space.size() > UINT64_MAX / orders.size()) throw BudgetExceeded("ranked sweep overflows");
  budget.charge(space.size() * orders.size(), "ranked anchor-proof sweep");
  const auto& perms = all_orders(m);
  std::vector<int> digits;
  std::vector<TruncatedBallot> ballots(static_cast<std::size_t>(n));
  for (std::uint64_t pi = 0; pi < space.size(); ++pi) {
    const Profile p = space.at(pi);
    Outcome first;
    for (std::uint64_t o = 0; o < orders.size(); ++o) {
      orders.digits(o, digits);
      for (int i = 0; i < n; ++i)
        ballots[static_cast<std::size_t>(i)] =
            generate_truncated(p[i], perms[static_cast<std::size_t>(digits[static_cast<std::size_t>(i)])]);
      const Outcome out = eval_rank_rule(rule, ballots, m);
      if (o == 0) {
        first = out;
      } else if (out != first) {
        RankVerdict v;
        v.holds = false;
        v.profile = p;
        v.sigma = orders.at(0);
        v.pi = orders.at(o);
        v.outcome_first = first;
        v.outcome_second = out;
        return v;
      }
    }
  }
  return {};
}

std::string format_truncated(const TruncatedBallot& b, const Alphabet& alphabet) {
  std::string s;
  for (int x : b) {
    if (!s.empty()) s += " > ";
    s += alphabet.label(x);
  }
  return s;
}

}  // namespace anchorvote
