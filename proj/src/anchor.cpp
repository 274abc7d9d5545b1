#include "anchorvote/anchor.hpp"

#include <algorithm>
#include <cstring>

namespace anchorvote {

namespace {

// Ballot of each voter under each of the m! orders, voter-major.
std::vector<ApprovalBallot> ballots_by_order(const Profile& profile) {
  const auto& orders = all_orders(profile.alternatives());
  std::vector<ApprovalBallot> out;
  out.reserve(static_cast<std::size_t>(profile.voters()) * orders.size());
  for (const auto& p : profile.entries())
    for (const auto& o : orders) out.push_back(generate_ballot(p, o));
  return out;
}

// Walks every order vector (odometer, last voter fastest) and hands the
// outcome to sink(order_index, outcome).
template <class Sink>
void sweep_orders(const RuleId& rule, std::span<const ApprovalBallot> per_voter, int n, int m, Sink&& sink) {
  const int radix = static_cast<int>(factorial(m));
  std::vector<int> digit(static_cast<std::size_t>(n), 0);
  BallotProfile ballots(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) ballots[static_cast<std::size_t>(i)] = per_voter[static_cast<std::size_t>(i * radix)];
  for (std::uint64_t o = 0;; ++o) {
    sink(o, eval_rule(rule, ballots, m));
    int i = n - 1;
    while (i >= 0 && ++digit[static_cast<std::size_t>(i)] == radix) {
      digit[static_cast<std::size_t>(i)] = 0;
      ballots[static_cast<std::size_t>(i)] = per_voter[static_cast<std::size_t>(i * radix)];
      --i;
    }
    if (i < 0) break;
    ballots[static_cast<std::size_t>(i)] =
        per_voter[static_cast<std::size_t>(i * radix + digit[static_cast<std::size_t>(i)])];
  }
}

Verdict fail_with_pair(const Profile& p, const OrderSpace& os, std::uint64_t a, std::uint64_t b, Outcome oa,
                       Outcome ob, std::string note) {
  Verdict v;
  v.holds = false;
  v.profile = p;
  v.sigma = os.at(a);
  v.pi = os.at(b);
  v.outcome_sigma = oa;
  v.outcome_pi = ob;
  v.note = std::move(note);
  return v;
}

}  // namespace

std::vector<Outcome> outcome_row(const RuleId& rule, const Profile& profile, Budget& budget) {
  const int n = profile.voters();
  const int m = profile.alternatives();
  validate_rule(rule, m);
  const OrderSpace os(n, m);
  budget.charge(os.size(), "order-vector sweep");
  const auto per_voter = ballots_by_order(profile);
  std::vector<Outcome> row(os.size());
  sweep_orders(rule, per_voter, n, m, [&](std::uint64_t o, Outcome out) { row[o] = out; });
  return row;
}

OutcomeTable::OutcomeTable(const RuleId& rule, const ProfileSpace& space, Budget& budget)
    : profiles_(space.size()), orders_(OrderSpace(space.voters(), space.alternatives()).size()) {
  const int n = space.voters();
  const int m = space.alternatives();
  validate_rule(rule, m);
  if (profiles_ > UINT64_MAX / orders_) throw BudgetExceeded("outcome table size overflows");
  budget.charge(profiles_ * orders_, "outcome table");
  cells_.resize(profiles_ * orders_);
  const BallotTable table(voter_options(m, space.domain()), m);
  const int radix = table.orders();
  parallel_for(0, profiles_, [&](std::uint64_t p) {
    std::vector<int> digits;
    space.digits(p, digits);
    std::vector<ApprovalBallot> per_voter(static_cast<std::size_t>(n * radix));
    for (int i = 0; i < n; ++i)
      for (int k = 0; k < radix; ++k)
        per_voter[static_cast<std::size_t>(i * radix + k)] = table.at(digits[static_cast<std::size_t>(i)], k);
    sweep_orders(rule, per_voter, n, m, [&](std::uint64_t o, Outcome out) {
      cells_[o * profiles_ + p] = static_cast<std::uint8_t>(out.bits());
    });
  });
}

std::vector<Outcome> outcome_set(const RuleId& rule, const Profile& profile, Budget& budget) {
  auto row = outcome_row(rule, profile, budget);
  std::sort(row.begin(), row.end());
  row.erase(std::unique(row.begin(), row.end()), row.end());
  return row;
}

Verdict anchor_proof_for_profile(const RuleId& rule, const Profile& profile, Budget& budget) {
  const auto row = outcome_row(rule, profile, budget);
  const OrderSpace os(profile.voters(), profile.alternatives());
  for (std::uint64_t o = 1; o < row.size(); ++o)
    if (row[o] != row[0]) return fail_with_pair(profile, os, 0, o, row[0], row[o], "outcome depends on the order");
  Verdict v;
  v.holds = true;
  v.profile = profile;
  v.note = "every order vector yields the same outcome";
  return v;
}

std::string_view to_string(Question q) {
  switch (q) {
    case Question::Q1: return "q1";
    case Question::Q2: return "q2";
    case Question::Q3: return "q3";
    case Question::Q4: return "q4";
    case Question::Q5: return "q5";
    case Question::Q6: return "q6";
  }
  return "?";
}

Question parse_question(std::string_view s) {
  if (s.size() == 2 && (s[0] == 'q' || s[0] == 'Q') && s[1] >= '1' && s[1] <= '6')
    return static_cast<Question>(s[1] - '0');
  throw Error("unknown question '" + std::string(s) + "' (q1..q6)");
}

Verdict quantifier_check(const RuleId& rule, Question q, int n, int m, DomainFilter domain, Budget& budget) {
  const ProfileSpace ps(n, m, domain);
  const OrderSpace os(n, m);
  if (os.size() < 2) throw Error("need at least two order vectors");
  if (ps.size() == 0) throw Error("empty profile domain");
  const OutcomeTable table(rule, ps, budget);
  const std::uint64_t P = table.profiles();
  const std::uint64_t O = table.orders();

  auto profile_verdict = [&](bool holds, std::uint64_t p, std::string note) {
    Verdict v;
    v.holds = holds;
    v.profile = ps.at(p);
    v.note = std::move(note);
    return v;
  };
  // First order differing from order 0 on profile p, or O if the row is constant.
  auto first_change = [&](std::uint64_t p) {
    const Outcome base = table.at(p, 0);
    for (std::uint64_t o = 1; o < O; ++o)
      if (table.at(p, o) != base) return o;
    return O;
  };
  // Two distinct orders with equal outcomes on p, if any.
  auto repeated_pair = [&](std::uint64_t p) -> std::optional<std::pair<std::uint64_t, std::uint64_t>> {
    std::vector<std::uint64_t> seen(256, UINT64_MAX);
    for (std::uint64_t o = 0; o < O; ++o) {
      auto& s = seen[table.at(p, o).bits()];
      if (s != UINT64_MAX) return std::make_pair(s, o);
      s = o;
    }
    return std::nullopt;
  };
  auto pair_verdict = [&](bool holds, std::uint64_t a, std::uint64_t b, std::string note) {
    Verdict v;
    v.holds = holds;
    v.sigma = os.at(a);
    v.pi = os.at(b);
    v.note = std::move(note);
    return v;
  };

  switch (q) {
    case Question::Q1:
      for (std::uint64_t p = 0; p < P; ++p)
        if (const auto o = first_change(p); o < O)
          return fail_with_pair(ps.at(p), os, 0, o, table.at(p, 0), table.at(p, o),
                                "profile whose outcome depends on the order");
      return {true, {}, {}, {}, {}, {}, "every profile is anchor-proof"};
    case Question::Q2:
      for (std::uint64_t p = 0; p < P; ++p)
        if (first_change(p) == O) return profile_verdict(true, p, "anchor-proof profile");
      return {false, {}, {}, {}, {}, {}, "no profile in the domain is anchor-proof"};
    case Question::Q4:
      for (std::uint64_t p = 0; p < P; ++p)
        if (!repeated_pair(p)) return profile_verdict(false, p, "every order vector gives a distinct outcome");
      return {true, {}, {}, {}, {}, {}, "every profile has two orders with equal outcomes"};
    case Question::Q6:
      for (std::uint64_t p = 0; p < P; ++p)
        if (const auto pr = repeated_pair(p)) {
          Verdict v = fail_with_pair(ps.at(p), os, pr->first, pr->second, table.at(p, pr->first),
                                     table.at(p, pr->second), "profile and order pair with equal outcomes");
          v.holds = true;
          return v;
        }
      return {false, {}, {}, {}, {}, {}, "no profile admits two orders with equal outcomes"};
    case Question::Q3:
    case Question::Q5: {
      const std::uint64_t pairs = O * (O - 1) / 2;
      if (pairs > UINT64_MAX / P) throw BudgetExceeded("order-pair sweep overflows");
      budget.charge(pairs * P, "order-pair sweep");
      for (std::uint64_t a = 0; a < O; ++a) {
        const std::uint8_t* ca = table.column(a);
        for (std::uint64_t b = a + 1; b < O; ++b) {
          const std::uint8_t* cb = table.column(b);
          if (q == Question::Q3) {
            if (std::memcmp(ca, cb, P) == 0)
              return pair_verdict(true, a, b, "order pair with equal outcomes on every profile");
          } else {
            bool some = false;
            for (std::uint64_t p = 0; p < P && !some; ++p) some = ca[p] == cb[p];
            if (!some) return pair_verdict(false, a, b, "order pair that no profile equalizes");
          }
        }
      }
      if (q == Question::Q3) return {false, {}, {}, {}, {}, {}, "every order pair is separated by some profile"};
      return {true, {}, {}, {}, {}, {}, "every order pair is equalized by some profile"};
    }
  }
  throw Error("unknown question");
}

bool sav_char(const Profile& profile) {
  const Tally t = tally_points(profile);
  const int top = *std::max_element(t.plur.begin(), t.plur.end());
  const auto leaders = std::count(t.plur.begin(), t.plur.end(), top);
  for (std::size_t y = 0; y < t.plur.size(); ++y) {
    // A lone leader keeps winning however many extra approvals it collects.
    if (t.plur[y] == top && leaders > 1 && t.acc[y] != top) return false;
    if (t.plur[y] < top && t.acc[y] >= top) return false;
  }
  return true;
}

bool nom_char(const Profile& profile) {
  const SupportSets s = support_sets(profile);
  return s.plur == s.acc;
}

bool weakuna_char(const Profile& profile) {
  if (profile.intolerant()) return true;
  const AltSet u = unanimously_accepted(profile);
  if (u.size() != 1) return false;
  const int x = u.first();
  return std::all_of(profile.entries().begin(), profile.entries().end(),
                     [x](const PreferenceApproval& p) { return p.top() == x; });
}

std::optional<OrderPair> nomination_order_pair(int n, int m) {
  if (n < 1 || m < 2) return std::nullopt;
  const int shown = std::min(n, m);  // |X'|
  auto build = [&](int voter, bool swap_tail) {
    // X' with this voter's assigned alternative first, then the rest of X'
    // in index order, then X \ X' in index order.
    const int head = voter < shown ? voter : 0;
    std::vector<int> seq{head};
    for (int x = 0; x < shown; ++x)
      if (x != head) seq.push_back(x);
    for (int x = shown; x < m; ++x) seq.push_back(x);
    if (swap_tail) std::swap(seq[1], seq[2]);
    return PresentationOrder(std::move(seq));
  };
  OrderVector sigma, pi;
  for (int i = 0; i < n; ++i) sigma.push_back(build(i, false));
  pi = sigma;
  if (shown >= 3) {
    pi[0] = build(0, true);
  } else if (n >= 2) {
    // Which voter sees which head is free, so two voters can trade orders.
    std::swap(pi[0], pi[1]);
  } else {
    return std::nullopt;
  }
  return OrderPair{std::move(sigma), std::move(pi)};
}

Profile nomination_separating_profile(const OrderVector& sigma, const OrderVector& pi) {
  if (sigma.size() != pi.size() || sigma.empty()) throw Error("order vectors differ in length");
  const int m = sigma.front().size();
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (sigma[i] == pi[i]) continue;
    for (int k = 0; k < m; ++k)
      for (int l = k + 1; l < m; ++l) {
        const int x = sigma[i][k];
        const int y = sigma[i][l];
        if (pi[i].step_of(y) >= pi[i].step_of(x)) continue;
        std::vector<PreferenceApproval> voters;
        for (std::size_t j = 0; j < sigma.size(); ++j) {
          std::vector<int> ranking{y};
          if (j == i) ranking.push_back(x);
          for (int z = 0; z < m; ++z)
            if (z != y && (j != i || z != x)) ranking.push_back(z);
          voters.emplace_back(std::move(ranking), j == i ? 2 : 1);
        }
        return Profile(std::move(voters));
      }
  }
  throw Error("sigma and pi are identical");
}

OrderPair first_shown_pair(int n, int m, int x, int y) {
  auto build = [m](int head) {
    std::vector<int> seq{head};
    for (int z = 0; z < m; ++z)
      if (z != head) seq.push_back(z);
    return PresentationOrder(std::move(seq));
  };
  return {OrderVector(static_cast<std::size_t>(n), build(x)), OrderVector(static_cast<std::size_t>(n), build(y))};
}

Profile cautious_sav_profile(const OrderVector& sigma, const OrderVector& pi) {
  if (sigma.size() < 2 || sigma.size() != pi.size()) throw Error("cautious SAV construction needs n >= 2");
  const int m = sigma.front().size();
  auto second_first = [m](const PresentationOrder& o) {
    std::vector<int> ranking{o[1], o[0]};
    for (int z = 0; z < m; ++z)
      if (z != o[0] && z != o[1]) ranking.push_back(z);
    return PreferenceApproval(std::move(ranking), m);
  };
  std::vector<PreferenceApproval> voters;
  voters.push_back(second_first(sigma[0]));
  voters.push_back(second_first(pi[1]));
  for (std::size_t i = 2; i < sigma.size(); ++i) voters.emplace_back(sigma[i].sequence(), m);
  return Profile(std::move(voters));
}

}  // namespace anchorvote
