#pragma once

// Deliberately naive reference implementations for the unit tests. They
// share nothing with the library beyond the value types: sets are std::set,
// ballots follow the stepwise definition A^1, A^2, ... literally, and order
// vectors are walked with std::next_permutation.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <vector>

#include "anchorvote/core.hpp"
#include "anchorvote/rules.hpp"

namespace oracle {

using anchorvote::AltSet;
using anchorvote::PreferenceApproval;
using anchorvote::Profile;

inline std::set<int> acceptable(const PreferenceApproval& p) {
  const auto& r = p.ranking();
  return {r.begin(), r.begin() + p.threshold()};
}

inline bool ranked_above(const PreferenceApproval& p, int x, int y) {
  const auto& r = p.ranking();
  return std::find(r.begin(), r.end(), x) < std::find(r.begin(), r.end(), y);
}

/// A^1 = {s^1} ∩ ACC(p); A^k = A^{k-1} ∪ {s^k} iff s^k ∈ ACC(p) and s^k is
/// above every member of A^{k-1}, else A^{k-1}.
inline std::set<int> ballot(const PreferenceApproval& p, const std::vector<int>& shown) {
  const auto acc = acceptable(p);
  std::set<int> a;
  if (acc.count(shown[0])) a.insert(shown[0]);
  for (std::size_t k = 1; k < shown.size(); ++k) {
    const int s = shown[k];
    bool beats_all = true;
    for (int x : a) beats_all = beats_all && ranked_above(p, s, x);
    if (acc.count(s) && beats_all) a.insert(s);
  }
  return a;
}

inline AltSet to_altset(const std::set<int>& s) {
  AltSet out;
  for (int x : s) out = out.with(x);
  return out;
}

inline std::set<int> everything(int m) {
  std::set<int> s;
  for (int x = 0; x < m; ++x) s.insert(x);
  return s;
}

inline std::set<int> common(const std::vector<std::set<int>>& ballots, int m) {
  std::set<int> u = everything(m);
  for (const auto& b : ballots) {
    std::set<int> keep;
    for (int x : u)
      if (b.count(x)) keep.insert(x);
    u = keep;
  }
  return u;
}

/// The registry rules, straight from their definitions.
inline std::set<int> rule(const anchorvote::RuleId& r, const std::vector<std::set<int>>& ballots, int m) {
  using anchorvote::RuleKind;
  std::map<int, int> votes;
  for (int x = 0; x < m; ++x) votes[x] = 0;
  for (const auto& b : ballots)
    for (int x : b) ++votes[x];
  auto argmax = [&] {
    int best = 0;
    for (auto [x, c] : votes) best = std::max(best, c);
    std::set<int> w;
    for (auto [x, c] : votes)
      if (c == best) w.insert(x);
    return w;
  };
  std::set<int> all_approved;
  for (const auto& b : ballots) all_approved.insert(b.begin(), b.end());
  const auto u = common(ballots, m);
  switch (r.kind) {
    case RuleKind::Sav:
      return argmax();
    case RuleKind::Nom:
      return all_approved;
    case RuleKind::Constant: {
      std::set<int> c;
      for (int x : r.set.members()) c.insert(x);
      return c;
    }
    case RuleKind::FixedX:
      return u.count(r.alt) ? std::set<int>{r.alt} : everything(m);
    case RuleKind::UnanOrAll:
      return u.empty() ? everything(m) : u;
    case RuleKind::UnanOrLargest: {
      if (!u.empty()) return u;
      std::size_t best = 0;
      for (std::size_t i = 1; i < ballots.size(); ++i)
        if (ballots[i].size() > ballots[best].size()) best = i;
      return ballots[best];
    }
    case RuleKind::SavCautious:
      for (const auto& b : ballots)
        if (b.size() >= 2) return everything(m);
      return argmax();
    case RuleKind::NomExcluding: {
      std::set<int> kept;
      for (int x : all_approved)
        if (!r.set.contains(x)) kept.insert(x);
      return kept.empty() ? everything(m) : kept;
    }
  }
  return {};
}

/// Calls visit(orders) for every order vector, last voter fastest.
inline void each_order_vector(int n, int m, const std::function<void(const std::vector<std::vector<int>>&)>& visit) {
  std::vector<int> base(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) base[static_cast<std::size_t>(x)] = x;
  std::vector<std::vector<int>> orders(static_cast<std::size_t>(n), base);
  std::function<void(int)> rec = [&](int i) {
    if (i == n) {
      visit(orders);
      return;
    }
    auto& o = orders[static_cast<std::size_t>(i)];
    o = base;
    do rec(i + 1);
    while (std::next_permutation(o.begin(), o.end()));
    o = base;
  };
  rec(0);
}

/// Outcome for every order vector, in enumeration order.
inline std::vector<std::set<int>> outcomes(const anchorvote::RuleId& r, const Profile& p) {
  std::vector<std::set<int>> out;
  const int m = p.alternatives();
  each_order_vector(p.voters(), m, [&](const std::vector<std::vector<int>>& orders) {
    std::vector<std::set<int>> ballots;
    for (int i = 0; i < p.voters(); ++i) ballots.push_back(ballot(p[i], orders[static_cast<std::size_t>(i)]));
    out.push_back(rule(r, ballots, m));
  });
  return out;
}

inline bool anchor_proof(const anchorvote::RuleId& r, const Profile& p) {
  const auto o = outcomes(r, p);
  return std::all_of(o.begin(), o.end(), [&](const std::set<int>& s) { return s == o.front(); });
}

/// Every preference-approval over m alternatives, by nested loops.
inline std::vector<PreferenceApproval> all_preferences(int m) {
  std::vector<int> r(static_cast<std::size_t>(m));
  for (int x = 0; x < m; ++x) r[static_cast<std::size_t>(x)] = x;
  std::vector<PreferenceApproval> out;
  do
    for (int t = 1; t <= m; ++t) out.emplace_back(r, t);
  while (std::next_permutation(r.begin(), r.end()));
  return out;
}

/// Every profile of n voters (voter 0 most significant), filtered.
inline std::vector<Profile> all_profiles(int n, int m, const std::function<bool(const PreferenceApproval&)>& keep) {
  std::vector<PreferenceApproval> opts;
  for (auto& p : all_preferences(m))
    if (keep(p)) opts.push_back(p);
  std::vector<Profile> out;
  std::vector<std::size_t> d(static_cast<std::size_t>(n), 0);
  for (;;) {
    std::vector<PreferenceApproval> v;
    for (auto k : d) v.push_back(opts[k]);
    out.emplace_back(std::move(v));
    int i = n - 1;
    while (i >= 0 && ++d[static_cast<std::size_t>(i)] == opts.size()) d[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) break;
  }
  return out;
}

}  // namespace oracle
