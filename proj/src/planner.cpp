#include "anchorvote/planner.hpp"

#include <algorithm>
#include <bitset>
#include <map>
#include <queue>

namespace anchorvote {

std::string_view to_string(InfoFunction f) {
  switch (f) {
    case InfoFunction::Zero: return "zero";
    case InfoFunction::AccPoints: return "acc";
    case InfoFunction::AccSets: return "acc-sets";
    case InfoFunction::PlPoints: return "pl";
    case InfoFunction::PlSets: return "pl-sets";
    case InfoFunction::Full: return "full";
    case InfoFunction::AltStructure: return "alt-structure";
    case InfoFunction::Thresholds: return "thresholds";
  }
  return "?";
}

InfoFunction parse_info(std::string_view s) {
  for (auto f : {InfoFunction::Zero, InfoFunction::AccPoints, InfoFunction::AccSets, InfoFunction::PlPoints,
                 InfoFunction::PlSets, InfoFunction::Full, InfoFunction::AltStructure, InfoFunction::Thresholds})
    if (to_string(f) == s) return f;
  throw Error("unknown info function '" + std::string(s) +
              "' (zero|acc|acc-sets|pl|pl-sets|full|alt-structure|thresholds)");
}

namespace {

std::vector<int> encode(const Profile& p) {
  std::vector<int> key;
  for (const auto& v : p.entries()) {
    key.insert(key.end(), v.ranking().begin(), v.ranking().end());
    key.push_back(v.threshold());
  }
  return key;
}

}  // namespace

InfoView info_view(InfoFunction f, const Profile& profile) {
  const auto m = static_cast<std::size_t>(profile.alternatives());
  InfoView view{f, {}};
  switch (f) {
    case InfoFunction::Zero:
      break;
    case InfoFunction::AccPoints:
      view.key = tally_points(profile).acc;
      break;
    case InfoFunction::PlPoints:
      view.key = tally_points(profile).plur;
      break;
    case InfoFunction::AccSets:
    case InfoFunction::PlSets: {
      view.key.assign(m, 0);
      for (int i = 0; i < profile.voters(); ++i) {
        const auto& p = profile[i];
        const AltSet s = f == InfoFunction::AccSets ? p.acceptable_set() : AltSet::single(p.top());
        for (int x : s.members()) view.key[static_cast<std::size_t>(x)] |= 1 << i;
      }
      break;
    }
    case InfoFunction::Full:
      view.key = encode(profile);
      break;
    case InfoFunction::AltStructure:
      view.key = encode(canonical_relabel(profile).canonical);
      break;
    case InfoFunction::Thresholds:
      for (const auto& p : profile.entries()) view.key.push_back(p.threshold());
      break;
  }
  return view;
}

Profile relabel(const Profile& profile, const std::vector<int>& mu) {
  std::vector<PreferenceApproval> voters;
  for (const auto& p : profile.entries()) {
    std::vector<int> ranking;
    for (int x : p.ranking()) ranking.push_back(mu.at(static_cast<std::size_t>(x)));
    voters.emplace_back(std::move(ranking), p.threshold());
  }
  return Profile(std::move(voters));
}

Relabeling canonical_relabel(const Profile& profile) {
  std::optional<Relabeling> best;
  for (auto& mu : permutations_of(profile.alternatives())) {
    Profile candidate = relabel(profile, mu);
    if (!best || candidate < best->canonical) best = Relabeling{std::move(candidate), std::move(mu)};
  }
  return std::move(*best);
}

std::vector<Profile> possible_worlds(InfoFunction f, const Profile& profile, Budget& budget) {
  if (f == InfoFunction::Full) return {profile};
  if (f == InfoFunction::AltStructure) {
    std::vector<Profile> orbit;
    for (const auto& mu : permutations_of(profile.alternatives())) orbit.push_back(relabel(profile, mu));
    budget.charge(orbit.size(), "relabeling orbit");
    std::sort(orbit.begin(), orbit.end());
    orbit.erase(std::unique(orbit.begin(), orbit.end()), orbit.end());
    return orbit;
  }
  const ProfileSpace space(profile.voters(), profile.alternatives());
  budget.charge(space.size(), "possible-world enumeration");
  const InfoView target = info_view(f, profile);
  std::vector<Profile> worlds;
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    Profile q = space.at(i);
    if (f == InfoFunction::Zero || info_view(f, q) == target) worlds.push_back(std::move(q));
  }
  return worlds;
}

std::string_view to_string(Informativeness r) {
  switch (r) {
    case Informativeness::FAtLeastG: return "f_at_least_g";
    case Informativeness::GAtLeastF: return "g_at_least_f";
    case Informativeness::Equal: return "equal";
    case Informativeness::Incomparable: return "incomparable";
  }
  return "?";
}

InformativenessResult informativeness_cmp(InfoFunction f, InfoFunction g, int n, int m, Budget& budget) {
  const ProfileSpace space(n, m);
  budget.charge(space.size() * 2, "informativeness comparison");
  // Partition by one key; a block that splits under the other key witnesses
  // that the first function is not finer.
  std::map<std::vector<int>, std::pair<std::vector<int>, std::uint64_t>> by_f, by_g;
  InformativenessResult r{Informativeness::Equal, std::nullopt, std::nullopt};
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    const Profile p = space.at(i);
    auto kf = info_view(f, p).key;
    auto kg = info_view(g, p).key;
    if (!r.f_coarser_somewhere) {
      auto [it, fresh] = by_f.try_emplace(kf, kg, i);
      if (!fresh && it->second.first != kg) r.f_coarser_somewhere.emplace(space.at(it->second.second), p);
    }
    if (!r.g_coarser_somewhere) {
      auto [it, fresh] = by_g.try_emplace(std::move(kg), std::move(kf), i);
      if (!fresh && it->second.first != info_view(f, p).key)
        r.g_coarser_somewhere.emplace(space.at(it->second.second), p);
    }
  }
  const bool f_ge = !r.f_coarser_somewhere;
  const bool g_ge = !r.g_coarser_somewhere;
  r.relation = f_ge && g_ge ? Informativeness::Equal
               : f_ge       ? Informativeness::FAtLeastG
               : g_ge       ? Informativeness::GAtLeastF
                            : Informativeness::Incomparable;
  return r;
}

PlannerPreference lex_pref(const std::vector<int>& alternative_ranking) {
  const int m = static_cast<int>(alternative_ranking.size());
  const PresentationOrder check(alternative_ranking);  // validates the permutation
  std::vector<int> pos(static_cast<std::size_t>(m));
  for (int k = 0; k < m; ++k) pos[static_cast<std::size_t>(alternative_ranking[static_cast<std::size_t>(k)])] = k;
  auto sorted_positions = [&](AltSet s) {
    std::vector<int> v;
    for (int x : s.members()) v.push_back(pos[static_cast<std::size_t>(x)]);
    std::sort(v.begin(), v.end());
    return v;
  };
  std::vector<AltSet> subsets;
  for (std::uint32_t b = 1; b < (1u << m); ++b) subsets.emplace_back(b);
  std::sort(subsets.begin(), subsets.end(), [&](AltSet a, AltSet b) {
    const auto pa = sorted_positions(a);
    const auto pb = sorted_positions(b);
    if (pa.front() != pb.front()) return pa.front() < pb.front();
    if (pa.size() != pb.size()) return pa.size() < pb.size();
    return pa < pb;
  });
  return PlannerPreference(m, std::move(subsets));
}

PlannerPreference target_first_pref(int m, AltSet target) {
  if (target.empty() || !target.subset_of(AltSet::full(m))) throw Error("target must be a nonempty subset of X");
  std::vector<AltSet> order{target};
  for (std::uint32_t b = 1; b < (1u << m); ++b)
    if (b != target.bits()) order.emplace_back(b);
  return PlannerPreference(m, std::move(order));
}

void for_each_preference(int m, const std::function<bool(const PlannerPreference&)>& visit) {
  if (m < 2 || m > 3) throw Error("exhaustive preference enumeration is limited to m <= 3");
  std::vector<AltSet> order;
  for (std::uint32_t b = 1; b < (1u << m); ++b) order.emplace_back(b);
  do {
    if (!visit(PlannerPreference(m, order))) return;
  } while (std::next_permutation(order.begin(), order.end()));
}

WorldTable::WorldTable(const RuleId& rule, std::vector<Profile> worlds, Budget& budget)
    : rule_(rule), worlds_(std::move(worlds)) {
  if (worlds_.empty()) throw Error("world table needs at least one world");
  n_ = worlds_.front().voters();
  m_ = worlds_.front().alternatives();
  orders_ = OrderSpace(n_, m_).size();
  for (const auto& w : worlds_) {
    if (w.voters() != n_ || w.alternatives() != m_) throw Error("worlds disagree on (n, m)");
    rows_.push_back(outcome_row(rule_, w, budget));
    auto r = rows_.back();
    std::sort(r.begin(), r.end());
    r.erase(std::unique(r.begin(), r.end()), r.end());
    reachable_.push_back(std::move(r));
  }
}

StrategyVerdict is_optimal_strategy(const WorldTable& table, const PlannerPreference& pref,
                                    const OrderVector& sigma_star) {
  if (pref.alternatives() != table.alternatives()) throw Error("preference over the wrong alternative set");
  const OrderSpace os(table.voters(), table.alternatives());
  const std::uint64_t s = os.index_of(sigma_star);
  StrategyVerdict v;
  // (i) sigma* is weakly best against every other order in every world.
  for (std::size_t w = 0; w < table.worlds().size(); ++w) {
    const Outcome star = table.outcome(w, s);
    for (std::uint64_t o = 0; o < table.orders(); ++o) {
      if (o == s) continue;
      const Outcome other = table.outcome(w, o);
      if (pref.prefers(other, star)) {
        v.failed_condition = 1;
        v.world = table.worlds()[w];
        v.sigma = os.at(o);
        v.star_outcome = star;
        v.other_outcome = other;
        return v;
      }
    }
  }
  // (ii) and strictly better somewhere.
  for (std::size_t w = 0; w < table.worlds().size(); ++w) {
    const Outcome star = table.outcome(w, s);
    for (std::uint64_t o = 0; o < table.orders(); ++o) {
      if (o == s) continue;
      const Outcome other = table.outcome(w, o);
      if (pref.prefers(star, other)) {
        v.optimal = true;
        v.world = table.worlds()[w];
        v.sigma = os.at(o);
        v.star_outcome = star;
        v.other_outcome = other;
        return v;
      }
    }
  }
  v.failed_condition = 2;
  return v;
}

StrategyVerdict is_optimal_strategy(const RuleId& rule, const PlannerPreference& pref, InfoFunction f,
                                    const Profile& profile, const OrderVector& sigma_star, Budget& budget) {
  const WorldTable table(rule, possible_worlds(f, profile, budget), budget);
  return is_optimal_strategy(table, pref, sigma_star);
}

namespace {

ManipWitness certify(const WorldTable& table, const PlannerPreference& pref, std::uint64_t s) {
  const OrderVector sigma_star = OrderSpace(table.voters(), table.alternatives()).at(s);
  const StrategyVerdict v = is_optimal_strategy(table, pref, sigma_star);
  if (!v.optimal) throw Error("internal: strategy search returned a candidate that fails re-verification");
  return {pref, sigma_star, *v.world, *v.sigma, v.star_outcome, v.other_outcome};
}

bool some_world_splits(const WorldTable& table) {
  for (std::size_t w = 0; w < table.worlds().size(); ++w)
    if (table.reachable(w).size() >= 2) return true;
  return false;
}

}  // namespace

std::optional<ManipWitness> find_optimal_strategy(const WorldTable& table, const PlannerPreference& pref) {
  if (pref.alternatives() != table.alternatives()) throw Error("preference over the wrong alternative set");
  // An optimal sigma* must hit the pref-best reachable outcome in every
  // world; condition (ii) then holds iff some world reaches two outcomes.
  if (!some_world_splits(table)) return std::nullopt;
  const std::size_t W = table.worlds().size();
  std::vector<Outcome> best(W);
  for (std::size_t w = 0; w < W; ++w) {
    const auto& r = table.reachable(w);
    best[w] = *std::min_element(r.begin(), r.end(), [&](Outcome a, Outcome b) { return pref.prefers(a, b); });
  }
  for (std::uint64_t s = 0; s < table.orders(); ++s) {
    bool ok = true;
    for (std::size_t w = 0; w < W && ok; ++w) ok = table.outcome(w, s) == best[w];
    if (ok) return certify(table, pref, s);
  }
  return std::nullopt;
}

std::optional<ManipWitness> find_optimal_strategy(const RuleId& rule, const PlannerPreference& pref, InfoFunction f,
                                                  const Profile& profile, Budget& budget) {
  const WorldTable table(rule, possible_worlds(f, profile, budget), budget);
  return find_optimal_strategy(table, pref);
}

std::optional<ManipWitness> find_manipulation_any_preference(const WorldTable& table) {
  if (!some_world_splits(table)) return std::nullopt;
  const int m = table.alternatives();
  const std::uint32_t nodes = 1u << m;  // node 0 unused
  for (std::uint64_t s = 0; s < table.orders(); ++s) {
    std::vector<std::bitset<256>> beats(nodes);
    std::vector<int> indegree(nodes, 0);
    for (std::size_t w = 0; w < table.worlds().size(); ++w) {
      const Outcome star = table.outcome(w, s);
      for (Outcome o : table.reachable(w))
        if (o != star && !beats[star.bits()].test(o.bits())) {
          beats[star.bits()].set(o.bits());
          ++indegree[o.bits()];
        }
    }
    std::priority_queue<std::uint32_t, std::vector<std::uint32_t>, std::greater<>> ready;
    for (std::uint32_t b = 1; b < nodes; ++b)
      if (indegree[b] == 0) ready.push(b);
    std::vector<AltSet> order;
    while (!ready.empty()) {
      const std::uint32_t b = ready.top();
      ready.pop();
      order.emplace_back(b);
      for (std::uint32_t c = 1; c < nodes; ++c)
        if (beats[b].test(c) && --indegree[c] == 0) ready.push(c);
    }
    if (order.size() == nodes - 1) return certify(table, PlannerPreference(m, std::move(order)), s);
  }
  return std::nullopt;
}

}  // namespace anchorvote
