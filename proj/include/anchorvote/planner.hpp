#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "anchorvote/anchor.hpp"
#include "anchorvote/core.hpp"
#include "anchorvote/enumerate.hpp"
#include "anchorvote/rules.hpp"

namespace anchorvote {

/// What the planner observes about a profile.
enum class InfoFunction {
  Zero,          // nothing
  AccPoints,     // acceptability count per alternative
  AccSets,       // set of accepting voters per alternative
  PlPoints,      // plurality count per alternative
  PlSets,        // set of voters ranking it first, per alternative
  Full,          // the profile itself
  AltStructure,  // thresholds plus the profile up to renaming alternatives
  Thresholds,    // thresholds only
};

std::string_view to_string(InfoFunction f);
InfoFunction parse_info(std::string_view s);

/// Two profiles are indistinguishable under `function` iff their keys match.
struct InfoView {
  InfoFunction function;
  std::vector<int> key;

  friend bool operator==(const InfoView&, const InfoView&) = default;
};

InfoView info_view(InfoFunction f, const Profile& profile);

/// Applies an alternative renaming x -> mu[x] to every ranking.
Profile relabel(const Profile& profile, const std::vector<int>& mu);

struct Relabeling {
  Profile canonical;
  std::vector<int> map;  // canonical = relabel(profile, map)
};

/// Lexicographically least member of the profile's renaming orbit.
Relabeling canonical_relabel(const Profile& profile);

/// Every profile over the same (n, m) indistinguishable from `profile`,
/// in canonical enumeration order. Always contains `profile`.
std::vector<Profile> possible_worlds(InfoFunction f, const Profile& profile, Budget& budget);

enum class Informativeness { FAtLeastG, GAtLeastF, Equal, Incomparable };

std::string_view to_string(Informativeness r);

struct InformativenessResult {
  Informativeness relation;
  /// (p, q) that f cannot tell apart but g can: f is not at least as informative as g.
  std::optional<std::pair<Profile, Profile>> f_coarser_somewhere;
  /// (p, q) that g cannot tell apart but f can.
  std::optional<std::pair<Profile, Profile>> g_coarser_somewhere;
};

InformativenessResult informativeness_cmp(InfoFunction f, InfoFunction g, int n, int m, Budget& budget);

/// Best member first, then fewer members, then members compared best-first.
/// For a > b > c: {a} {a,b} {a,c} {a,b,c} {b} {b,c} {c}.
PlannerPreference lex_pref(const std::vector<int>& alternative_ranking);

/// `target` first, every other nonempty subset after it in ascending bitmask order.
PlannerPreference target_first_pref(int m, AltSet target);

/// Calls visit on each of the (2^m - 1)! strict rankings, lexicographic by
/// bitmask sequence; stops early when visit returns false. m <= 3 only.
void for_each_preference(int m, const std::function<bool(const PlannerPreference&)>& visit);

/// Outcomes of one rule on a fixed set of worlds under every order vector.
class WorldTable {
 public:
  WorldTable(const RuleId& rule, std::vector<Profile> worlds, Budget& budget);

  const RuleId& rule() const { return rule_; }
  int voters() const { return n_; }
  int alternatives() const { return m_; }
  const std::vector<Profile>& worlds() const { return worlds_; }
  std::uint64_t orders() const { return orders_; }
  Outcome outcome(std::size_t world, std::uint64_t order) const { return rows_[world][order]; }
  /// Distinct outcomes reachable on a world, ascending.
  const std::vector<Outcome>& reachable(std::size_t world) const { return reachable_[world]; }

 private:
  RuleId rule_;
  int n_;
  int m_;
  std::uint64_t orders_;
  std::vector<Profile> worlds_;
  std::vector<std::vector<Outcome>> rows_;
  std::vector<std::vector<Outcome>> reachable_;
};

struct StrategyVerdict {
  bool optimal = false;
  /// 0 when optimal, else the first violated condition: 1 (some order beats
  /// sigma* in some world) or 2 (sigma* never strictly beats anything).
  int failed_condition = 0;
  /// Condition-1 failure: world and order doing better than sigma*.
  /// Success: world and order that sigma* strictly beats.
  std::optional<Profile> world;
  std::optional<OrderVector> sigma;
  Outcome star_outcome;
  Outcome other_outcome;
};

StrategyVerdict is_optimal_strategy(const WorldTable& table, const PlannerPreference& pref,
                                    const OrderVector& sigma_star);
StrategyVerdict is_optimal_strategy(const RuleId& rule, const PlannerPreference& pref, InfoFunction f,
                                    const Profile& profile, const OrderVector& sigma_star, Budget& budget);

struct ManipWitness {
  PlannerPreference pref;
  OrderVector sigma_star;
  Profile world;  // where sigma* strictly beats sigma
  OrderVector sigma;
  Outcome star_outcome;
  Outcome other_outcome;
};

/// Lexicographically first optimal strategy for `pref`, if any.
std::optional<ManipWitness> find_optimal_strategy(const WorldTable& table, const PlannerPreference& pref);
std::optional<ManipWitness> find_optimal_strategy(const RuleId& rule, const PlannerPreference& pref, InfoFunction f,
                                                  const Profile& profile, Budget& budget);

/// Decides whether some planner preference admits an optimal strategy. A
/// candidate sigma* works iff the "must beat" constraints it induces on
/// outcomes are acyclic and some world reaches two outcomes; the returned
/// preference is a topological order of those constraints.
std::optional<ManipWitness> find_manipulation_any_preference(const WorldTable& table);

}  // namespace anchorvote
