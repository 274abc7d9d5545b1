#include "anchorvote/rules.hpp"

#include <array>

namespace anchorvote {

namespace {

AltSet intersection(std::span<const ApprovalBallot> ballots, int m) {
  AltSet u = AltSet::full(m);
  for (ApprovalBallot b : ballots) u = u & b;
  return u;
}

AltSet sav(std::span<const ApprovalBallot> ballots, int m) {
  std::array<int, kMaxAlternatives> count{};
  for (ApprovalBallot b : ballots)
    for (std::uint32_t bits = b.bits(); bits != 0; bits &= bits - 1) ++count[static_cast<std::size_t>(std::countr_zero(bits))];
  int best = -1;
  AltSet winners;
  for (int x = 0; x < m; ++x) {
    const int c = count[static_cast<std::size_t>(x)];
    if (c > best) {
      best = c;
      winners = AltSet::single(x);
    } else if (c == best) {
      winners = winners.with(x);
    }
  }
  return winners;
}

AltSet apply(const std::vector<int>& mu, AltSet s) {
  AltSet out;
  for (int x : s.members()) out = out.with(mu[static_cast<std::size_t>(x)]);
  return out;
}

}  // namespace

void validate_rule(const RuleId& rule, int m) {
  const AltSet all = AltSet::full(m);
  switch (rule.kind) {
    case RuleKind::Constant:
      if (rule.set.empty() || !rule.set.subset_of(all)) throw Error("constant rule needs a nonempty subset of X");
      break;
    case RuleKind::FixedX:
      if (rule.alt < 0 || rule.alt >= m) throw Error("fixedx alternative out of range");
      break;
    case RuleKind::NomExcluding:
      if (!rule.set.subset_of(all)) throw Error("nom-excluding set outside X");
      break;
    default:
      break;
  }
}

Outcome eval_rule(const RuleId& rule, std::span<const ApprovalBallot> ballots, int m) {
  for (ApprovalBallot b : ballots)
    if (b.empty()) throw Error("empty approval ballot");
  const AltSet all = AltSet::full(m);
  switch (rule.kind) {
    case RuleKind::Sav:
      return sav(ballots, m);
    case RuleKind::Nom: {
      AltSet u;
      for (ApprovalBallot b : ballots) u = u | b;
      return u;
    }
    case RuleKind::Constant:
      return rule.set;
    case RuleKind::FixedX:
      return intersection(ballots, m).contains(rule.alt) ? AltSet::single(rule.alt) : all;
    case RuleKind::UnanOrAll: {
      const AltSet u = intersection(ballots, m);
      return u.empty() ? all : u;
    }
    case RuleKind::UnanOrLargest: {
      const AltSet u = intersection(ballots, m);
      if (!u.empty()) return u;
      ApprovalBallot largest = ballots.front();
      for (ApprovalBallot b : ballots)
        if (b.size() > largest.size()) largest = b;
      return largest;
    }
    case RuleKind::SavCautious:
      for (ApprovalBallot b : ballots)
        if (b.size() >= 2) return all;
      return sav(ballots, m);
    case RuleKind::NomExcluding: {
      AltSet u;
      for (ApprovalBallot b : ballots) u = u | b;
      const AltSet kept = u - rule.set;
      return kept.empty() ? all : kept;
    }
  }
  throw Error("unknown rule");
}

RuleId parse_rule(std::string_view text, const Alphabet& alphabet) {
  const auto colon = text.find(':');
  const auto head = text.substr(0, colon);
  const auto arg = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  auto no_arg = [&](RuleId r) {
    if (colon != std::string_view::npos) throw Error("rule '" + std::string(head) + "' takes no argument");
    return r;
  };
  RuleId r;
  if (head == "sav") r = no_arg(RuleId::sav());
  else if (head == "nom") r = no_arg(RuleId::nom());
  else if (head == "unan-or-all") r = no_arg(RuleId::unan_or_all());
  else if (head == "unan-or-largest") r = no_arg(RuleId::unan_or_largest());
  else if (head == "sav-cautious") r = no_arg(RuleId::sav_cautious());
  else if (head == "constant") r = RuleId::constant(alphabet.parse_set(arg));
  else if (head == "nom-excluding") r = RuleId::nom_excluding(alphabet.parse_set(arg));
  else if (head == "fixedx") {
    const auto x = alphabet.index_of(arg);
    if (!x) throw Error("unknown alternative '" + std::string(arg) + "'");
    r = RuleId::fixed_x(*x);
  } else {
    throw Error("unknown rule '" + std::string(text) + "'");
  }
  validate_rule(r, alphabet.size());
  return r;
}

std::string format_rule(const RuleId& rule, const Alphabet& alphabet) {
  switch (rule.kind) {
    case RuleKind::Sav: return "sav";
    case RuleKind::Nom: return "nom";
    case RuleKind::Constant: return "constant:" + alphabet.join(rule.set);
    case RuleKind::FixedX: return "fixedx:" + alphabet.label(rule.alt);
    case RuleKind::UnanOrAll: return "unan-or-all";
    case RuleKind::UnanOrLargest: return "unan-or-largest";
    case RuleKind::SavCautious: return "sav-cautious";
    case RuleKind::NomExcluding: return "nom-excluding:" + alphabet.join(rule.set);
  }
  return "?";
}

std::string_view to_string(Axiom a) {
  switch (a) {
    case Axiom::Anonymity: return "anonymity";
    case Axiom::Neutrality: return "neutrality";
    case Axiom::WeakUnanimity: return "weak-unanimity";
    case Axiom::TotalUnanimity: return "total-unanimity";
    case Axiom::Unanimity: return "unanimity";
  }
  return "?";
}

AxiomVerdict check_axiom(const RuleId& rule, Axiom axiom, int n, int m, Budget& budget) {
  if (n < 1 || m < 2 || m > kMaxAlternatives) throw Error("check_axiom: need n >= 1 and 2 <= m <= 8");
  validate_rule(rule, m);
  const AltSet all = AltSet::full(m);
  AxiomVerdict v;

  if (axiom == Axiom::TotalUnanimity) {
    budget.charge(1, "total unanimity");
    const BallotProfile full(static_cast<std::size_t>(n), all);
    const Outcome out = eval_rule(rule, full, m);
    if (out != all) v = {false, full, {}, out, all};
    return v;
  }

  const auto radix = static_cast<std::uint64_t>(all.bits());  // ballots 1..2^m-1
  const std::uint64_t profiles = checked_pow(radix, n);
  std::vector<std::vector<int>> perms;
  if (axiom == Axiom::Anonymity) perms = permutations_of(n);
  if (axiom == Axiom::Neutrality) perms = permutations_of(m);
  const std::uint64_t per = perms.empty() ? 1 : perms.size();
  if (profiles == UINT64_MAX || profiles > UINT64_MAX / per) throw BudgetExceeded("axiom check space overflows");
  budget.charge(profiles * per, std::string("axiom check (") + std::string(to_string(axiom)) + ")");

  BallotProfile ballots(static_cast<std::size_t>(n));
  BallotProfile permuted(static_cast<std::size_t>(n));
  for (std::uint64_t idx = 0; idx < profiles; ++idx) {
    std::uint64_t rest = idx;
    for (int i = n - 1; i >= 0; --i) {
      ballots[static_cast<std::size_t>(i)] = AltSet(static_cast<std::uint32_t>(rest % radix) + 1);
      rest /= radix;
    }
    const Outcome out = eval_rule(rule, ballots, m);
    switch (axiom) {
      case Axiom::WeakUnanimity:
      case Axiom::Unanimity: {
        const AltSet u = intersection(ballots, m);
        if (u.empty()) break;
        const bool ok = axiom == Axiom::Unanimity ? out == u : out.subset_of(u);
        if (!ok) return {false, ballots, {}, out, u};
        break;
      }
      case Axiom::Anonymity:
        for (const auto& lambda : perms) {
          for (int i = 0; i < n; ++i)
            permuted[static_cast<std::size_t>(i)] = ballots[static_cast<std::size_t>(lambda[static_cast<std::size_t>(i)])];
          const Outcome po = eval_rule(rule, permuted, m);
          if (po != out) return {false, ballots, lambda, out, po};
        }
        break;
      case Axiom::Neutrality:
        for (const auto& mu : perms) {
          for (int i = 0; i < n; ++i) permuted[static_cast<std::size_t>(i)] = apply(mu, ballots[static_cast<std::size_t>(i)]);
          const Outcome po = eval_rule(rule, permuted, m);
          if (po != apply(mu, out)) return {false, ballots, mu, apply(mu, out), po};
        }
        break;
      case Axiom::TotalUnanimity:
        break;
    }
  }
  return v;
}

}  // namespace anchorvote
