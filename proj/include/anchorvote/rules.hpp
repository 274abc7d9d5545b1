#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "anchorvote/core.hpp"
#include "anchorvote/enumerate.hpp"

namespace anchorvote {

enum class RuleKind {
  Sav,            // argmax of approval counts
  Nom,            // union of ballots
  Constant,       // fixed set C
  FixedX,         // {x} if x is in every ballot, else X
  UnanOrAll,      // unanimously approved set, else X
  UnanOrLargest,  // unanimously approved set, else largest ballot (lowest voter index on ties)
  SavCautious,    // X if someone approves two or more, else SAV
  NomExcluding,   // nomination minus S, or X when that leaves nothing
};

/// Closed registry of approval rules. `set` is C for Constant and S for
/// NomExcluding; `alt` is x for FixedX.
struct RuleId {
  RuleKind kind = RuleKind::Sav;
  AltSet set;
  int alt = 0;

  static RuleId sav() { return {RuleKind::Sav, {}, 0}; }
  static RuleId nom() { return {RuleKind::Nom, {}, 0}; }
  static RuleId constant(AltSet c) { return {RuleKind::Constant, c, 0}; }
  static RuleId fixed_x(int x) { return {RuleKind::FixedX, {}, x}; }
  static RuleId unan_or_all() { return {RuleKind::UnanOrAll, {}, 0}; }
  static RuleId unan_or_largest() { return {RuleKind::UnanOrLargest, {}, 0}; }
  static RuleId sav_cautious() { return {RuleKind::SavCautious, {}, 0}; }
  static RuleId nom_excluding(AltSet s) { return {RuleKind::NomExcluding, s, 0}; }

  friend bool operator==(const RuleId&, const RuleId&) = default;
};

/// Throws Error if the rule's parameters do not fit m alternatives.
void validate_rule(const RuleId& rule, int m);

/// Evaluates a rule on a ballot profile over m alternatives. Every ballot must
/// be nonempty. The result is never empty.
Outcome eval_rule(const RuleId& rule, std::span<const ApprovalBallot> ballots, int m);

/// `sav | nom | constant:<subset> | fixedx:<label> | unan-or-all |
/// unan-or-largest | sav-cautious | nom-excluding:<subset>`
RuleId parse_rule(std::string_view text, const Alphabet& alphabet);
std::string format_rule(const RuleId& rule, const Alphabet& alphabet);

enum class Axiom { Anonymity, Neutrality, WeakUnanimity, TotalUnanimity, Unanimity };

std::string_view to_string(Axiom a);

struct AxiomVerdict {
  bool holds = true;
  BallotProfile witness;            // failing ballot profile
  std::vector<int> permutation;     // voter or alternative permutation, when the axiom uses one
  Outcome outcome;                  // F on the witness
  Outcome expected;                 // what the axiom demanded (or F on the permuted profile)
};

/// Exhaustive check over all (2^m - 1)^n ballot profiles.
AxiomVerdict check_axiom(const RuleId& rule, Axiom axiom, int n, int m, Budget& budget);

}  // namespace anchorvote
