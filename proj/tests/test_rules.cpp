#include <doctest.h>

#include "anchorvote/rules.hpp"
#include "oracle.hpp"

using namespace anchorvote;

namespace {

AltSet set_of(std::initializer_list<int> xs) {
  AltSet s;
  for (int x : xs) s = s.with(x);
  return s;
}

const AltSet X = AltSet::single(0), Y = AltSet::single(1), Z = AltSet::single(2);

std::vector<RuleId> registry(int m) {
  return {RuleId::sav(),          RuleId::nom(),           RuleId::constant(set_of({0, 1})),
          RuleId::fixed_x(0),     RuleId::unan_or_all(),   RuleId::unan_or_largest(),
          RuleId::sav_cautious(), RuleId::nom_excluding(AltSet::full(m) - AltSet::single(0))};
}

}  // namespace

TEST_CASE("rule evaluation examples") {
  CHECK(eval_rule(RuleId::sav(), BallotProfile{X, X, X | Y, X | Y, X | Y}, 2) == X);
  CHECK(eval_rule(RuleId::sav(), BallotProfile{X, X, Y, Y, Y}, 2) == Y);
  CHECK(eval_rule(RuleId::nom(), BallotProfile{X | Z, Y}, 3) == AltSet::full(3));
  CHECK(eval_rule(RuleId::fixed_x(0), BallotProfile{X | Y, X}, 3) == X);
  CHECK(eval_rule(RuleId::fixed_x(0), BallotProfile{Y, X}, 3) == AltSet::full(3));
  CHECK(eval_rule(RuleId::sav_cautious(), BallotProfile{X | Y, Z}, 3) == AltSet::full(3));
  CHECK(eval_rule(RuleId::sav_cautious(), BallotProfile{X, X}, 3) == X);
  CHECK(eval_rule(RuleId::unan_or_all(), BallotProfile{X | Y, Y | Z}, 3) == Y);
  CHECK(eval_rule(RuleId::unan_or_all(), BallotProfile{X, Y}, 3) == AltSet::full(3));
  CHECK(eval_rule(RuleId::unan_or_largest(), BallotProfile{X, Y | Z, X | Z}, 3) == (Y | Z));
  CHECK(eval_rule(RuleId::constant(Z), BallotProfile{X}, 3) == Z);
  CHECK(eval_rule(RuleId::nom_excluding(Y | Z), BallotProfile{X | Y, Z}, 3) == X);
  CHECK(eval_rule(RuleId::nom_excluding(Y | Z), BallotProfile{Y, Z}, 3) == AltSet::full(3));
}

TEST_CASE("empty ballots are rejected") {
  CHECK_THROWS_AS(eval_rule(RuleId::sav(), BallotProfile{X, AltSet{}}, 3), Error);
}

TEST_CASE("every rule agrees with its definition on every ballot profile, n<=2, m=3") {
  for (const auto& r : registry(3))
    for (std::uint32_t a = 1; a < 8; ++a) {
      std::vector<std::set<int>> one{{}};
      for (int x : AltSet(a).members()) one[0].insert(x);
      CHECK(eval_rule(r, BallotProfile{AltSet(a)}, 3) == oracle::to_altset(oracle::rule(r, one, 3)));
      for (std::uint32_t b = 1; b < 8; ++b) {
        std::vector<std::set<int>> two{one[0], {}};
        for (int x : AltSet(b).members()) two[1].insert(x);
        const Outcome out = eval_rule(r, BallotProfile{AltSet(a), AltSet(b)}, 3);
        CHECK(out == oracle::to_altset(oracle::rule(r, two, 3)));
        CHECK_FALSE(out.empty());
      }
    }
}

TEST_CASE("rule text") {
  const Alphabet a = Alphabet::standard(3);
  for (const auto& r : registry(3)) CHECK(parse_rule(format_rule(r, a), a) == r);
  CHECK(parse_rule("constant:a,c", a) == RuleId::constant(set_of({0, 2})));
  CHECK(parse_rule("fixedx:b", a) == RuleId::fixed_x(1));
  CHECK_THROWS_AS(parse_rule("borda", a), Error);
  CHECK_THROWS_AS(parse_rule("fixedx:q", a), Error);
  CHECK_THROWS_AS(parse_rule("constant:", a), Error);
  CHECK_THROWS_AS(parse_rule("sav:a", a), Error);
}

TEST_CASE("axioms of the named rules, n=2, m=3") {
  Budget budget;
  auto holds = [&](const RuleId& r, Axiom ax) { return check_axiom(r, ax, 2, 3, budget).holds; };
  for (auto ax : {Axiom::Anonymity, Axiom::Neutrality, Axiom::WeakUnanimity, Axiom::TotalUnanimity, Axiom::Unanimity})
    CHECK(holds(RuleId::sav(), ax));
  CHECK(holds(RuleId::nom(), Axiom::Anonymity));
  CHECK(holds(RuleId::nom(), Axiom::Neutrality));
  CHECK(holds(RuleId::nom(), Axiom::TotalUnanimity));
  CHECK_FALSE(holds(RuleId::nom(), Axiom::WeakUnanimity));
  CHECK_FALSE(holds(RuleId::constant(X), Axiom::Neutrality));
  CHECK_FALSE(holds(RuleId::constant(X), Axiom::TotalUnanimity));
  CHECK_FALSE(holds(RuleId::fixed_x(0), Axiom::Neutrality));
  CHECK(holds(RuleId::unan_or_all(), Axiom::WeakUnanimity));
  CHECK(holds(RuleId::unan_or_all(), Axiom::TotalUnanimity));
  CHECK(holds(RuleId::unan_or_largest(), Axiom::WeakUnanimity));
  CHECK_FALSE(holds(RuleId::unan_or_largest(), Axiom::Anonymity));
  CHECK_FALSE(holds(RuleId::nom_excluding(Y | Z), Axiom::Neutrality));
}

TEST_CASE("nomination weak-unanimity witness") {
  Budget budget;
  const AxiomVerdict v = check_axiom(RuleId::nom(), Axiom::WeakUnanimity, 2, 3, budget);
  REQUIRE_FALSE(v.holds);
  CHECK(v.witness == BallotProfile{X, X | Y});
  CHECK(v.outcome == (X | Y));
  CHECK_FALSE(v.outcome.subset_of(v.expected));
}

TEST_CASE("axiom checks respect the budget") {
  Budget tiny(10);
  CHECK_THROWS_AS(check_axiom(RuleId::sav(), Axiom::Anonymity, 3, 3, tiny), BudgetExceeded);
}
