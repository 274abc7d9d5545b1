#include <doctest.h>

#include "anchorvote/anchor.hpp"
#include "anchorvote/text_format.hpp"
#include "oracle.hpp"

using namespace anchorvote;

namespace {

std::vector<RuleId> registry() {
  return {RuleId::sav(),          RuleId::nom(),           RuleId::constant(AltSet(0b011)),
          RuleId::fixed_x(0),     RuleId::unan_or_all(),   RuleId::unan_or_largest(),
          RuleId::sav_cautious(), RuleId::nom_excluding(AltSet(0b110))};
}

bool keep(DomainFilter d, const PreferenceApproval& p) { return admits(d, p); }

// Quantifier questions answered from the oracle's outcome lists, with
// ordered pairs and no shortcuts.
bool naive_question(const RuleId& r, Question q, int n, int m, DomainFilter d) {
  std::vector<std::vector<std::set<int>>> table;
  for (const auto& p : oracle::all_profiles(n, m, [d](const PreferenceApproval& v) { return keep(d, v); }))
    table.push_back(oracle::outcomes(r, p));
  const std::size_t orders = table.front().size();
  auto equal_on = [&](std::size_t p, std::size_t s, std::size_t t) { return table[p][s] == table[p][t]; };
  auto all_pairs = [&](auto pred) {
    for (std::size_t s = 0; s < orders; ++s)
      for (std::size_t t = 0; t < orders; ++t)
        if (s != t && !pred(s, t)) return false;
    return true;
  };
  auto some_pair = [&](auto pred) { return !all_pairs([&](std::size_t s, std::size_t t) { return !pred(s, t); }); };
  auto all_profiles = [&](auto pred) {
    for (std::size_t p = 0; p < table.size(); ++p)
      if (!pred(p)) return false;
    return true;
  };
  auto some_profile = [&](auto pred) { return !all_profiles([&](std::size_t p) { return !pred(p); }); };
  switch (q) {
    case Question::Q1:
      return all_profiles([&](std::size_t p) { return all_pairs([&](auto s, auto t) { return equal_on(p, s, t); }); });
    case Question::Q2:
      return some_profile([&](std::size_t p) { return all_pairs([&](auto s, auto t) { return equal_on(p, s, t); }); });
    case Question::Q3:
      return some_pair([&](auto s, auto t) { return all_profiles([&](std::size_t p) { return equal_on(p, s, t); }); });
    case Question::Q4:
      return all_profiles([&](std::size_t p) { return some_pair([&](auto s, auto t) { return equal_on(p, s, t); }); });
    case Question::Q5:
      return all_pairs([&](auto s, auto t) { return some_profile([&](std::size_t p) { return equal_on(p, s, t); }); });
    case Question::Q6:
      return some_profile([&](std::size_t p) { return some_pair([&](auto s, auto t) { return equal_on(p, s, t); }); });
  }
  return false;
}

Outcome run(const RuleId& r, const Profile& p, const OrderVector& o) {
  return eval_rule(r, generate_ballot_profile(p, o), p.alternatives());
}

}  // namespace

TEST_CASE("outcome rows follow the order-vector enumeration") {
  const ProfileSpace space(2, 3);
  for (const auto& r : registry())
    for (std::uint64_t i = 0; i < space.size(); i += 11) {
      const Profile p = space.at(i);
      Budget budget;
      const auto row = outcome_row(r, p, budget);
      const auto want = oracle::outcomes(r, p);
      REQUIRE(row.size() == want.size());
      for (std::size_t o = 0; o < row.size(); ++o) CHECK(row[o] == oracle::to_altset(want[o]));
    }
}

TEST_CASE("outcome table matches outcome rows") {
  Budget budget;
  const ProfileSpace space(2, 3, DomainFilter::Tolerant);
  const OutcomeTable table(RuleId::sav(), space, budget);
  for (std::uint64_t p = 0; p < space.size(); ++p) {
    const auto row = outcome_row(RuleId::sav(), space.at(p), budget);
    for (std::uint64_t o = 0; o < table.orders(); ++o) CHECK(table.at(p, o) == row[o]);
  }
}

TEST_CASE("anchor-proofness per profile agrees with the oracle, n=2, m=3") {
  const ProfileSpace space(2, 3);
  for (const auto& r : registry())
    for (std::uint64_t i = 0; i < space.size(); ++i) {
      const Profile p = space.at(i);
      Budget budget;
      const Verdict v = anchor_proof_for_profile(r, p, budget);
      REQUIRE(v.holds == oracle::anchor_proof(r, p));
      if (!v.holds) {
        CHECK(run(r, p, *v.sigma) == *v.outcome_sigma);
        CHECK(run(r, p, *v.pi) == *v.outcome_pi);
        CHECK(*v.outcome_sigma != *v.outcome_pi);
      }
    }
}

TEST_CASE("quantifier checks agree with the naive reading, n=2, m=3") {
  for (const auto& r : registry())
    for (auto d : {DomainFilter::All, DomainFilter::Tolerant, DomainFilter::Intolerant})
      for (int q = 1; q <= 6; ++q) {
        Budget budget;
        const Question qq = static_cast<Question>(q);
        CAPTURE(q);
        CAPTURE(static_cast<int>(r.kind));
        CAPTURE(static_cast<int>(d));
        CHECK(quantifier_check(r, qq, 2, 3, d, budget).holds == naive_question(r, qq, 2, 3, d));
      }
}

TEST_CASE("quantifier witnesses certify themselves") {
  for (const auto& r : registry())
    for (auto d : {DomainFilter::All, DomainFilter::Tolerant})
      for (int q = 1; q <= 6; ++q) {
        Budget budget;
        const Verdict v = quantifier_check(r, static_cast<Question>(q), 2, 3, d, budget);
        if (v.profile && v.sigma) {
          CHECK(run(r, *v.profile, *v.sigma) == *v.outcome_sigma);
          CHECK(run(r, *v.profile, *v.pi) == *v.outcome_pi);
          CHECK((*v.outcome_sigma == *v.outcome_pi) == v.holds);
        }
        if (v.sigma) CHECK(*v.sigma != *v.pi);
        if (v.profile && !v.sigma) {
          Budget b2;
          CHECK(anchor_proof_for_profile(r, *v.profile, b2).holds == (q == 2 ? v.holds : !v.holds));
        }
      }
}

TEST_CASE("only constant rules are anchor-proof everywhere") {
  for (const auto& r : registry()) {
    Budget budget;
    CHECK(quantifier_check(r, Question::Q1, 2, 3, DomainFilter::All, budget).holds == (r.kind == RuleKind::Constant));
  }
}

TEST_CASE("some pair, some profile always agree when intolerant profiles are allowed") {
  for (const auto& r : registry())
    for (auto d : {DomainFilter::All, DomainFilter::Intolerant}) {
      Budget budget;
      CHECK(quantifier_check(r, Question::Q4, 2, 3, d, budget).holds);
      CHECK(quantifier_check(r, Question::Q6, 2, 3, d, budget).holds);
    }
}

TEST_CASE("question names") {
  CHECK(parse_question("q3") == Question::Q3);
  CHECK(parse_question("Q6") == Question::Q6);
  CHECK_THROWS_AS(parse_question("q7"), Error);
  CHECK(to_string(Question::Q5) == "q5");
}

TEST_CASE("quantifier search honours the budget") {
  Budget tiny(1000);
  CHECK_THROWS_AS(quantifier_check(RuleId::sav(), Question::Q3, 3, 3, DomainFilter::All, tiny), BudgetExceeded);
}

TEST_CASE("sav closed form equals brute force, n=1..3, m=3") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : oracle::all_profiles(n, 3, [](const PreferenceApproval&) { return true; }))
      REQUIRE(sav_char(p) == oracle::anchor_proof(RuleId::sav(), p));
}

TEST_CASE("nomination closed form equals brute force, n=1..3, m=3") {
  for (int n = 1; n <= 3; ++n)
    for (const auto& p : oracle::all_profiles(n, 3, [](const PreferenceApproval&) { return true; }))
      REQUIRE(nom_char(p) == oracle::anchor_proof(RuleId::nom(), p));
}

TEST_CASE("sav closed form on named profiles") {
  const auto intolerant = parse_profile("alternatives: a b c\nvoters: 3\n1: a | b c\n2: a | c b\n3: a | b c\n");
  CHECK(sav_char(intolerant.profile));
  const auto tolerant = parse_profile("alternatives: a b c\nvoters: 2\n1: a b c |\n2: b a c |\n");
  CHECK_FALSE(sav_char(tolerant.profile));
  // A lone plurality leader with surplus acceptances still wins every time.
  const auto lone = parse_profile("alternatives: a b c\nvoters: 3\n1: a | b c\n2: a | b c\n3: b a | c\n");
  CHECK(sav_char(lone.profile));
  CHECK(oracle::anchor_proof(RuleId::sav(), lone.profile));
  // Two unanimously accepted alternatives always break anchor-proofness.
  for (int n = 2; n <= 3; ++n)
    for (const auto& p : oracle::all_profiles(n, 3, [](const PreferenceApproval&) { return true; }))
      if (unanimously_accepted(p).size() >= 2) CHECK_FALSE(sav_char(p));
}

TEST_CASE("weakly unanimous condition, n=2, m=3") {
  const RuleId rules[] = {RuleId::sav(), RuleId::unan_or_all(), RuleId::unan_or_largest()};
  for (const auto& p : oracle::all_profiles(2, 3, [](const PreferenceApproval&) { return true; })) {
    bool every = true;
    for (const auto& r : rules) every = every && oracle::anchor_proof(r, p);
    CHECK(weakuna_char(p) == every);
  }
}

TEST_CASE("constant rules ignore thresholds") {
  const RuleId c = RuleId::constant(AltSet(0b101));
  const ProfileSpace space(2, 3);
  const OrderSpace os(2, 3);
  for (std::uint64_t i = 0; i < space.size(); i += 5) {
    const Profile p = space.at(i);
    for (std::uint64_t o = 0; o < os.size(); o += 5) CHECK(run(c, p, os.at(o)) == run(c, p.tolerant_version(), os.at(o)));
  }
}

TEST_CASE("constructed nomination pair equalizes every tolerant profile") {
  // A pair exists exactly when exhaustive search finds one.
  for (int n = 1; n <= 3; ++n)
    for (int m = 2; m <= 3; ++m) {
      Budget budget;
      CHECK(nomination_order_pair(n, m).has_value() ==
            quantifier_check(RuleId::nom(), Question::Q3, n, m, DomainFilter::Tolerant, budget).holds);
    }
  for (auto [n, m] : {std::pair{2, 2}, std::pair{2, 3}, std::pair{3, 3}, std::pair{4, 3}, std::pair{2, 4}, std::pair{3, 4}}) {
    const auto pair = nomination_order_pair(n, m);
    REQUIRE(pair.has_value());
    CHECK(pair->first != pair->second);
    for (const auto& p : oracle::all_profiles(n, m, [](const PreferenceApproval& v) { return v.tolerant(); }))
      REQUIRE(run(RuleId::nom(), p, pair->first) == run(RuleId::nom(), p, pair->second));
  }
}

TEST_CASE("nomination separates every order pair outside the tolerant domain") {
  const OrderSpace os(2, 3);
  for (std::uint64_t a = 0; a < os.size(); ++a)
    for (std::uint64_t b = a + 1; b < os.size(); ++b) {
      const Profile p = nomination_separating_profile(os.at(a), os.at(b));
      CHECK(run(RuleId::nom(), p, os.at(a)) != run(RuleId::nom(), p, os.at(b)));
    }
  CHECK_THROWS_AS(nomination_separating_profile(os.at(0), os.at(0)), Error);
}

TEST_CASE("first-shown pair splits sav on every tolerant profile") {
  const auto [sigma, pi] = first_shown_pair(2, 3, 0, 1);
  for (const auto& o : sigma) CHECK(o.first() == 0);
  for (const auto& o : pi) CHECK(o.first() == 1);
  for (const auto& p : oracle::all_profiles(2, 3, [](const PreferenceApproval& v) { return v.tolerant(); }))
    CHECK(run(RuleId::sav(), p, sigma) != run(RuleId::sav(), p, pi));
}

TEST_CASE("cautious sav profile returns X under both orders") {
  const OrderSpace os(2, 3);
  for (std::uint64_t a = 0; a < os.size(); ++a)
    for (std::uint64_t b = a + 1; b < os.size(); ++b) {
      const Profile p = cautious_sav_profile(os.at(a), os.at(b));
      CHECK(p.tolerant());
      CHECK(run(RuleId::sav_cautious(), p, os.at(a)) == AltSet::full(3));
      CHECK(run(RuleId::sav_cautious(), p, os.at(b)) == AltSet::full(3));
    }
  CHECK_THROWS_AS(cautious_sav_profile({PresentationOrder({0, 1, 2})}, {PresentationOrder({1, 0, 2})}), Error);
}

TEST_CASE("outcome sets") {
  Budget budget;
  const auto f = parse_profile("alternatives: x y\nvoters: 5\n1: x y |\n2: x y |\n3: y x |\n4: y x |\n5: y x |\n");
  const auto outs = outcome_set(RuleId::sav(), f.profile, budget);
  CHECK(outs == std::vector<Outcome>{AltSet(0b01), AltSet(0b10), AltSet(0b11)});
}
