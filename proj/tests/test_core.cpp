#include <doctest.h>

#include "anchorvote/enumerate.hpp"
#include "anchorvote/text_format.hpp"
#include "oracle.hpp"

using namespace anchorvote;

namespace {

ProfileFile abc(const std::string& body, int voters) {
  return parse_profile("alternatives: a b c\nvoters: " + std::to_string(voters) + "\n" + body);
}

int parse_error_line(const std::string& text) {
  try {
    parse_profile(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return -1;
}

}  // namespace

TEST_CASE("tally of the two-project election") {
  const auto f = parse_profile("alternatives: x y\nvoters: 5\n1: x y |\n2: x y |\n3: y x |\n4: y x |\n5: y x |\n");
  const Tally t = tally_points(f.profile);
  CHECK(t.plur == std::vector<int>{2, 3});
  CHECK(t.acc == std::vector<int>{5, 5});
}

TEST_CASE("tally of an intolerant unanimous profile") {
  const auto f = abc("1: a | b c\n2: a | c b\n3: a | b c\n", 3);
  const Tally t = tally_points(f.profile);
  CHECK(t.plur == std::vector<int>{3, 0, 0});
  CHECK(t.acc == std::vector<int>{3, 0, 0});
}

TEST_CASE("tally and support sets, mixed thresholds") {
  const auto f = abc("1: a b | c\n2: b | a c\n3: c b a |\n", 3);
  const Tally t = tally_points(f.profile);
  CHECK(t.plur == std::vector<int>{1, 1, 1});
  CHECK(t.acc == std::vector<int>{2, 3, 1});
  const SupportSets s = support_sets(f.profile);
  CHECK(s.plur == AltSet::full(3));
  CHECK(s.acc == AltSet::full(3));
}

TEST_CASE("support sets on small profiles") {
  CHECK(support_sets(abc("1: a | b c\n2: a | b c\n", 2).profile).acc == AltSet::single(0));
  const SupportSets one = support_sets(abc("1: a b | c\n", 1).profile);
  CHECK(one.plur == AltSet::single(0));
  CHECK(one.acc == AltSet(0b011));
}

TEST_CASE("tally invariants over every profile, n=2, m=3") {
  for (const auto& p : oracle::all_profiles(2, 3, [](const PreferenceApproval&) { return true; })) {
    const Tally t = tally_points(p);
    int total = 0;
    for (int x = 0; x < 3; ++x) {
      CHECK(t.plur[x] <= t.acc[x]);
      CHECK(t.acc[x] <= 2);
      total += t.plur[x];
    }
    CHECK(total == 2);
    const SupportSets s = support_sets(p);
    CHECK(s.plur.subset_of(s.acc));
    CHECK_FALSE((p.tolerant() && p.intolerant()));
  }
}

TEST_CASE("parse voter lines") {
  const auto f = abc("1: a b | c\n2: c a b |\n", 2);
  CHECK(f.profile[0].ranking() == std::vector<int>{0, 1, 2});
  CHECK(f.profile[0].threshold() == 2);
  CHECK(f.profile[1].ranking() == std::vector<int>{2, 0, 1});
  CHECK(f.profile[1].tolerant());
}

TEST_CASE("parse accepts comments, blank lines and out-of-order ids") {
  const auto f = parse_profile("# header comment\nalternatives: a b c\n\nvoters: 2\n2: b | a c  # second\n1: a b c |\n");
  CHECK(f.profile[0].threshold() == 3);
  CHECK(f.profile[1].top() == 1);
}

TEST_CASE("parse errors carry line numbers") {
  const std::string head = "alternatives: a b c\nvoters: 2\n";
  CHECK(parse_error_line(head + "1: a a | b\n2: a | b c\n") == 3);
  CHECK(parse_error_line(head + "1: a b | c\n2: a d | b\n") == 4);
  CHECK(parse_error_line(head + "1: a b c\n2: a | b c\n") == 3);
  CHECK(parse_error_line(head + "1: a | b | c\n2: a | b c\n") == 3);
  CHECK(parse_error_line(head + "1: a b | c\n") > 0);
  CHECK(parse_error_line(head + "1: a b | c\n1: a | b c\n") == 4);
  CHECK(parse_error_line(head + "1: a b | c\n3: a | b c\n") == 4);
  CHECK(parse_error_line("voters: 1\n1: a | b c\n") > 0);
  CHECK(parse_error_line(head + "1: | a b c\n2: a | b c\n") == 3);
  CHECK_THROWS_WITH_AS(parse_profile(head + "1: a a | b\n2: a | b c\n"), doctest::Contains("duplicate"), ParseError);
  CHECK_THROWS_WITH_AS(parse_profile(head + "1: a b c\n2: a | b c\n"), doctest::Contains("missing '|'"), ParseError);
  CHECK_THROWS_WITH_AS(parse_profile(head + "1: a q | b\n2: a | b c\n"), doctest::Contains("unknown"), ParseError);
  CHECK_THROWS_WITH_AS(parse_profile(head + "1: a b | c\n"), doctest::Contains("mismatch"), ParseError);
}

TEST_CASE("profile text round-trips on canonical text") {
  for (const auto& p : oracle::all_profiles(2, 3, [](const PreferenceApproval&) { return true; })) {
    const Alphabet a = Alphabet::standard(3);
    const std::string text = format_profile(a, p);
    const auto back = parse_profile(text);
    CHECK(back.profile == p);
    CHECK(format_profile(back.alphabet, back.profile) == text);
  }
  const std::string canonical = "alternatives: x y z\nvoters: 2\n1: x y | z\n2: z x y |\n";
  const auto f = parse_profile(canonical);
  CHECK(format_profile(f.alphabet, f.profile) == canonical);
}

TEST_CASE("order vector and planner preference formats") {
  const std::string text = "alternatives: a b c\nvoters: 2\n1: c a b\n2: a b c\n";
  const OrderFile f = parse_order_vector(text);
  CHECK(f.orders[0].sequence() == std::vector<int>{2, 0, 1});
  CHECK(format_order_vector(f.alphabet, f.orders) == text);
  CHECK_THROWS_AS(parse_order_vector("alternatives: a b c\nvoters: 1\n1: a | b c\n"), ParseError);

  const Alphabet a = Alphabet::standard(2);
  const PlannerPreference pref = parse_planner_preference("a\na,b\nb\n", a);
  CHECK(pref.rank(AltSet::single(0)) == 0);
  CHECK(pref.prefers(AltSet(0b11), AltSet::single(1)));
  CHECK(format_planner_preference(a, pref) == "a\na,b\nb\n");
  CHECK_THROWS_AS(parse_planner_preference("a\nb\n", a), ParseError);
  CHECK_THROWS_AS(parse_planner_preference("a\na\nb\n", a), ParseError);
}

TEST_CASE("value type validation") {
  CHECK_THROWS_AS(PreferenceApproval({0, 0, 1}, 2), Error);
  CHECK_THROWS_AS(PreferenceApproval({0, 1, 2}, 0), Error);
  CHECK_THROWS_AS(PreferenceApproval({0, 1, 2}, 4), Error);
  CHECK_THROWS_AS(PresentationOrder({0, 2}), Error);
  CHECK_THROWS_AS(Alphabet({"a", "a"}), Error);
  CHECK_THROWS_AS(Alphabet({"a", "b|c"}), Error);
  CHECK_THROWS_AS(Profile({PreferenceApproval({0, 1}, 1), PreferenceApproval({0, 1, 2}, 1)}), Error);
  CHECK_THROWS_AS(PlannerPreference(2, {AltSet(1), AltSet(2)}), Error);
}

TEST_CASE("preference-approval accessors") {
  const PreferenceApproval p({2, 0, 1}, 2);
  CHECK(p.top() == 2);
  CHECK(p.acceptable(0));
  CHECK_FALSE(p.acceptable(1));
  CHECK(p.prefers(2, 1));
  CHECK(p.acceptable_set() == AltSet(0b101));
  CHECK(p.tolerant_version().tolerant());
}

TEST_CASE("canonical enumeration") {
  CHECK(all_orders(3).size() == 6);
  CHECK(all_orders(3).front().sequence() == std::vector<int>{0, 1, 2});
  CHECK(all_orders(3).back().sequence() == std::vector<int>{2, 1, 0});
  for (int k = 0; k < 24; ++k) CHECK(order_index(all_orders(4)[static_cast<std::size_t>(k)]) == k);
  const ProfileSpace space(2, 3);
  CHECK(space.size() == 324);
  const auto oracle_profiles = oracle::all_profiles(2, 3, [](const PreferenceApproval&) { return true; });
  for (std::uint64_t i = 0; i < space.size(); ++i) {
    CHECK(space.at(i) == oracle_profiles[i]);
    CHECK(space.index_of(space.at(i)) == i);
  }
  CHECK(ProfileSpace(3, 3, DomainFilter::Tolerant).size() == 216);
  CHECK(ProfileSpace(2, 3, DomainFilter::Intolerant).size() == 36);
  const OrderSpace os(2, 3);
  CHECK(os.size() == 36);
  for (std::uint64_t i = 0; i < os.size(); ++i) CHECK(os.index_of(os.at(i)) == i);
}

TEST_CASE("budget fails loudly") {
  Budget b(100);
  b.charge(60, "x");
  CHECK(b.used() == 60);
  CHECK_THROWS_AS(b.charge(41, "y"), BudgetExceeded);
  CHECK(checked_pow(2, 70) == UINT64_MAX);
}

TEST_CASE("domain filter parsing") {
  CHECK(parse_domain("tolerant") == DomainFilter::Tolerant);
  CHECK_THROWS_AS(parse_domain("strict"), Error);
  CHECK(to_string(DomainFilter::Intolerant) == "intolerant");
}
