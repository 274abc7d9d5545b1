#include "anchorvote/reproduce.hpp"

#include <sstream>

#include "anchorvote/anchor.hpp"
#include "anchorvote/ballots.hpp"
#include "anchorvote/enumerate.hpp"

namespace anchorvote {

namespace {

CheckLine line(std::string id, std::string title, bool pass, std::string detail) {
  return {std::move(id), std::move(title), pass, std::move(detail), 0};
}

std::string ballots_text(const Alphabet& alphabet, const BallotProfile& ballots) {
  std::string s;
  for (const auto& b : ballots) s += (s.empty() ? "" : " ") + alphabet.braces(b);
  return s;
}

std::vector<CheckLine> example1() {
  const auto [alphabet, p] = fixtures::two_project_election();
  OrderVector own, uniform;
  for (const auto& v : p.entries()) {
    own.push_back(derived_orders(v).best_first);
    uniform.push_back(PresentationOrder({0, 1}));
  }
  const auto b1 = generate_ballot_profile(p, own);
  const auto b2 = generate_ballot_profile(p, uniform);
  const auto x = alphabet.parse_set("x"), y = alphabet.parse_set("y"), xy = alphabet.parse_set("x,y");
  const auto w1 = eval_rule(RuleId::sav(), b1, 2);
  const auto w2 = eval_rule(RuleId::sav(), b2, 2);
  const auto app = app_points(p, uniform);
  const Tally t = tally_points(p);
  return {
      line("example1.tally", "plurality and acceptability points", t.plur == std::vector<int>{2, 3} && t.acc == std::vector<int>{5, 5},
           "plur x=" + std::to_string(t.plur[0]) + " y=" + std::to_string(t.plur[1]) + ", acc x=" +
               std::to_string(t.acc[0]) + " y=" + std::to_string(t.acc[1])),
      line("example1.own-top-ballots", "ballots when each voter sees their top first", b1 == BallotProfile{x, x, y, y, y},
           ballots_text(alphabet, b1)),
      line("example1.own-top-winner", "approval winner is y", w1 == y, alphabet.braces(w1)),
      line("example1.uniform-ballots", "ballots when everyone sees x first", b2 == BallotProfile{x, x, xy, xy, xy},
           ballots_text(alphabet, b2)),
      line("example1.uniform-winner", "approval winner is x", w2 == x, alphabet.braces(w2)),
      line("example1.app-points", "approval points under (x,y)", app == std::vector<int>{5, 3},
           "x=" + std::to_string(app[0]) + " y=" + std::to_string(app[1])),
  };
}

std::vector<CheckLine> example2() {
  const Alphabet xyz({"x", "y", "z"});
  const PreferenceApproval p({0, 1, 2}, 3);
  const PresentationOrder order({2, 0, 1});
  const auto b = generate_ballot(p, order);
  return {line("example2.ballot", "x > y > z, all acceptable, shown (z,x,y)", b == xyz.parse_set("x,z"), xyz.braces(b))};
}

std::vector<CheckLine> example9() {
  Budget budget;
  const Profile p = fixtures::alternative_structure_profile();
  const Alphabet abc = Alphabet::standard(3);
  const auto worlds = possible_worlds(InfoFunction::AltStructure, p, budget);
  const WorldTable table(RuleId::sav(), worlds, budget);
  const PlannerPreference pref = lex_pref({0, 1, 2});
  const OrderSpace os(4, 3);
  std::uint64_t completions = 0, optimal = 0;
  std::string first;
  for (std::uint64_t o = 0; o < os.size(); ++o) {
    const OrderVector sigma = os.at(o);
    if (sigma[0] != PresentationOrder({0, 1, 2})) continue;
    ++completions;
    if (is_optimal_strategy(table, pref, sigma).optimal) {
      if (optimal++ == 0)
        for (const auto& s : sigma) first += "(" + format_order(abc, s) + ")";
    }
  }
  return {
      line("example9.worlds", "relabeling orbit has at most six profiles", worlds.size() <= 6,
           std::to_string(worlds.size()) + " worlds"),
      line("example9.optimal", "some completion with voter 1 shown (a,b,c) is optimal", optimal > 0,
           std::to_string(optimal) + "/" + std::to_string(completions) + " completions optimal" +
               (first.empty() ? "" : "; first " + first)),
  };
}

std::vector<CheckLine> table3() {
  std::vector<CheckLine> out;
  for (const auto& rule : {RuleId::sav(), RuleId::nom()}) {
    const std::string name = rule.kind == RuleKind::Sav ? "sav" : "nom";
    const ProfileSpace space(2, 3);
    Budget budget;
    std::uint64_t manip = 0, not_proof = 0, agree = 0;
    for (std::uint64_t i = 0; i < space.size(); ++i) {
      const Profile p = space.at(i);
      const bool m = find_manipulation_any_preference(WorldTable(rule, {p}, budget)).has_value();
      const bool np = !anchor_proof_for_profile(rule, p, budget).holds;
      manip += m;
      not_proof += np;
      agree += m == np;
    }
    out.push_back(line("table3.full." + name, "full information: manipulable unless anchor-proof (n=2, m=3)",
                       agree == space.size(),
                       std::to_string(manip) + " manipulable, " + std::to_string(not_proof) + " not anchor-proof"));
  }
  for (const auto& rule : {RuleId::sav(), RuleId::nom()}) {
    const std::string name = rule.kind == RuleKind::Sav ? "sav" : "nom";
    Budget budget;
    const WorldTable table(rule, possible_worlds(InfoFunction::Zero, ProfileSpace(2, 3).at(0), budget), budget);
    const auto w = find_manipulation_any_preference(table);
    out.push_back(line("table3.zero." + name, "zero information: no preference admits an optimal strategy (n=2, m=3)",
                       !w.has_value(), w ? "found one" : "none over " + std::to_string(table.orders()) + " strategies"));
  }
  const Alphabet abc = Alphabet::standard(3);
  for (const auto& s : fixtures::manipulation_setups()) {
    Budget budget;
    const auto v = is_optimal_strategy(s.rule, s.pref, s.info, s.profile, s.sigma_star, budget);
    std::string detail = v.optimal ? "optimal" : "fails condition " + std::to_string(v.failed_condition);
    if (v.optimal)
      detail += "; strictly beats " + abc.braces(v.other_outcome) + " with " + abc.braces(v.star_outcome);
    out.push_back(line("table3." + std::string(to_string(s.info)) + "." + s.name.substr(0, 3),
                       s.name + ": constructed strategy is optimal (n=3, m=3)", v.optimal, detail));
  }
  return out;
}

struct Expect {
  RuleId rule;
  Question q;
  DomainFilter domain;
  bool holds;
  int n = 2;
};

std::vector<CheckLine> fig1() {
  const RuleId constant = RuleId::constant(AltSet::single(0));
  const RuleId excl = RuleId::nom_excluding(Alphabet::standard(3).parse_set("b,c"));
  const auto D = DomainFilter::All;
  const auto T = DomainFilter::Tolerant;
  using Q = Question;
  const std::vector<Expect> cells = {
      {RuleId::sav(), Q::Q1, D, false},          {RuleId::nom(), Q::Q1, D, false},
      {RuleId::fixed_x(0), Q::Q1, D, false},     {RuleId::sav_cautious(), Q::Q1, D, false},
      {constant, Q::Q1, D, true},                {RuleId::sav(), Q::Q2, D, true},
      {RuleId::nom(), Q::Q2, D, true},           {RuleId::sav(), Q::Q2, T, false},
      {RuleId::fixed_x(0), Q::Q2, T, true},      {RuleId::sav(), Q::Q3, D, false},
      {RuleId::sav(), Q::Q3, T, false},          {RuleId::nom(), Q::Q3, D, false},
      {RuleId::nom(), Q::Q3, T, true, 3},        {excl, Q::Q3, D, true},
      {RuleId::sav(), Q::Q4, D, true},           {RuleId::nom(), Q::Q4, T, true},
      {RuleId::sav(), Q::Q5, D, true},           {RuleId::sav(), Q::Q5, T, false},
      {RuleId::sav_cautious(), Q::Q5, T, true},  {RuleId::sav(), Q::Q6, D, true},
      {RuleId::nom(), Q::Q6, T, true},
  };
  const Alphabet abc = Alphabet::standard(3);
  std::vector<CheckLine> out;
  Budget budget;
  for (const auto& c : cells) {
    const Verdict v = quantifier_check(c.rule, c.q, c.n, 3, c.domain, budget);
    std::ostringstream id;
    id << "fig1." << to_string(c.q) << "." << format_rule(c.rule, abc) << "." << to_string(c.domain);
    std::ostringstream title;
    title << to_string(c.q) << " " << format_rule(c.rule, abc) << " in " << to_string(c.domain) << " domain at n="
          << c.n << ", m=3: expect " << (c.holds ? "yes" : "no");
    out.push_back(line(id.str(), title.str(), v.holds == c.holds, std::string(v.holds ? "yes" : "no") + ", " + v.note));
  }
  return out;
}

}  // namespace

std::vector<CheckLine> run_reproduction(std::string_view case_id) {
  if (case_id == "example1") return example1();
  if (case_id == "example2") return example2();
  if (case_id == "example9") return example9();
  if (case_id == "table3") return table3();
  if (case_id == "fig1") return fig1();
  throw Error("unknown case '" + std::string(case_id) + "' (example1|example2|example9|table3|fig1)");
}

}  // namespace anchorvote
