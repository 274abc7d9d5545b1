// anchorvote: command-line front end. Exit status 0 = pass / property holds,
// 1 = fail / property does not hold, 2 = usage, input or budget error.
#include <CLI11.hpp>

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <string>

#include "anchorvote/anchor.hpp"
#include "anchorvote/planner.hpp"
#include "anchorvote/ranked.hpp"
#include "anchorvote/reproduce.hpp"
#include "anchorvote/simulate.hpp"
#include "anchorvote/text_format.hpp"
#include "anchorvote/verify.hpp"

using namespace anchorvote;

namespace {

int report(const std::vector<CheckLine>& lines) {
  std::size_t passed = 0;
  for (const auto& l : lines) {
    std::cout << format_check(l) << '\n';
    passed += l.pass;
  }
  std::cout << passed << '/' << lines.size() << " passed\n";
  return all_pass(lines) ? 0 : 1;
}

void print_pair(const Alphabet& a, const Verdict& v) {
  if (v.profile) std::cout << "profile:\n" << format_profile(a, *v.profile);
  if (v.sigma) std::cout << "sigma:\n" << format_order_vector(a, *v.sigma);
  if (v.pi) std::cout << "pi:\n" << format_order_vector(a, *v.pi);
  if (v.outcome_sigma) std::cout << "outcome under sigma: " << a.braces(*v.outcome_sigma) << '\n';
  if (v.outcome_pi) std::cout << "outcome under pi: " << a.braces(*v.outcome_pi) << '\n';
}

PlannerPreference preference_from_family(const std::string& family, const Alphabet& a) {
  const auto colon = family.find(':');
  const std::string head = family.substr(0, colon);
  const std::string arg = colon == std::string::npos ? "" : family.substr(colon + 1);
  if (head == "lex") {
    std::vector<int> ranking;
    std::size_t start = 0;
    while (start <= arg.size()) {
      const auto comma = arg.find(',', start);
      const auto label = arg.substr(start, comma == std::string::npos ? std::string::npos : comma - start);
      const auto x = a.index_of(label);
      if (!x) throw Error("unknown alternative '" + label + "'");
      ranking.push_back(*x);
      if (comma == std::string::npos) break;
      start = comma + 1;
    }
    if (static_cast<int>(ranking.size()) != a.size()) throw Error("lex: needs a ranking of every alternative");
    return lex_pref(ranking);
  }
  if (head == "singleton-first") {
    const auto x = a.index_of(arg);
    if (!x) throw Error("unknown alternative '" + arg + "'");
    return target_first_pref(a.size(), AltSet::single(*x));
  }
  if (head == "target-first") return target_first_pref(a.size(), a.parse_set(arg));
  throw Error("unknown preference family '" + family +
              "' (lex:<a,b,..>|singleton-first:<label>|target-first:<subset>|all)");
}

void print_witness(const Alphabet& a, const ManipWitness& w) {
  std::cout << "planner preference (best first):\n" << format_planner_preference(a, w.pref);
  std::cout << "optimal strategy:\n" << format_order_vector(a, w.sigma_star);
  std::cout << "strict improvement on world:\n" << format_profile(a, w.world);
  std::cout << "against order vector:\n" << format_order_vector(a, w.sigma);
  std::cout << "outcome " << a.braces(w.star_outcome) << " preferred to " << a.braces(w.other_outcome) << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"anchorvote: anchoring-biased approval voting verifier"};
  app.require_subcommand(1);

  std::string case_id;
  auto* reproduce = app.add_subcommand("reproduce", "recompute a worked case (example1|example2|example9|table3|fig1)");
  reproduce->add_option("case", case_id)->required();

  std::string suite = "all";
  auto* verify = app.add_subcommand("verify", "run acceptance criteria (all or 1..15)");
  verify->add_option("suite", suite);

  std::string rule_text, profile_path, info_text, pref_path, pref_family, question_text, domain_text = "all",
                                                                                        witness_dir;
  int n = 2, m = 3;
  std::uint64_t budget_limit = Budget::kDefault;

  auto* check = app.add_subcommand("check-profile", "is a profile anchor-proof for a rule");
  check->add_option("--rule", rule_text)->required();
  check->add_option("--profile", profile_path)->required();
  check->add_option("--budget", budget_limit);

  auto* search = app.add_subcommand("search", "decide a quantifier question by exhaustive search");
  search->add_option("--rule", rule_text)->required();
  search->add_option("--question", question_text)->required();
  search->add_option("--n", n)->required();
  search->add_option("--m", m)->required();
  search->add_option("--domain", domain_text);
  search->add_option("--budget", budget_limit);
  search->add_option("--witness-dir", witness_dir, "write witness profile/orders here");

  auto* manipulate = app.add_subcommand("manipulate", "search for an optimal planner strategy");
  manipulate->add_option("--rule", rule_text)->required();
  manipulate->add_option("--info", info_text)->required();
  manipulate->add_option("--profile", profile_path)->required();
  auto* pref_opt = manipulate->add_option("--pref", pref_path, "planner preference file");
  manipulate->add_option("--pref-family", pref_family)->excludes(pref_opt);
  manipulate->add_option("--budget", budget_limit);

  std::string rank_rule_text, check_kind;
  auto* ranked = app.add_subcommand("ranked", "ranked-ballot checks");
  ranked->add_option("--rule", rank_rule_text)->required();
  ranked->add_option("--n", n)->required();
  ranked->add_option("--m", m)->required();
  ranked->add_option("--check", check_kind)->required()->check(CLI::IsMember({"tops-only", "anchor-proof"}));
  ranked->add_option("--budget", budget_limit);

  SimConfig sim;
  std::vector<std::string> sim_rules{"sav"};
  std::string out_path = "-";
  auto* simulate = app.add_subcommand("simulate", "Monte Carlo or exact statistics as CSV");
  simulate->add_option("--n", sim.n)->required();
  simulate->add_option("--m", sim.m)->required();
  simulate->add_option("--samples", sim.samples);
  simulate->add_option("--seed", sim.seed);
  simulate->add_option("--rule", sim_rules, "repeatable");
  simulate->add_option("--domain", domain_text);
  simulate->add_option("--out", out_path, "CSV path, '-' for stdout");
  simulate->add_flag("--exact", sim.exact, "enumerate the whole domain");
  simulate->add_option("--info", info_text, "also report manipulability under this info function");
  simulate->add_option("--budget", budget_limit);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? 0 : 2;
  }

  try {
    Budget budget(budget_limit);
    if (*reproduce) return report(run_reproduction(case_id));
    if (*verify) return report(run_verify(suite));

    if (*check) {
      const auto [alphabet, profile] = parse_profile(read_file(profile_path));
      const RuleId rule = parse_rule(rule_text, alphabet);
      const Verdict v = anchor_proof_for_profile(rule, profile, budget);
      std::cout << "anchor-proof: " << (v.holds ? "yes" : "no") << '\n';
      std::cout << "outcomes:";
      for (auto o : outcome_set(rule, profile, budget)) std::cout << ' ' << alphabet.braces(o);
      std::cout << '\n';
      if (!v.holds) print_pair(alphabet, Verdict{false, std::nullopt, v.sigma, v.pi, v.outcome_sigma, v.outcome_pi, ""});
      return v.holds ? 0 : 1;
    }

    if (*search) {
      const Alphabet alphabet = Alphabet::standard(m);
      const RuleId rule = parse_rule(rule_text, alphabet);
      const Question q = parse_question(question_text);
      const Verdict v = quantifier_check(rule, q, n, m, parse_domain(domain_text), budget);
      std::cout << to_string(q) << ' ' << format_rule(rule, alphabet) << " n=" << n << " m=" << m
                << " domain=" << domain_text << ": " << (v.holds ? "yes" : "no") << " (" << v.note << ")\n";
      print_pair(alphabet, v);
      if (!witness_dir.empty()) {
        std::filesystem::create_directories(witness_dir);
        const std::filesystem::path dir(witness_dir);
        if (v.profile) write_file((dir / "profile.txt").string(), format_profile(alphabet, *v.profile));
        if (v.sigma) write_file((dir / "sigma.txt").string(), format_order_vector(alphabet, *v.sigma));
        if (v.pi) write_file((dir / "pi.txt").string(), format_order_vector(alphabet, *v.pi));
      }
      return v.holds ? 0 : 1;
    }

    if (*manipulate) {
      const auto [alphabet, profile] = parse_profile(read_file(profile_path));
      const RuleId rule = parse_rule(rule_text, alphabet);
      const InfoFunction f = parse_info(info_text);
      const WorldTable table(rule, possible_worlds(f, profile, budget), budget);
      std::cout << "possible worlds: " << table.worlds().size() << '\n';
      std::optional<ManipWitness> w;
      if (pref_family == "all") {
        if (alphabet.size() <= 3) {
          for_each_preference(alphabet.size(), [&](const PlannerPreference& pref) {
            w = find_optimal_strategy(table, pref);
            return !w;
          });
          if (w.has_value() != find_manipulation_any_preference(table).has_value())
            throw Error("internal: preference enumeration and constraint search disagree");
        } else {
          w = find_manipulation_any_preference(table);
        }
      } else {
        PlannerPreference pref = !pref_path.empty() ? parse_planner_preference(read_file(pref_path), alphabet)
                                 : !pref_family.empty() ? preference_from_family(pref_family, alphabet)
                                                        : lex_pref([&] {
                                                            std::vector<int> r;
                                                            for (int x = 0; x < alphabet.size(); ++x) r.push_back(x);
                                                            return r;
                                                          }());
        w = find_optimal_strategy(table, pref);
      }
      std::cout << "manipulable: " << (w ? "yes" : "no") << '\n';
      if (w) print_witness(alphabet, *w);
      return w ? 0 : 1;
    }

    if (*ranked) {
      const RankRule rule = parse_rank_rule(rank_rule_text);
      const RankVerdict v = check_kind == "tops-only" ? tops_only_check(rule, n, m, budget)
                                                      : rank_anchor_proof(rule, n, m, budget);
      const Alphabet alphabet = Alphabet::standard(m);
      std::cout << check_kind << ' ' << to_string(rule) << " n=" << n << " m=" << m << ": "
                << (v.holds ? "yes" : "no") << '\n';
      auto ballots = [&](const std::vector<TruncatedBallot>& bs) {
        std::string s;
        for (const auto& b : bs) s += (s.empty() ? "" : ", ") + std::string("(") + format_truncated(b, alphabet) + ")";
        return s;
      };
      if (v.first) std::cout << "ballots " << ballots(*v.first) << " -> " << alphabet.braces(v.outcome_first) << '\n';
      if (v.second) std::cout << "ballots " << ballots(*v.second) << " -> " << alphabet.braces(v.outcome_second) << '\n';
      if (v.profile) {
        std::cout << "profile:\n" << format_profile(alphabet, *v.profile);
        std::cout << "sigma:\n" << format_order_vector(alphabet, *v.sigma) << "outcome " << alphabet.braces(v.outcome_first) << '\n';
        std::cout << "pi:\n" << format_order_vector(alphabet, *v.pi) << "outcome " << alphabet.braces(v.outcome_second) << '\n';
      }
      return v.holds ? 0 : 1;
    }

    if (*simulate) {
      const Alphabet alphabet = Alphabet::standard(sim.m);
      sim.rules.clear();
      for (const auto& r : sim_rules) sim.rules.push_back(parse_rule(r, alphabet));
      sim.domain = parse_domain(domain_text);
      if (!info_text.empty()) sim.info = parse_info(info_text);
      const std::string csv = run_simulation(sim, budget);
      if (out_path == "-")
        std::cout << csv;
      else
        write_file(out_path, csv);
      return 0;
    }
  } catch (const BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << '\n';
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
