#include <doctest.h>

#include <sstream>

#include "anchorvote/simulate.hpp"
#include "anchorvote/text_format.hpp"
#include "oracle.hpp"

using namespace anchorvote;

namespace {

std::vector<std::string> lines(const std::string& s) {
  std::vector<std::string> out;
  std::istringstream in(s);
  for (std::string l; std::getline(in, l);) out.push_back(l);
  return out;
}

const SimRow& find(const std::vector<SimRow>& rows, const std::string& stat) {
  for (const auto& r : rows)
    if (r.statistic == stat) return r;
  throw Error("missing row " + stat);
}

}  // namespace

TEST_CASE("same seed, same bytes") {
  SimConfig c;
  c.samples = 700;
  c.seed = 42;
  c.rules = {RuleId::sav(), RuleId::nom()};
  Budget b1, b2, b3;
  const auto a = run_simulation(c, b1);
  CHECK(a == run_simulation(c, b2));
  c.seed = 43;
  CHECK(a != run_simulation(c, b3));
}

TEST_CASE("no samples gives only the header") {
  SimConfig c;
  c.samples = 0;
  Budget budget;
  const auto l = lines(run_simulation(c, budget));
  REQUIRE(l.size() == 2);
  CHECK(l[0].rfind("# ", 0) == 0);
  CHECK(l[1] == "rule,statistic,numerator,denominator,value");
}

TEST_CASE("sample count survives a partial last batch") {
  SimConfig c;
  c.samples = 300;
  Budget budget;
  const auto rows = run_simulation_rows(c, budget);
  CHECK(find(rows, "anchor_proof_fraction").denominator == 300);
}

TEST_CASE("exact mode counts what brute force counts") {
  for (const auto& r : {RuleId::sav(), RuleId::nom(), RuleId::unan_or_all()}) {
    SimConfig c;
    c.n = 2;
    c.m = 3;
    c.exact = true;
    c.rules = {r};
    Budget budget;
    const auto rows = run_simulation_rows(c, budget);
    std::uint64_t proof = 0, sizes = 0, total = 0;
    for (const auto& p : oracle::all_profiles(2, 3, [](const PreferenceApproval&) { return true; })) {
      ++total;
      proof += oracle::anchor_proof(r, p);
      const auto outs = oracle::outcomes(r, p);
      sizes += std::set<std::set<int>>(outs.begin(), outs.end()).size();
    }
    CHECK(find(rows, "anchor_proof_fraction").numerator == proof);
    CHECK(find(rows, "anchor_proof_fraction").denominator == total);
    CHECK(find(rows, "mean_outcome_set_size").numerator == sizes);
  }
}

TEST_CASE("with full information, manipulable means not anchor-proof") {
  SimConfig c;
  c.n = 2;
  c.m = 3;
  c.exact = true;
  c.rules = {RuleId::sav()};
  c.info = InfoFunction::Full;
  Budget budget;
  const auto rows = run_simulation_rows(c, budget);
  const auto& manip = find(rows, "manipulable_fraction_full");
  const auto& proof = find(rows, "anchor_proof_fraction");
  CHECK(manip.numerator == 234);
  CHECK(manip.numerator + proof.numerator == proof.denominator);
}

TEST_CASE("out-of-range configurations are rejected") {
  Budget budget;
  SimConfig c;
  c.n = 0;
  CHECK_THROWS_AS(run_simulation(c, budget), Error);
  c = SimConfig{};
  c.m = 6;
  CHECK_THROWS_AS(run_simulation(c, budget), Error);
  c = SimConfig{};
  c.rules.clear();
  CHECK_THROWS_AS(run_simulation(c, budget), Error);
  c = SimConfig{};
  c.rules = {RuleId::fixed_x(4)};
  CHECK_THROWS_AS(run_simulation(c, budget), Error);
}

TEST_CASE("rule names with commas are quoted") {
  SimConfig c;
  c.samples = 10;
  c.rules = {RuleId::constant(AltSet(0b011))};
  Budget budget;
  const auto l = lines(run_simulation(c, budget));
  REQUIRE(l.size() == 4);
  CHECK(l[2].front() == '"');
  CHECK(l[2].find("\",anchor_proof_fraction,10,10,1.000000") != std::string::npos);
}

TEST_CASE("sampler respects the domain") {
  ProfileSampler tolerant(3, 4, DomainFilter::Tolerant, 9);
  ProfileSampler intolerant(3, 4, DomainFilter::Intolerant, 9);
  for (int k = 0; k < 200; ++k) {
    CHECK(tolerant.next().tolerant());
    CHECK(intolerant.next().intolerant());
  }
}

TEST_CASE("sampler reaches every threshold and top") {
  ProfileSampler s(1, 3, DomainFilter::All, 5);
  std::vector<int> thresholds(4, 0), tops(3, 0);
  for (int k = 0; k < 3000; ++k) {
    const Profile p = s.next();
    ++thresholds[static_cast<std::size_t>(p[0].threshold())];
    ++tops[static_cast<std::size_t>(p[0].top())];
  }
  CHECK(thresholds[0] == 0);
  for (int t = 1; t <= 3; ++t) CHECK(thresholds[static_cast<std::size_t>(t)] > 800);
  for (int x = 0; x < 3; ++x) CHECK(tops[static_cast<std::size_t>(x)] > 800);
}
