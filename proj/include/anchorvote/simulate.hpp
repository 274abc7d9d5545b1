#pragma once

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "anchorvote/core.hpp"
#include "anchorvote/enumerate.hpp"
#include "anchorvote/planner.hpp"
#include "anchorvote/rules.hpp"

namespace anchorvote {

struct SimConfig {
  int n = 3;
  int m = 3;
  std::uint64_t samples = 1000;
  std::uint64_t seed = 1;
  std::vector<RuleId> rules{RuleId::sav()};
  DomainFilter domain = DomainFilter::All;
  bool exact = false;  // enumerate the whole filtered domain instead of sampling
  std::optional<InfoFunction> info;
};

/// Integer tallies behind one CSV row.
struct SimRow {
  std::string rule;
  std::string statistic;
  std::uint64_t numerator = 0;
  std::uint64_t denominator = 0;
};

/// Throws Error on out-of-range parameters.
void validate(const SimConfig& config);

/// One voter drawn uniformly: ranking over the m! permutations, threshold over
/// 1..m, redrawn until the domain filter admits it.
class ProfileSampler {
 public:
  ProfileSampler(int n, int m, DomainFilter domain, std::uint64_t seed);
  Profile next();

 private:
  std::uint64_t below(std::uint64_t bound);

  int n_;
  int m_;
  DomainFilter domain_;
  std::mt19937_64 engine_;
};

std::vector<SimRow> run_simulation_rows(const SimConfig& config, Budget& budget);

/// Comment line describing the sampling, a header row, then one row per
/// (rule, statistic). Same config and seed give the same bytes.
std::string run_simulation(const SimConfig& config, Budget& budget);

}  // namespace anchorvote
