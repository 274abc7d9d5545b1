#include "anchorvote/simulate.hpp"

#include <cstdio>
#include <map>
#include <sstream>

#include "anchorvote/anchor.hpp"

namespace anchorvote {

namespace {

constexpr std::uint64_t kBatch = 256;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ull;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ull;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebull;
  return x ^ (x >> 31);
}

struct Counts {
  std::uint64_t profiles = 0;
  std::uint64_t anchor_proof = 0;
  std::uint64_t outcome_sizes = 0;
  std::uint64_t manipulable = 0;
};

}  // namespace

void validate(const SimConfig& c) {
  if (c.n < 1 || c.n > 6) throw Error("simulate: n must be in 1..6");
  if (c.m < 2 || c.m > 5) throw Error("simulate: m must be in 2..5");
  if (c.rules.empty()) throw Error("simulate: no rules given");
  for (const auto& r : c.rules) validate_rule(r, c.m);
}

ProfileSampler::ProfileSampler(int n, int m, DomainFilter domain, std::uint64_t seed)
    : n_(n), m_(m), domain_(domain), engine_(seed) {}

// Unbiased draw in [0, bound) by rejection; independent of the standard
// library's distribution implementations so output is portable.
std::uint64_t ProfileSampler::below(std::uint64_t bound) {
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % bound;
  std::uint64_t x;
  do x = engine_();
  while (x >= limit);
  return x % bound;
}

Profile ProfileSampler::next() {
  const auto& orders = all_orders(m_);
  std::vector<PreferenceApproval> voters;
  for (int i = 0; i < n_; ++i) {
    for (;;) {
      const auto& ranking = orders[static_cast<std::size_t>(below(orders.size()))].sequence();
      PreferenceApproval p(ranking, static_cast<int>(below(static_cast<std::uint64_t>(m_))) + 1);
      if (admits(domain_, p)) {
        voters.push_back(std::move(p));
        break;
      }
    }
  }
  return Profile(std::move(voters));
}

std::vector<SimRow> run_simulation_rows(const SimConfig& config, Budget& budget) {
  validate(config);
  const ProfileSpace space(config.n, config.m, config.domain);
  const std::uint64_t total = config.exact ? space.size() : config.samples;
  const std::uint64_t per_profile = OrderSpace(config.n, config.m).size();
  if (total != 0 && per_profile > UINT64_MAX / total / config.rules.size())
    throw BudgetExceeded("simulation size overflows");
  budget.charge(total * per_profile * config.rules.size(), "simulation");

  std::vector<Profile> profiles;
  profiles.reserve(total);
  if (config.exact) {
    for (std::uint64_t i = 0; i < total; ++i) profiles.push_back(space.at(i));
  } else {
    // Each batch owns a generator seeded from (seed, batch index), so the
    // drawn profiles never depend on how batches are scheduled.
    const std::uint64_t batches = (total + kBatch - 1) / kBatch;
    std::vector<std::vector<Profile>> drawn(batches);
    parallel_for(0, batches, [&](std::uint64_t b) {
      ProfileSampler sampler(config.n, config.m, config.domain, splitmix64(config.seed ^ splitmix64(b)));
      const std::uint64_t count = std::min(kBatch, total - b * kBatch);
      for (std::uint64_t k = 0; k < count; ++k) drawn[b].push_back(sampler.next());
    });
    for (auto& batch : drawn)
      for (auto& p : batch) profiles.push_back(std::move(p));
  }

  const Alphabet alphabet = Alphabet::standard(config.m);
  std::vector<SimRow> rows;
  for (const auto& rule : config.rules) {
    std::vector<std::uint8_t> proof(profiles.size());
    std::vector<std::uint8_t> size(profiles.size());
    parallel_for(0, profiles.size(), [&](std::uint64_t i) {
      Budget local;
      const auto outcomes = outcome_set(rule, profiles[i], local);
      proof[i] = outcomes.size() == 1;
      size[i] = static_cast<std::uint8_t>(outcomes.size());
    });
    Counts c;
    c.profiles = profiles.size();
    for (std::size_t i = 0; i < profiles.size(); ++i) {
      c.anchor_proof += proof[i];
      c.outcome_sizes += size[i];
    }
    const std::string name = format_rule(rule, alphabet);
    rows.push_back({name, "anchor_proof_fraction", c.anchor_proof, c.profiles});
    rows.push_back({name, "mean_outcome_set_size", c.outcome_sizes, c.profiles});
    if (config.info) {
      // Profiles sharing an info view share the verdict.
      std::map<std::vector<int>, bool> cache;
      for (const auto& p : profiles) {
        auto key = info_view(*config.info, p).key;
        auto it = cache.find(key);
        if (it == cache.end()) {
          const WorldTable table(rule, possible_worlds(*config.info, p, budget), budget);
          it = cache.emplace(std::move(key), find_manipulation_any_preference(table).has_value()).first;
        }
        c.manipulable += it->second;
      }
      rows.push_back({name, "manipulable_fraction_" + std::string(to_string(*config.info)), c.manipulable,
                      c.profiles});
    }
  }
  return rows;
}

std::string run_simulation(const SimConfig& config, Budget& budget) {
  std::ostringstream out;
  out << "# anchorvote simulate n=" << config.n << " m=" << config.m << " domain=" << to_string(config.domain);
  if (config.exact)
    out << " mode=exact (every profile in the domain once)";
  else
    out << " mode=sampled samples=" << config.samples << " seed=" << config.seed
        << " (per voter: ranking uniform over m! orders, threshold uniform over 1..m, rejected until the"
           " domain admits it; mt19937_64 per batch of "
        << kBatch << " seeded by splitmix64)";
  out << "\nrule,statistic,numerator,denominator,value\n";
  if (!config.exact && config.samples == 0) {
    validate(config);
    return out.str();
  }
  for (const auto& row : run_simulation_rows(config, budget)) {
    char value[64];
    std::snprintf(value, sizeof value, "%.6f",
                  static_cast<double>(row.numerator) / static_cast<double>(row.denominator));
    const bool quote = row.rule.find(',') != std::string::npos;
    out << (quote ? "\"" + row.rule + "\"" : row.rule) << ',' << row.statistic << ',' << row.numerator << ',' << row.denominator << ',' << value
        << '\n';
  }
  return out.str();
}

}  // namespace anchorvote
