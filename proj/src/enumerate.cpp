#include "anchorvote/enumerate.hpp"

#include <array>
#include <limits>
#include <map>
#include <mutex>
#include <numeric>

namespace anchorvote {

void Budget::charge(std::uint64_t nodes, const std::string& what) {
  if (nodes > limit_ - used_)
    throw BudgetExceeded(what + " needs " + std::to_string(nodes) + " nodes; budget has " +
                         std::to_string(limit_ - used_) + " of " + std::to_string(limit_) + " left");
  used_ += nodes;
}

std::uint64_t checked_pow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base)
      return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

std::uint64_t factorial(int m) {
  std::uint64_t r = 1;
  for (int i = 2; i <= m; ++i) r *= static_cast<std::uint64_t>(i);
  return r;
}

std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> p(static_cast<std::size_t>(n));
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

namespace {

void check_m(int m) {
  if (m < 1 || m > kMaxAlternatives) throw Error("m must lie in 1.." + std::to_string(kMaxAlternatives));
}

std::mutex cache_mutex;

}  // namespace

const std::vector<PresentationOrder>& all_orders(int m) {
  check_m(m);
  static std::array<std::vector<PresentationOrder>, kMaxAlternatives + 1> cache;
  std::lock_guard lock(cache_mutex);
  auto& slot = cache[static_cast<std::size_t>(m)];
  if (slot.empty())
    for (auto& p : permutations_of(m)) slot.emplace_back(std::move(p));
  return slot;
}

int order_index(const PresentationOrder& order) {
  // Lehmer code.
  const int m = order.size();
  int index = 0;
  std::uint32_t used = 0;
  for (int k = 0; k < m; ++k) {
    const int x = order[k];
    const int smaller_unused = x - std::popcount(used & ((1u << x) - 1u));
    index = index * (m - k) + smaller_unused;
    used |= 1u << x;
  }
  return index;
}

const std::vector<PreferenceApproval>& voter_options(int m, DomainFilter domain) {
  check_m(m);
  static std::map<std::pair<int, int>, std::vector<PreferenceApproval>> cache;
  const auto key = std::make_pair(m, static_cast<int>(domain));
  const auto& orders = all_orders(m);
  std::lock_guard lock(cache_mutex);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<PreferenceApproval> opts;
  for (const auto& o : orders)
    for (int t = 1; t <= m; ++t) {
      PreferenceApproval p(o.sequence(), t);
      if (admits(domain, p)) opts.push_back(std::move(p));
    }
  return cache.emplace(key, std::move(opts)).first->second;
}

ProfileSpace::ProfileSpace(int n, int m, DomainFilter domain)
    : n_(n), m_(m), domain_(domain), options_(&voter_options(m, domain)) {
  if (n < 1) throw Error("need at least one voter");
  size_ = checked_pow(options_->size(), n);
  if (size_ == std::numeric_limits<std::uint64_t>::max()) throw BudgetExceeded("profile space size overflows");
}

void ProfileSpace::digits(std::uint64_t index, std::vector<int>& out) const {
  out.resize(static_cast<std::size_t>(n_));
  const auto r = static_cast<std::uint64_t>(radix());
  for (int i = n_ - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(index % r);
    index /= r;
  }
}

Profile ProfileSpace::at(std::uint64_t index) const {
  std::vector<int> d;
  digits(index, d);
  std::vector<PreferenceApproval> voters;
  voters.reserve(d.size());
  for (int k : d) voters.push_back(option(k));
  return Profile(std::move(voters));
}

std::uint64_t ProfileSpace::index_of(const Profile& profile) const {
  if (profile.voters() != n_ || profile.alternatives() != m_) throw Error("profile does not fit this space");
  std::uint64_t index = 0;
  for (const auto& p : profile.entries()) {
    if (!admits(domain_, p)) throw Error("profile outside the domain filter");
    const auto it = std::lower_bound(options_->begin(), options_->end(), p);
    index = index * static_cast<std::uint64_t>(radix()) + static_cast<std::uint64_t>(it - options_->begin());
  }
  return index;
}

OrderSpace::OrderSpace(int n, int m) : n_(n), m_(m), radix_(static_cast<int>(factorial(m))) {
  check_m(m);
  if (n < 1) throw Error("need at least one voter");
  size_ = checked_pow(static_cast<std::uint64_t>(radix_), n);
  if (size_ == std::numeric_limits<std::uint64_t>::max()) throw BudgetExceeded("order space size overflows");
}

void OrderSpace::digits(std::uint64_t index, std::vector<int>& out) const {
  out.resize(static_cast<std::size_t>(n_));
  const auto r = static_cast<std::uint64_t>(radix_);
  for (int i = n_ - 1; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = static_cast<int>(index % r);
    index /= r;
  }
}

OrderVector OrderSpace::at(std::uint64_t index) const {
  std::vector<int> d;
  digits(index, d);
  const auto& orders = all_orders(m_);
  OrderVector out;
  out.reserve(d.size());
  for (int k : d) out.push_back(orders[static_cast<std::size_t>(k)]);
  return out;
}

std::uint64_t OrderSpace::index_of(const OrderVector& orders) const {
  if (static_cast<int>(orders.size()) != n_) throw Error("order vector length does not match voter count");
  std::uint64_t index = 0;
  for (const auto& o : orders) {
    if (o.size() != m_) throw Error("order over the wrong number of alternatives");
    index = index * static_cast<std::uint64_t>(radix_) + static_cast<std::uint64_t>(order_index(o));
  }
  return index;
}

}  // namespace anchorvote
