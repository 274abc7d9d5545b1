#pragma once

// Canonical enumeration of permutations, profiles and order vectors.
// Everything is lexicographic over alternative indices, voter 1 most
// significant, so search results and witnesses are deterministic.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <string>
#include <thread>
#include <vector>

#include "anchorvote/core.hpp"

namespace anchorvote {

/// Node counter shared by an enumeration; throws BudgetExceeded when the
/// next charge would cross the limit.
class Budget {
 public:
  static constexpr std::uint64_t kDefault = 2'000'000'000ull;

  explicit Budget(std::uint64_t limit = kDefault) : limit_(limit) {}

  void charge(std::uint64_t nodes, const std::string& what);
  std::uint64_t used() const { return used_; }
  std::uint64_t limit() const { return limit_; }

 private:
  std::uint64_t limit_;
  std::uint64_t used_ = 0;
};

/// base^exp, or UINT64_MAX on overflow.
std::uint64_t checked_pow(std::uint64_t base, int exp);
std::uint64_t factorial(int m);

/// All m! presentation orders in lexicographic order.
const std::vector<PresentationOrder>& all_orders(int m);
int order_index(const PresentationOrder& order);

/// Per-voter preference-approvals admitted by a domain filter, ordered by
/// (ranking, threshold).
const std::vector<PreferenceApproval>& voter_options(int m, DomainFilter domain);

/// The product space of n voters' preference-approvals under a filter.
class ProfileSpace {
 public:
  ProfileSpace(int n, int m, DomainFilter domain = DomainFilter::All);

  int voters() const { return n_; }
  int alternatives() const { return m_; }
  DomainFilter domain() const { return domain_; }
  /// Options per voter.
  int radix() const { return static_cast<int>(options_->size()); }
  std::uint64_t size() const { return size_; }

  Profile at(std::uint64_t index) const;
  /// Per-voter option indices of the profile at index.
  void digits(std::uint64_t index, std::vector<int>& out) const;
  std::uint64_t index_of(const Profile& profile) const;
  const PreferenceApproval& option(int k) const { return (*options_)[static_cast<std::size_t>(k)]; }

 private:
  int n_;
  int m_;
  DomainFilter domain_;
  const std::vector<PreferenceApproval>* options_;
  std::uint64_t size_;
};

/// The (m!)^n order vectors.
class OrderSpace {
 public:
  OrderSpace(int n, int m);

  int voters() const { return n_; }
  int alternatives() const { return m_; }
  int radix() const { return radix_; }
  std::uint64_t size() const { return size_; }

  OrderVector at(std::uint64_t index) const;
  void digits(std::uint64_t index, std::vector<int>& out) const;
  std::uint64_t index_of(const OrderVector& orders) const;

 private:
  int n_;
  int m_;
  int radix_;
  std::uint64_t size_;
};

/// Every permutation of 0..n-1, lexicographic.
std::vector<std::vector<int>> permutations_of(int n);

/// Runs fn(i) for i in [begin, end) across hardware threads in contiguous
/// chunks. fn must only write to slots owned by i.
template <class Fn>
void parallel_for(std::uint64_t begin, std::uint64_t end, Fn&& fn) {
  const std::uint64_t count = end > begin ? end - begin : 0;
  const unsigned hw = std::max(1u, std::thread::hardware_concurrency());
  const std::uint64_t workers = std::min<std::uint64_t>(hw, count / 256 + 1);
  if (workers <= 1) {
    for (std::uint64_t i = begin; i < end; ++i) fn(i);
    return;
  }
  std::vector<std::thread> pool;
  const std::uint64_t chunk = (count + workers - 1) / workers;
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t lo = begin + w * chunk;
    const std::uint64_t hi = std::min(end, lo + chunk);
    if (lo >= hi) break;
    pool.emplace_back([lo, hi, &fn] {
      for (std::uint64_t i = lo; i < hi; ++i) fn(i);
    });
  }
  for (auto& t : pool) t.join();
}

}  // namespace anchorvote
