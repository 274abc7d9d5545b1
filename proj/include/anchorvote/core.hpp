#pragma once

#include <bit>
#include <compare>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace anchorvote {

/// Upper bound on |X|. Subsets fit in a byte and m! stays enumerable.
inline constexpr int kMaxAlternatives = 8;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed text input; carries the 1-based line number of the offence.
class ParseError : public Error {
 public:
  ParseError(int line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
  int line() const noexcept { return line_; }

 private:
  int line_;
};

/// Raised when an enumeration would exceed its node budget.
class BudgetExceeded : public Error {
 public:
  using Error::Error;
};

/// A subset of the alternatives, bit i standing for alternative i.
class AltSet {
 public:
  constexpr AltSet() = default;
  constexpr explicit AltSet(std::uint32_t bits) : bits_(bits) {}

  static constexpr AltSet single(int x) { return AltSet(1u << x); }
  static constexpr AltSet full(int m) { return AltSet((1u << m) - 1u); }

  constexpr std::uint32_t bits() const { return bits_; }
  constexpr bool empty() const { return bits_ == 0; }
  constexpr int size() const { return std::popcount(bits_); }
  constexpr bool contains(int x) const { return (bits_ >> x) & 1u; }
  constexpr bool subset_of(AltSet o) const { return (bits_ & ~o.bits_) == 0; }
  constexpr AltSet with(int x) const { return AltSet(bits_ | (1u << x)); }
  constexpr AltSet without(int x) const { return AltSet(bits_ & ~(1u << x)); }

  /// Lowest-index member; undefined on the empty set.
  constexpr int first() const { return std::countr_zero(bits_); }

  std::vector<int> members() const {
    std::vector<int> out;
    for (std::uint32_t b = bits_; b != 0; b &= b - 1) out.push_back(std::countr_zero(b));
    return out;
  }

  friend constexpr AltSet operator|(AltSet a, AltSet b) { return AltSet(a.bits_ | b.bits_); }
  friend constexpr AltSet operator&(AltSet a, AltSet b) { return AltSet(a.bits_ & b.bits_); }
  friend constexpr AltSet operator-(AltSet a, AltSet b) { return AltSet(a.bits_ & ~b.bits_); }
  friend constexpr bool operator==(AltSet, AltSet) = default;
  friend constexpr auto operator<=>(AltSet, AltSet) = default;

 private:
  std::uint32_t bits_ = 0;
};

using ApprovalBallot = AltSet;
using Outcome = AltSet;
using BallotProfile = std::vector<ApprovalBallot>;

/// Display labels of the alternatives, indexed 0..m-1.
class Alphabet {
 public:
  explicit Alphabet(std::vector<std::string> labels);

  /// a, b, c, ...
  static Alphabet standard(int m);

  int size() const { return static_cast<int>(labels_.size()); }
  const std::string& label(int x) const { return labels_.at(static_cast<std::size_t>(x)); }
  const std::vector<std::string>& labels() const { return labels_; }
  std::optional<int> index_of(std::string_view label) const;

  /// "a,b" in index order; the comma form used in rule ids and preference files.
  std::string join(AltSet s) const;
  /// "{a,b}"
  std::string braces(AltSet s) const;
  /// Inverse of join(); throws Error on unknown or duplicate labels.
  AltSet parse_set(std::string_view text) const;

  friend bool operator==(const Alphabet&, const Alphabet&) = default;

 private:
  std::vector<std::string> labels_;
};

/// A strict ranking plus an acceptability threshold t: the first t ranked
/// alternatives are acceptable.
class PreferenceApproval {
 public:
  PreferenceApproval(std::vector<int> ranking, int threshold);

  int alternatives() const { return static_cast<int>(ranking_.size()); }
  int threshold() const { return threshold_; }
  const std::vector<int>& ranking() const { return ranking_; }
  int top() const { return ranking_.front(); }
  /// 0-based rank position of x (0 = most preferred).
  int position(int x) const { return position_[static_cast<std::size_t>(x)]; }
  bool acceptable(int x) const { return position(x) < threshold_; }
  bool prefers(int x, int y) const { return position(x) < position(y); }
  AltSet acceptable_set() const;
  bool tolerant() const { return threshold_ == alternatives(); }
  bool intolerant() const { return threshold_ == 1; }
  PreferenceApproval tolerant_version() const { return {ranking_, alternatives()}; }

  friend bool operator==(const PreferenceApproval& a, const PreferenceApproval& b) {
    return a.threshold_ == b.threshold_ && a.ranking_ == b.ranking_;
  }
  friend auto operator<=>(const PreferenceApproval& a, const PreferenceApproval& b) {
    if (auto c = a.ranking_ <=> b.ranking_; c != 0) return c;
    return a.threshold_ <=> b.threshold_;
  }

 private:
  std::vector<int> ranking_;
  std::vector<int> position_;
  int threshold_;
};

class Profile {
 public:
  explicit Profile(std::vector<PreferenceApproval> voters);

  int voters() const { return static_cast<int>(voters_.size()); }
  int alternatives() const { return voters_.front().alternatives(); }
  const PreferenceApproval& operator[](int i) const { return voters_[static_cast<std::size_t>(i)]; }
  const std::vector<PreferenceApproval>& entries() const { return voters_; }
  bool tolerant() const;
  bool intolerant() const;
  Profile tolerant_version() const;

  friend bool operator==(const Profile&, const Profile&) = default;
  friend auto operator<=>(const Profile& a, const Profile& b) { return a.voters_ <=> b.voters_; }

 private:
  std::vector<PreferenceApproval> voters_;
};

/// Sequence in which one voter is shown the alternatives.
class PresentationOrder {
 public:
  explicit PresentationOrder(std::vector<int> sequence);

  int size() const { return static_cast<int>(seq_.size()); }
  int operator[](int k) const { return seq_[static_cast<std::size_t>(k)]; }
  int first() const { return seq_.front(); }
  const std::vector<int>& sequence() const { return seq_; }
  /// Step at which x is shown (0-based).
  int step_of(int x) const;

  friend bool operator==(const PresentationOrder&, const PresentationOrder&) = default;
  friend auto operator<=>(const PresentationOrder& a, const PresentationOrder& b) {
    return a.seq_ <=> b.seq_;
  }

 private:
  std::vector<int> seq_;
};

using OrderVector = std::vector<PresentationOrder>;

enum class DomainFilter { All, Tolerant, Intolerant };

std::string_view to_string(DomainFilter d);
DomainFilter parse_domain(std::string_view s);
bool admits(DomainFilter d, const PreferenceApproval& p);

/// Strict ranking of the 2^m - 1 nonempty subsets, best first.
class PlannerPreference {
 public:
  PlannerPreference(int m, std::vector<AltSet> best_first);

  int alternatives() const { return m_; }
  const std::vector<AltSet>& ranking() const { return order_; }
  /// 0 is best.
  int rank(AltSet s) const { return rank_[s.bits()]; }
  bool prefers(AltSet a, AltSet b) const { return rank(a) < rank(b); }
  bool weakly_prefers(AltSet a, AltSet b) const { return rank(a) <= rank(b); }

  friend bool operator==(const PlannerPreference& a, const PlannerPreference& b) {
    return a.order_ == b.order_;
  }

 private:
  int m_;
  std::vector<AltSet> order_;
  std::vector<int> rank_;
};

struct Tally {
  std::vector<int> plur;
  std::vector<int> acc;
};

Tally tally_points(const Profile& profile);

struct SupportSets {
  AltSet plur;
  AltSet acc;
};

SupportSets support_sets(const Profile& profile);

/// Alternatives acceptable to every voter.
AltSet unanimously_accepted(const Profile& profile);

}  // namespace anchorvote
