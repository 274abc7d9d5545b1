#include "anchorvote/core.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace anchorvote {

namespace {

void check_permutation(const std::vector<int>& seq, const char* what) {
  const int m = static_cast<int>(seq.size());
  if (m < 1 || m > kMaxAlternatives)
    throw Error(std::string(what) + ": need 1.." + std::to_string(kMaxAlternatives) +
                " alternatives, got " + std::to_string(m));
  std::uint32_t seen = 0;
  for (int x : seq) {
    if (x < 0 || x >= m) throw Error(std::string(what) + ": alternative out of range");
    if ((seen >> x) & 1u) throw Error(std::string(what) + ": duplicate alternative");
    seen |= 1u << x;
  }
}

bool valid_label(const std::string& s) {
  if (s.empty()) return false;
  return std::none_of(s.begin(), s.end(), [](char c) {
    return c == '|' || c == ',' || c == '#' || c == ':' || std::isspace(static_cast<unsigned char>(c));
  });
}

}  // namespace

Alphabet::Alphabet(std::vector<std::string> labels) : labels_(std::move(labels)) {
  if (labels_.size() < 2 || labels_.size() > static_cast<std::size_t>(kMaxAlternatives))
    throw Error("alphabet needs 2.." + std::to_string(kMaxAlternatives) + " labels");
  std::set<std::string> seen;
  for (const auto& l : labels_) {
    if (!valid_label(l)) throw Error("invalid alternative label '" + l + "'");
    if (!seen.insert(l).second) throw Error("duplicate alternative label '" + l + "'");
  }
}

Alphabet Alphabet::standard(int m) {
  std::vector<std::string> labels;
  for (int i = 0; i < m; ++i) labels.emplace_back(1, static_cast<char>('a' + i));
  return Alphabet(std::move(labels));
}

std::optional<int> Alphabet::index_of(std::string_view label) const {
  for (std::size_t i = 0; i < labels_.size(); ++i)
    if (labels_[i] == label) return static_cast<int>(i);
  return std::nullopt;
}

std::string Alphabet::join(AltSet s) const {
  std::string out;
  for (int x : s.members()) {
    if (!out.empty()) out += ',';
    out += label(x);
  }
  return out;
}

std::string Alphabet::braces(AltSet s) const { return "{" + join(s) + "}"; }

AltSet Alphabet::parse_set(std::string_view text) const {
  AltSet out;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    const auto comma = text.find(',', pos);
    const auto token = text.substr(pos, comma == std::string_view::npos ? std::string_view::npos : comma - pos);
    const auto idx = index_of(token);
    if (!idx) throw Error("unknown alternative '" + std::string(token) + "'");
    if (out.contains(*idx)) throw Error("duplicate alternative '" + std::string(token) + "'");
    out = out.with(*idx);
    if (comma == std::string_view::npos) break;
    pos = comma + 1;
  }
  return out;
}

PreferenceApproval::PreferenceApproval(std::vector<int> ranking, int threshold)
    : ranking_(std::move(ranking)), threshold_(threshold) {
  check_permutation(ranking_, "preference-approval");
  if (threshold_ < 1 || threshold_ > alternatives())
    throw Error("threshold must lie in [1, m]");
  position_.assign(ranking_.size(), 0);
  for (std::size_t k = 0; k < ranking_.size(); ++k)
    position_[static_cast<std::size_t>(ranking_[k])] = static_cast<int>(k);
}

AltSet PreferenceApproval::acceptable_set() const {
  AltSet s;
  for (int k = 0; k < threshold_; ++k) s = s.with(ranking_[static_cast<std::size_t>(k)]);
  return s;
}

Profile::Profile(std::vector<PreferenceApproval> voters) : voters_(std::move(voters)) {
  if (voters_.empty()) throw Error("profile needs at least one voter");
  const int m = voters_.front().alternatives();
  for (const auto& p : voters_)
    if (p.alternatives() != m) throw Error("voters disagree on the number of alternatives");
}

bool Profile::tolerant() const {
  return std::all_of(voters_.begin(), voters_.end(), [](const auto& p) { return p.tolerant(); });
}

bool Profile::intolerant() const {
  return std::all_of(voters_.begin(), voters_.end(), [](const auto& p) { return p.intolerant(); });
}

Profile Profile::tolerant_version() const {
  std::vector<PreferenceApproval> out;
  out.reserve(voters_.size());
  for (const auto& p : voters_) out.push_back(p.tolerant_version());
  return Profile(std::move(out));
}

PresentationOrder::PresentationOrder(std::vector<int> sequence) : seq_(std::move(sequence)) {
  check_permutation(seq_, "presentation order");
}

int PresentationOrder::step_of(int x) const {
  return static_cast<int>(std::find(seq_.begin(), seq_.end(), x) - seq_.begin());
}

std::string_view to_string(DomainFilter d) {
  switch (d) {
    case DomainFilter::All: return "all";
    case DomainFilter::Tolerant: return "tolerant";
    case DomainFilter::Intolerant: return "intolerant";
  }
  return "?";
}

DomainFilter parse_domain(std::string_view s) {
  if (s == "all") return DomainFilter::All;
  if (s == "tolerant") return DomainFilter::Tolerant;
  if (s == "intolerant") return DomainFilter::Intolerant;
  throw Error("unknown domain '" + std::string(s) + "' (all|tolerant|intolerant)");
}

bool admits(DomainFilter d, const PreferenceApproval& p) {
  switch (d) {
    case DomainFilter::All: return true;
    case DomainFilter::Tolerant: return p.tolerant();
    case DomainFilter::Intolerant: return p.intolerant();
  }
  return false;
}

PlannerPreference::PlannerPreference(int m, std::vector<AltSet> best_first)
    : m_(m), order_(std::move(best_first)), rank_(std::size_t{1} << m, -1) {
  if (m < 2 || m > kMaxAlternatives) throw Error("planner preference: bad m");
  const std::size_t count = (std::size_t{1} << m) - 1;
  if (order_.size() != count)
    throw Error("planner preference must list all " + std::to_string(count) + " nonempty subsets");
  for (std::size_t r = 0; r < order_.size(); ++r) {
    const AltSet s = order_[r];
    if (s.empty() || !s.subset_of(AltSet::full(m)))
      throw Error("planner preference lists an empty or out-of-range subset");
    if (rank_[s.bits()] != -1) throw Error("planner preference lists a subset twice");
    rank_[s.bits()] = static_cast<int>(r);
  }
}

Tally tally_points(const Profile& profile) {
  const auto m = static_cast<std::size_t>(profile.alternatives());
  Tally t{std::vector<int>(m, 0), std::vector<int>(m, 0)};
  for (const auto& p : profile.entries()) {
    ++t.plur[static_cast<std::size_t>(p.top())];
    for (int k = 0; k < p.threshold(); ++k) ++t.acc[static_cast<std::size_t>(p.ranking()[static_cast<std::size_t>(k)])];
  }
  return t;
}

SupportSets support_sets(const Profile& profile) {
  SupportSets s;
  for (const auto& p : profile.entries()) {
    s.plur = s.plur.with(p.top());
    s.acc = s.acc | p.acceptable_set();
  }
  return s;
}

AltSet unanimously_accepted(const Profile& profile) {
  AltSet u = AltSet::full(profile.alternatives());
  for (const auto& p : profile.entries()) u = u & p.acceptable_set();
  return u;
}

}  // namespace anchorvote
