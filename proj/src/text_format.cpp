#include "anchorvote/text_format.hpp"

#include <cctype>
#include <charconv>
#include <fstream>
#include <optional>
#include <sstream>
#include <vector>

namespace anchorvote {

namespace {

struct Line {
  int number;
  std::vector<std::string> tokens;
};

// Splits into non-empty lines of tokens. '|' is always its own token.
std::vector<Line> tokenize(std::string_view text) {
  std::vector<Line> lines;
  int number = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto eol = text.find('\n', pos);
    if (eol == std::string_view::npos) eol = text.size();
    ++number;
    auto raw = text.substr(pos, eol - pos);
    if (const auto hash = raw.find('#'); hash != std::string_view::npos) raw = raw.substr(0, hash);
    Line line{number, {}};
    std::string cur;
    auto flush = [&] {
      if (!cur.empty()) line.tokens.push_back(std::move(cur));
      cur.clear();
    };
    for (char c : raw) {
      if (std::isspace(static_cast<unsigned char>(c))) {
        flush();
      } else if (c == '|') {
        flush();
        line.tokens.emplace_back("|");
      } else {
        cur += c;
      }
    }
    flush();
    if (!line.tokens.empty()) lines.push_back(std::move(line));
    pos = eol + 1;
  }
  return lines;
}

int parse_int(const std::string& s, int line, const char* what) {
  int v = 0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc{} || ptr != end) throw ParseError(line, std::string("expected ") + what + ", got '" + s + "'");
  return v;
}

// Leading "<id>:" of a voter line; accepts "1:" or "1 :".
int take_voter_id(Line& line, std::size_t& cursor) {
  std::string head = line.tokens[0];
  cursor = 1;
  if (head.back() == ':') {
    head.pop_back();
  } else if (line.tokens.size() > 1 && line.tokens[1] == ":") {
    cursor = 2;
  } else {
    throw ParseError(line.number, "expected '<id>:' at start of voter line");
  }
  return parse_int(head, line.number, "voter id");
}

struct Header {
  std::optional<Alphabet> alphabet;
  int voters = -1;
  int voters_line = 0;
  std::size_t body_start = 0;
};

Header read_header(const std::vector<Line>& lines) {
  Header h;
  std::size_t i = 0;
  for (; i < lines.size(); ++i) {
    const auto& l = lines[i];
    if (l.tokens[0] == "alternatives:") {
      if (h.alphabet) throw ParseError(l.number, "repeated 'alternatives:' header");
      try {
        h.alphabet.emplace(std::vector<std::string>(l.tokens.begin() + 1, l.tokens.end()));
      } catch (const Error& e) {
        throw ParseError(l.number, e.what());
      }
    } else if (l.tokens[0] == "voters:") {
      if (l.tokens.size() != 2) throw ParseError(l.number, "expected 'voters: <n>'");
      h.voters = parse_int(l.tokens[1], l.number, "voter count");
      h.voters_line = l.number;
      if (h.voters < 1) throw ParseError(l.number, "voter count must be positive");
    } else {
      break;
    }
  }
  const int where = i < lines.size() ? lines[i].number : (lines.empty() ? 1 : lines.back().number);
  if (!h.alphabet) throw ParseError(where, "missing 'alternatives:' header");
  if (h.voters < 0) throw ParseError(where, "missing 'voters:' header");
  h.body_start = i;
  return h;
}

template <class Entry, class ParseBody>
std::vector<Entry> read_voters(const std::vector<Line>& lines, const Header& h, ParseBody parse_body) {
  std::vector<std::optional<Entry>> slots(static_cast<std::size_t>(h.voters));
  int seen = 0;
  int last_line = h.voters_line;
  for (std::size_t i = h.body_start; i < lines.size(); ++i) {
    Line l = lines[i];
    last_line = l.number;
    std::size_t cursor = 0;
    const int id = take_voter_id(l, cursor);
    if (id < 1 || id > h.voters)
      throw ParseError(l.number, "voter id " + std::to_string(id) + " outside 1.." + std::to_string(h.voters) +
                                     " (voter count mismatch)");
    auto& slot = slots[static_cast<std::size_t>(id - 1)];
    if (slot) throw ParseError(l.number, "voter " + std::to_string(id) + " listed twice");
    slot.emplace(parse_body(l, cursor));
    ++seen;
  }
  if (seen != h.voters)
    throw ParseError(last_line, "voter count mismatch: header says " + std::to_string(h.voters) + ", found " +
                                    std::to_string(seen));
  std::vector<Entry> out;
  out.reserve(slots.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

std::vector<int> read_labels(const Line& l, std::size_t begin, std::size_t end, const Alphabet& a) {
  std::vector<int> seq;
  std::uint32_t seen = 0;
  for (std::size_t k = begin; k < end; ++k) {
    const auto idx = a.index_of(l.tokens[k]);
    if (!idx) throw ParseError(l.number, "unknown alternative '" + l.tokens[k] + "'");
    if ((seen >> *idx) & 1u) throw ParseError(l.number, "duplicate alternative '" + l.tokens[k] + "'");
    seen |= 1u << *idx;
    seq.push_back(*idx);
  }
  if (static_cast<int>(seq.size()) != a.size())
    throw ParseError(l.number, "expected all " + std::to_string(a.size()) + " alternatives, got " +
                                   std::to_string(seq.size()));
  return seq;
}

std::string header(const Alphabet& a, int n) {
  std::string out = "alternatives:";
  for (const auto& l : a.labels()) out += " " + l;
  out += "\nvoters: " + std::to_string(n) + "\n";
  return out;
}

}  // namespace

ProfileFile parse_profile(std::string_view text) {
  const auto lines = tokenize(text);
  const Header h = read_header(lines);
  const Alphabet& a = *h.alphabet;
  auto voters = read_voters<PreferenceApproval>(lines, h, [&](const Line& l, std::size_t cursor) {
    std::size_t bar = 0;
    int bars = 0;
    for (std::size_t k = cursor; k < l.tokens.size(); ++k)
      if (l.tokens[k] == "|") {
        bar = k;
        ++bars;
      }
    if (bars == 0) throw ParseError(l.number, "missing '|' after the last acceptable alternative");
    if (bars > 1) throw ParseError(l.number, "more than one '|'");
    Line stripped{l.number, {}};
    for (std::size_t k = cursor; k < l.tokens.size(); ++k)
      if (k != bar) stripped.tokens.push_back(l.tokens[k]);
    const int threshold = static_cast<int>(bar - cursor);
    auto ranking = read_labels(stripped, 0, stripped.tokens.size(), a);
    if (threshold < 1) throw ParseError(l.number, "at least the top alternative must be acceptable");
    return PreferenceApproval(std::move(ranking), threshold);
  });
  return {a, Profile(std::move(voters))};
}

std::string format_voter(const Alphabet& a, const PreferenceApproval& p) {
  std::string out;
  for (int k = 0; k < p.alternatives(); ++k) {
    if (k > 0) out += ' ';
    out += a.label(p.ranking()[static_cast<std::size_t>(k)]);
    if (k + 1 == p.threshold()) out += " |";
  }
  return out;
}

std::string format_order(const Alphabet& a, const PresentationOrder& order) {
  std::string out;
  for (int k = 0; k < order.size(); ++k) {
    if (k > 0) out += ' ';
    out += a.label(order[k]);
  }
  return out;
}

std::string format_profile(const Alphabet& a, const Profile& profile) {
  std::string out = header(a, profile.voters());
  for (int i = 0; i < profile.voters(); ++i)
    out += std::to_string(i + 1) + ": " + format_voter(a, profile[i]) + "\n";
  return out;
}

OrderFile parse_order_vector(std::string_view text) {
  const auto lines = tokenize(text);
  const Header h = read_header(lines);
  const Alphabet& a = *h.alphabet;
  auto orders = read_voters<PresentationOrder>(lines, h, [&](const Line& l, std::size_t cursor) {
    for (std::size_t k = cursor; k < l.tokens.size(); ++k)
      if (l.tokens[k] == "|") throw ParseError(l.number, "order lines take no '|'");
    return PresentationOrder(read_labels(l, cursor, l.tokens.size(), a));
  });
  return {a, std::move(orders)};
}

std::string format_order_vector(const Alphabet& a, const OrderVector& orders) {
  std::string out = header(a, static_cast<int>(orders.size()));
  for (std::size_t i = 0; i < orders.size(); ++i)
    out += std::to_string(i + 1) + ": " + format_order(a, orders[i]) + "\n";
  return out;
}

PlannerPreference parse_planner_preference(std::string_view text, const Alphabet& a) {
  const auto lines = tokenize(text);
  std::vector<AltSet> ranking;
  std::vector<bool> seen(std::size_t{1} << a.size(), false);
  for (const auto& l : lines) {
    if (l.tokens.size() != 1) throw ParseError(l.number, "expected one comma-separated subset per line");
    AltSet s;
    try {
      s = a.parse_set(l.tokens[0]);
    } catch (const Error& e) {
      throw ParseError(l.number, e.what());
    }
    if (seen[s.bits()]) throw ParseError(l.number, "subset " + a.braces(s) + " listed twice");
    seen[s.bits()] = true;
    ranking.push_back(s);
  }
  const std::size_t expected = (std::size_t{1} << a.size()) - 1;
  if (ranking.size() != expected)
    throw ParseError(lines.empty() ? 1 : lines.back().number,
                     "planner preference lists " + std::to_string(ranking.size()) + " subsets, expected " +
                         std::to_string(expected));
  return PlannerPreference(a.size(), std::move(ranking));
}

std::string format_planner_preference(const Alphabet& a, const PlannerPreference& pref) {
  std::string out;
  for (AltSet s : pref.ranking()) out += a.join(s) + "\n";
  return out;
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out << contents;
}

}  // namespace anchorvote
