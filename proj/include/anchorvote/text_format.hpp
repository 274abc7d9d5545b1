#pragma once

// Line-oriented text formats for profiles, order vectors and planner
// preferences. '#' starts a comment; tokens are whitespace-separated.
//
//   alternatives: a b c
//   voters: 2
//   1: a b | c        ranking a > b > c, first two acceptable
//   2: c a b |        tolerant
//
// Order-vector files share the header and list "<id>: <labels>" without a bar.
// Preference files hold one comma-joined subset per line, best first.

#include <string>
#include <string_view>

#include "anchorvote/core.hpp"

namespace anchorvote {

struct ProfileFile {
  Alphabet alphabet;
  Profile profile;
};

struct OrderFile {
  Alphabet alphabet;
  OrderVector orders;
};

ProfileFile parse_profile(std::string_view text);
std::string format_profile(const Alphabet& alphabet, const Profile& profile);

OrderFile parse_order_vector(std::string_view text);
std::string format_order_vector(const Alphabet& alphabet, const OrderVector& orders);

PlannerPreference parse_planner_preference(std::string_view text, const Alphabet& alphabet);
std::string format_planner_preference(const Alphabet& alphabet, const PlannerPreference& pref);

/// "a b | c" style one-line rendering, used in reports.
std::string format_voter(const Alphabet& alphabet, const PreferenceApproval& p);
std::string format_order(const Alphabet& alphabet, const PresentationOrder& order);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

}  // namespace anchorvote
