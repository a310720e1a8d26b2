#pragma once

// Fixed block data for the sporadic simple groups and the exceptional
// covering groups: the single-orbit blocks, their Brauer character
// degrees, and what is known about the lifts. The rows are compiled in
// and exported verbatim; nothing here is recomputed.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "blockcore/partition.hpp"

namespace blockcore {

enum class LiftProfile {
  UniquePRational,
  ThreeLiftsTwoConjugate,
  TwoLifts,
  Unspecified,
};

inline const char* lift_profile_name(LiftProfile lp) {
  switch (lp) {
    case LiftProfile::UniquePRational: return "unique-p-rational";
    case LiftProfile::ThreeLiftsTwoConjugate: return "three-lifts-two-conjugate";
    case LiftProfile::TwoLifts: return "two-lifts";
    case LiftProfile::Unspecified: return "unspecified";
  }
  return "?";
}

inline LiftProfile lift_profile_from_name(std::string_view name) {
  if (name == "unique-p-rational") return LiftProfile::UniquePRational;
  if (name == "three-lifts-two-conjugate") return LiftProfile::ThreeLiftsTwoConjugate;
  if (name == "two-lifts") return LiftProfile::TwoLifts;
  if (name == "unspecified") return LiftProfile::Unspecified;
  throw std::invalid_argument("unknown lift profile: " + std::string(name));
}

struct TableRow {
  std::string group_label;
  int p = 2;
  std::vector<long long> ibr_degrees;
  int defect = 1;
  LiftProfile lift_profile = LiftProfile::Unspecified;
  int multiplicity = 1;
  std::string note;  // why the profile is set or left unspecified; not serialized
};

// The twelve single-orbit blocks in covering groups of sporadic simple
// groups. Every lift profile here is left unspecified: for a p = 2 row
// either a unique p-rational lift or exactly two lifts is possible, for
// a p = 3 row either a unique p-rational lift or three lifts with two of
// them algebraically conjugate, and p alone does not decide.
inline const std::vector<TableRow>& sporadic_rows() {
  static const std::vector<TableRow> rows = [] {
    const std::string note = "profile not determined by p alone";
    std::vector<TableRow> r;
    r.push_back({"J_1", 2, {76}, 1, LiftProfile::Unspecified, 1, note});
    r.push_back({"2.J_2", 3, {126, 126}, 1, LiftProfile::Unspecified, 1, note});
    r.push_back({"M_23", 3, {231}, 1, LiftProfile::Unspecified, 1, note});
    r.push_back({"2.HS", 3, {924, 924}, 1, LiftProfile::Unspecified, 1, note});
    r.push_back({"McL", 2, {3520}, 1, LiftProfile::Unspecified, 1, note});
    r.push_back({"3.McL", 2, {6336}, 1, LiftProfile::Unspecified, 2, note});
    r.push_back({"Co_3", 2, {129536}, 1, LiftProfile::Unspecified, 1, note});
    r.push_back({"Fi_22", 2, {2555904}, 1, LiftProfile::Unspecified, 1, note});
    r.push_back({"Ly", 3, {18395586}, 1, LiftProfile::Unspecified, 1, note});
    r.push_back({"Fi_23", 2, {73531392}, 1, LiftProfile::Unspecified, 1, note});
    r.push_back({"2.Co_1", 3, {59153976}, 1, LiftProfile::Unspecified, 1, note});
    r.push_back({"J_4", 3, {786127419}, 1, LiftProfile::Unspecified, 1, note});
    return r;
  }();
  return rows;
}

// The two single-orbit blocks in exceptional covering groups, both in
// 2.G_2(4) at p = 3; each Brauer character lifts to a unique 3-rational
// character.
inline const std::vector<TableRow>& exceptional_rows() {
  static const std::vector<TableRow> rows = {
      {"2.G_2(4)", 3, {1800, 1800}, 1, LiftProfile::UniquePRational, 1,
       "unique 3-rational lift"},
      {"2.G_2(4)", 3, {3744, 3744}, 1, LiftProfile::UniquePRational, 1,
       "unique 3-rational lift"},
  };
  return rows;
}

inline std::vector<TableRow> lookup_rows(const std::vector<TableRow>& rows,
                                         std::string_view group_label, int p) {
  std::vector<TableRow> out;
  for (const TableRow& row : rows)
    if (row.group_label == group_label && row.p == p) out.push_back(row);
  return out;
}

// Canonical record line:
// group TAB p TAB degrees (comma separated) TAB defect TAB profile TAB multiplicity
inline std::string to_record_line(const TableRow& row) {
  std::string line = row.group_label;
  line += '\t';
  line += std::to_string(row.p);
  line += '\t';
  for (std::size_t i = 0; i < row.ibr_degrees.size(); ++i) {
    if (i) line += ',';
    line += std::to_string(row.ibr_degrees[i]);
  }
  line += '\t';
  line += std::to_string(row.defect);
  line += '\t';
  line += lift_profile_name(row.lift_profile);
  line += '\t';
  line += std::to_string(row.multiplicity);
  return line;
}

inline TableRow parse_record_line(std::string_view line) {
  std::vector<std::string_view> fields;
  std::size_t pos = 0;
  for (;;) {
    const std::size_t tab = line.find('\t', pos);
    fields.push_back(tab == std::string_view::npos ? line.substr(pos)
                                                   : line.substr(pos, tab - pos));
    if (tab == std::string_view::npos) break;
    pos = tab + 1;
  }
  detail::require(fields.size() == 6, "table record: expected 6 fields");
  auto parse_ll = [](std::string_view s) -> long long {
    detail::require(!s.empty(), "table record: empty number");
    long long value = 0;
    for (char c : s) {
      detail::require(c >= '0' && c <= '9', "table record: not a number");
      value = value * 10 + (c - '0');
    }
    return value;
  };
  TableRow row;
  row.group_label = std::string(fields[0]);
  row.p = static_cast<int>(parse_ll(fields[1]));
  std::string_view degrees = fields[2];
  std::size_t dpos = 0;
  for (;;) {
    const std::size_t comma = degrees.find(',', dpos);
    row.ibr_degrees.push_back(parse_ll(
        comma == std::string_view::npos ? degrees.substr(dpos)
                                        : degrees.substr(dpos, comma - dpos)));
    if (comma == std::string_view::npos) break;
    dpos = comma + 1;
  }
  row.defect = static_cast<int>(parse_ll(fields[3]));
  row.lift_profile = lift_profile_from_name(fields[4]);
  row.multiplicity = static_cast<int>(parse_ll(fields[5]));
  return row;
}

}  // namespace blockcore
