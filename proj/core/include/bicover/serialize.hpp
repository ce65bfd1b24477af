#pragma once

#include <optional>
#include <set>
#include <string>
#include <string_view>

#include "bicover/analysis.hpp"

namespace bicover {

// JSON encodings:
//   field    {"kind":"prime","p":7} | {"kind":"extension","p":3,"r":2,"modulus":[1,0,1]}
//            | {"kind":"rational"} | {"kind":"tower","adjoined":["-1/1","2/1"]}
//   element  prime: integer; extension/tower: coefficient array (little-endian
//            in basis order); rationals: "num/den" strings
//   matrix   {"order":4,"rows":[[0,1,1,-1],...]}; text form: n lines of n
//            space-separated entries
//   cover    {"n":8,"graphs":[{"A":[...],"B":[...]},...]}, graphs sorted
//   circuit  {"field":...,"n":...,"gates":[{"forms":[{"coeffs":[...],"const":...},...]},...]}

std::string field_to_json(const Field& f);
FieldPtr field_from_json(std::string_view text);

std::string elem_to_json(const FieldElem& e);
FieldElem elem_from_json(const FieldPtr& f, std::string_view text);

std::string matrix_to_json(const SignMatrix& m);
SignMatrix matrix_from_json(std::string_view text);
std::string matrix_to_text(const SignMatrix& m);
SignMatrix matrix_from_text(std::string_view text);

std::string verdict_to_json(const GoodVerdict& v);

std::string cover_to_json(const Cover& c);
Cover cover_from_json(std::string_view text);

std::string report_to_json(const MultiplicityReport& r, bool full);

std::string circuit_to_json(const Circuit& c);
Circuit circuit_from_json(std::string_view text);

std::string substitution_to_json(const HomSubstitution& s);
HomSubstitution substitution_from_json(std::string_view text);

std::string diagnostics_to_json(const Gf2Diagnostics& d);

std::string bounds_to_json(const BoundsEntry& e);

std::string equidistant_to_json(const FieldPtr& f, const std::optional<EquidistantSolution>& sol);

// Search checkpoints: {"task":...,"params":...,"completed_prefixes":[...],
// "best": counter-or-null}.
struct CheckpointState {
  std::string task;
  std::string params_json;
  std::set<std::uint64_t> completed;
  std::optional<std::uint64_t> best;
};

std::string checkpoint_to_json(const CheckpointState& s);
CheckpointState checkpoint_from_json(std::string_view text);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view content);

}  // namespace bicover
