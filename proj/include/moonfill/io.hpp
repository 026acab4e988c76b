#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "moonfill/classical.hpp"
#include "moonfill/filling.hpp"
#include "moonfill/kasraoui.hpp"
#include "moonfill/pq_poly.hpp"

namespace moonfill {

// Text formats. Blank lines and anything after '#' are ignored unless
// stated otherwise; parse errors throw ParseError carrying the line number.

/// One `left right` line per row, top to bottom.
MoonPolyomino parse_shape(std::string_view text);
std::string format_shape(const MoonPolyomino& shape);

/// One `row col` line per 1-cell.
Filling parse_filling(std::string_view text, const MoonPolyomino& shape);
std::string format_filling(const Filling& filling);

/// Gap compositions with the row sums in a header:
///   # e 1 1 0 1
///   1: 1 1
///   2: 0
/// Column i's line lists c^(i); the column sum is its length minus one.
struct CompositionFile {
  std::vector<int> e;
  CompositionSeq compositions;
};

CompositionFile parse_compositions(std::string_view text);
std::string format_compositions(std::span<const int> e, const CompositionSeq& compositions);
std::vector<int> column_sums_of(const CompositionSeq& compositions);

/// Whitespace-separated letters.
Word parse_word(std::string_view text);
std::string format_word(std::span<const int> word);

/// One `l r` line per arc.
Matching parse_matching(std::string_view text);
std::string format_matching(const Matching& matching);

/// Comma or whitespace separated integers.
std::vector<int> parse_int_list(std::string_view text);
std::string format_int_list(std::span<const int> values, char sep = ' ');

/// {"terms":[{"coeff":"3","i":1,"j":2},...]} with terms sorted by (i, j).
/// Coefficients are decimal strings so big values stay exact.
std::string poly_to_json(const BivarPoly& poly);

/// 64-bit FNV-1a, rendered as 16 hex digits.
std::uint64_t fnv1a(std::string_view bytes);
std::string digest(std::string_view bytes);

std::string read_file(const std::string& path);

}  // namespace moonfill
