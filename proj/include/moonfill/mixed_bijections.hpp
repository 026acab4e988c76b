#pragma once

#include <optional>
#include <span>
#include <vector>

#include "moonfill/filling.hpp"

namespace moonfill {

/// Rows meeting the column of the first row's 1 (upper part) and the rest.
struct UpperLowerSplit {
  int pivot = 1;
  std::vector<int> upper;
  std::vector<int> lower;
};

/// nullopt when the first row is empty.
std::optional<UpperLowerSplit> pivot_split(const Filling& filling);

/// Moves the first-row pair (alpha({1}), alpha of the complement) onto
/// (se, ne). Identity when the first row is empty; rows outside the upper
/// part are untouched.
Filling first_row_transport(const Filling& filling);
Filling first_row_transport_inverse(const Filling& filling);

/// The pivot column used by first_row_transport, read off its image.
/// Throws NoPivotFound for a filling outside the image.
int recover_pivot(const Filling& image);

/// first_row_transport applied to rows r..n.
Filling row_suffix_transport(const Filling& filling, int r);
Filling row_suffix_transport_inverse(const Filling& filling, int r);

/// Sends (alpha(S), alpha(complement S)) to (se, ne); applies the row
/// suffix maps for the rows of S from the largest down.
Filling top_mixed_transport(const Filling& filling, const RowSubset& rows);
Filling top_mixed_transport_inverse(const Filling& filling, const RowSubset& rows);

/// Reverses the first column's gap composition under the left-to-right
/// order. Involution on rectangular shapes; throws NotARectangle.
Filling rectangle_reversal(const Filling& filling);

/// Rectangles of the rows meeting column 1, one per run of equal column
/// lengths (`blocks`), and the overlaps of consecutive ones (`overlaps`),
/// in host coordinates.
struct RectangleChain {
  int first_row = 1;
  int last_row = 1;
  std::vector<int> run_ends;
  std::vector<Rectangle> blocks;
  std::vector<Rectangle> overlaps;
};

RectangleChain rectangle_chain(const MoonPolyomino& shape);

/// Moves (gamma({1}), gamma of the complement) onto (se, ne).
Filling first_column_transport(const Filling& filling);
Filling first_column_transport_inverse(const Filling& filling);

/// first_column_transport applied to columns c..m.
Filling column_suffix_transport(const Filling& filling, int c);
Filling column_suffix_transport_inverse(const Filling& filling, int c);

/// Sends (gamma(T), gamma(complement T)) to (se, ne).
Filling left_mixed_transport(const Filling& filling, const ColSubset& cols);
Filling left_mixed_transport_inverse(const Filling& filling, const ColSubset& cols);

/// Sends (beta(S), beta(complement S)) to (se, ne) by conjugating with the
/// horizontal reflection.
Filling bottom_mixed_transport(const Filling& filling, const RowSubset& rows);
Filling bottom_mixed_transport_inverse(const Filling& filling, const RowSubset& rows);

/// Sends (delta(T), delta(complement T)) to (se, ne) by conjugating with
/// the vertical reflection.
Filling right_mixed_transport(const Filling& filling, const ColSubset& cols);
Filling right_mixed_transport_inverse(const Filling& filling, const ColSubset& cols);

/// Carries a filling along the row moves that top-align its shape,
/// preserving (se, ne) and column sums.
Filling top_align_transport(const Filling& filling);
/// Undoes top_align_transport for fillings of `source`'s top-aligned shape.
/// Throws ShapeMismatch when `filling` is not on that shape.
Filling top_align_transport_inverse(const Filling& filling, const MoonPolyomino& source);

/// Carries a filling to `target`, a row permutation of its shape, keeping
/// (alpha(S), alpha(complement S)). Throws ShapeMismatch.
Filling row_permutation_transport(const Filling& filling, const RowSubset& rows,
                                  const MoonPolyomino& target);

}  // namespace moonfill
