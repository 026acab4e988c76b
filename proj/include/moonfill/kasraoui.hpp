#pragma once

#include <optional>
#include <span>
#include <utility>
#include <vector>

#include "moonfill/filling.hpp"

namespace moonfill {

/// Colored cells of a filled shape, as a per-row bitmap.
class Coloring {
 public:
  explicit Coloring(const MoonPolyomino& shape);

  bool colored(int row, int col) const { return cells_[row - 1][col - 1] != 0; }
  void mark(int row, int col) { cells_[row - 1][col - 1] = 1; }
  std::vector<Cell> cells() const;

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<std::vector<char>> cells_;
};

/// Colors every cell of an empty row; for a left-part column, the cells of
/// its rectangle right of each of its 1s; for a right-part column, the
/// cells of its rectangle left of each of its 1s.
Coloring coloring(const Filling& filling);

/// Uncolored empty cells above (auc) or below (buc) a 1-cell in its column;
/// 0 for an empty cell. Throws CellOutsideShape.
int auc(const Cell& cell, const Filling& filling,
        const std::optional<Coloring>& colors = std::nullopt);
int buc(const Cell& cell, const Filling& filling,
        const std::optional<Coloring>& colors = std::nullopt);

/// One gap composition per column. A column without 1s carries (0).
using CompositionSeq = std::vector<std::vector<int>>;

CompositionSeq to_compositions(const Filling& filling);

/// Places 1s column by column in precedence order. Throws
/// MalformedComposition on a wrong length or sum, InfeasibleSums on bad e/s.
Filling from_compositions(const MoonPolyomino& shape, std::span<const int> e,
                          std::span<const int> s, const CompositionSeq& cs);

/// (ne, se) read off a composition sequence.
std::pair<int, int> ne_se_from_compositions(const MoonPolyomino& shape, std::span<const int> e,
                                            std::span<const int> s, const CompositionSeq& cs);

namespace detail {

/// A column order with a left/right flag per column, generalizing the
/// precedence order (the rectangle reversal uses plain left-to-right order
/// with every column in the left part).
struct ColumnOrder {
  std::vector<int> order;
  std::vector<char> in_left;  // indexed by column - 1
};

ColumnOrder precedence(const MoonPolyomino& shape);

std::vector<int> available_cells(const MoonPolyomino& shape, std::span<const int> e,
                                 std::span<const int> s, const ColumnOrder& order);

/// A cell is colored when its row is empty or the row's 1 sits in an
/// earlier column of `order`.
CompositionSeq to_compositions(const Filling& filling, const ColumnOrder& order);
Filling from_compositions(const MoonPolyomino& shape, std::span<const int> e,
                          std::span<const int> s, const CompositionSeq& cs,
                          const ColumnOrder& order);
std::pair<int, int> ne_se_from_compositions(std::span<const int> h, std::span<const int> s,
                                            const CompositionSeq& cs, const ColumnOrder& order);

}  // namespace detail

}  // namespace moonfill
