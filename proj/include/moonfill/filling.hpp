#pragma once

#include <compare>
#include <functional>
#include <initializer_list>
#include <span>
#include <vector>

#include "moonfill/polyomino.hpp"
#include "moonfill/pq_poly.hpp"

namespace moonfill {

struct Cell {
  int row = 1;
  int col = 1;
  friend auto operator<=>(const Cell&, const Cell&) = default;
};

/// A 01-filling with at most one 1 per row, stored as the column of each
/// row's 1 (0 for an empty row).
class Filling {
 public:
  /// Throws Error{InvalidFilling} on a size mismatch and
  /// Error{CellOutsideShape} when a 1 falls outside its row.
  Filling(MoonPolyomino shape, std::vector<int> row_cols);

  /// The empty filling.
  explicit Filling(MoonPolyomino shape);

  /// Throws Error{InvalidFilling} when two cells share a row.
  static Filling from_cells(MoonPolyomino shape, std::span<const Cell> cells);

  const MoonPolyomino& shape() const { return shape_; }
  int rows() const { return shape_.rows(); }
  int cols() const { return shape_.cols(); }

  /// Column of row i's 1, or 0.
  int column_of_row(int i) const { return row_cols_[i - 1]; }
  bool is_one(int row, int col) const {
    return row >= 1 && row <= rows() && col != 0 && row_cols_[row - 1] == col;
  }
  std::span<const int> row_columns() const { return row_cols_; }

  /// 1-cells, top to bottom.
  std::vector<Cell> ones() const;
  std::vector<int> row_sums() const;
  std::vector<int> col_sums() const;

  friend bool operator==(const Filling& a, const Filling& b) {
    return a.shape_ == b.shape_ && a.row_cols_ == b.row_cols_;
  }
  /// Orders fillings of one shape; compares the row-column vectors only.
  friend auto operator<=>(const Filling& a, const Filling& b) {
    return a.row_cols_ <=> b.row_cols_;
  }

 private:
  MoonPolyomino shape_;
  std::vector<int> row_cols_;
};

/// A set of 1-based indices drawn from [1, universe]. Construction sorts and
/// deduplicates; an index outside the universe raises IndexOutOfRange.
template <typename Tag>
class IndexSubset {
 public:
  IndexSubset(std::span<const int> indices, int universe);
  IndexSubset(std::initializer_list<int> indices, int universe)
      : IndexSubset(std::span<const int>(indices.begin(), indices.size()), universe) {}

  /// Bit k-1 of mask selects index k.
  static IndexSubset from_mask(unsigned long long mask, int universe);
  static IndexSubset all(int universe);

  int universe() const { return static_cast<int>(mask_.size()); }
  bool contains(int i) const { return i >= 1 && i <= universe() && mask_[i - 1]; }
  std::vector<int> members() const;
  IndexSubset complement() const;

  friend bool operator==(const IndexSubset&, const IndexSubset&) = default;

 private:
  IndexSubset() = default;
  std::vector<char> mask_;
};

struct RowTag;
struct ColTag;
using RowSubset = IndexSubset<RowTag>;
using ColSubset = IndexSubset<ColTag>;

extern template class IndexSubset<RowTag>;
extern template class IndexSubset<ColTag>;

/// Two 1-cells whose bounding rectangle lies in the shape. `upper` is the
/// cell in the smaller row; the chain is NE when it lies to the right of
/// `lower`, SE when to the left.
struct Chain {
  Cell upper;
  Cell lower;
  bool northeast = false;

  Cell left() const { return northeast ? lower : upper; }
  Cell right() const { return northeast ? upper : lower; }
};

std::vector<Chain> chains(const Filling& filling);
int ne_count(const Filling& filling);
int se_count(const Filling& filling);

/// NE chains whose upper cell lies in a row of S plus SE chains whose upper
/// cell lies in a row of the complement.
int top_mixed(const Filling& filling, const RowSubset& rows);
/// Same, anchored at the lower cell.
int bottom_mixed(const Filling& filling, const RowSubset& rows);
/// Anchored at the left cell's column.
int left_mixed(const Filling& filling, const ColSubset& cols);
/// Anchored at the right cell's column.
int right_mixed(const Filling& filling, const ColSubset& cols);

enum class MixedStatistic { top, bottom, left, right };

/// (lambda(A), lambda(complement A)) for the chosen statistic; A holds row
/// indices for top/bottom and column indices for left/right.
std::pair<int, int> mixed_pair(const Filling& filling, MixedStatistic statistic,
                               std::span<const int> subset);

using FillingVisitor = std::function<void(const Filling&)>;

/// Visits F(shape, e, s) rows top to bottom, ascending column per row.
/// Throws InfeasibleSums on malformed e/s; an empty class visits nothing.
void for_each_filling(const MoonPolyomino& shape, std::span<const int> e, std::span<const int> s,
                      const FillingVisitor& visit);
/// The share of the enumeration whose first nonempty row takes its k-th
/// feasible column with k % parts == part. The shares partition F(shape, e, s).
void for_each_filling_part(const MoonPolyomino& shape, std::span<const int> e,
                           std::span<const int> s, int part, int parts,
                           const FillingVisitor& visit);
std::vector<Filling> enumerate_fillings(const MoonPolyomino& shape, std::span<const int> e,
                                        std::span<const int> s);
/// Number of fillings, without materializing them.
long long count_fillings(const MoonPolyomino& shape, std::span<const int> e,
                         std::span<const int> s);

/// Thread count from MOONFILL_THREADS, default 1.
int default_threads();

/// Sum over F(shape, e, s) of p^{lambda(A)} q^{lambda(complement A)}.
BivarPoly distribution(const MoonPolyomino& shape, std::span<const int> e,
                       std::span<const int> s, MixedStatistic statistic,
                       std::span<const int> subset, int threads = default_threads());
/// Sum of p^{se} q^{ne}.
BivarPoly se_ne_distribution(const MoonPolyomino& shape, std::span<const int> e,
                             std::span<const int> s, int threads = default_threads());

/// The part of `filling` inside `region` (a row whose 1 lies outside the
/// region is empty there).
Filling restrict_filling(const Filling& filling, const Region& region);
/// Writes `local` back over `region`. A row that is empty in `local` keeps a
/// host 1 lying outside the region.
Filling embed_filling(const Filling& host, const Region& region, const Filling& local);

Filling reflect_filling_rows(const Filling& filling);
Filling reflect_filling_columns(const Filling& filling);

}  // namespace moonfill
