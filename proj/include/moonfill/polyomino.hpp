#pragma once

#include <compare>
#include <memory>
#include <optional>
#include <span>
#include <vector>

namespace moonfill {

// All row and column indices are 1-based. Rows run top to bottom, columns
// left to right.

struct RowInterval {
  int left = 1;
  int right = 1;

  int length() const { return right - left + 1; }
  bool contains(int col) const { return left <= col && col <= right; }
  bool contains(const RowInterval& other) const {
    return left <= other.left && other.right <= right;
  }
  friend auto operator<=>(const RowInterval&, const RowInterval&) = default;
};

/// Rows covered by one column.
struct ColumnSpan {
  int top = 1;
  int bottom = 1;

  int length() const { return bottom - top + 1; }
  bool contains(int row) const { return top <= row && row <= bottom; }
  bool contains(const ColumnSpan& other) const {
    return top <= other.top && other.bottom <= bottom;
  }
  friend auto operator<=>(const ColumnSpan&, const ColumnSpan&) = default;
};

struct Rectangle {
  int top = 1;
  int bottom = 1;
  int left = 1;
  int right = 1;

  int height() const { return bottom - top + 1; }
  int width() const { return right - left + 1; }
  bool contains(int row, int col) const {
    return top <= row && row <= bottom && left <= col && col <= right;
  }
  friend auto operator<=>(const Rectangle&, const Rectangle&) = default;
};

/// A convex, intersection-free polyomino stored as one interval per row.
/// Immutable; copies share the underlying storage.
class MoonPolyomino {
 public:
  int rows() const { return static_cast<int>(data_->rows.size()); }
  int cols() const { return static_cast<int>(data_->columns.size()); }

  const RowInterval& row(int i) const { return data_->rows[i - 1]; }
  const ColumnSpan& column(int j) const { return data_->columns[j - 1]; }
  int column_length(int j) const { return column(j).length(); }

  std::span<const RowInterval> row_intervals() const { return data_->rows; }
  std::span<const ColumnSpan> column_spans() const { return data_->columns; }

  bool contains(int row, int col) const;
  bool contains(const Rectangle& rect) const;
  int cell_count() const;

  bool is_rectangle() const;
  bool is_left_aligned() const;
  bool is_top_aligned() const;

  friend bool operator==(const MoonPolyomino& a, const MoonPolyomino& b) {
    return a.data_ == b.data_ || a.data_->rows == b.data_->rows;
  }

 private:
  struct Data {
    std::vector<RowInterval> rows;
    std::vector<ColumnSpan> columns;
  };
  explicit MoonPolyomino(std::shared_ptr<const Data> data) : data_(std::move(data)) {}
  std::shared_ptr<const Data> data_;

  friend MoonPolyomino validate_moon(std::vector<RowInterval> rows);
};

/// Throws Error{EmptyShape | InvalidInterval | NotComparable |
/// NotColumnConvex | MissingColumn} naming the first offending rows/column.
MoonPolyomino validate_moon(std::vector<RowInterval> rows);

/// Builds a shape from per-column row spans; rows must come out contiguous.
MoonPolyomino moon_from_columns(std::span<const ColumnSpan> columns);

std::optional<MoonPolyomino> try_moon(std::vector<RowInterval> rows);

/// The unimodality pivot: columns 1..pivot-1 form the left part, the rest
/// the right part. |C_1| <= ... <= |C_{pivot-1}| < |C_pivot| >= ... >= |C_m|.
struct ColumnClassification {
  int pivot = 1;
  std::vector<int> left_part;
  std::vector<int> right_part;

  bool in_left(int col) const { return col < pivot; }
};

ColumnClassification classify_columns(const MoonPolyomino& shape);

/// Strict total order on columns: shorter first; at equal length left part
/// before right part; within the left part leftmost first; within the right
/// part rightmost first.
bool column_precedes(const MoonPolyomino& shape, int i, int j);

/// Columns listed from smallest to largest under `column_precedes`.
std::vector<int> precedence_order(const MoonPolyomino& shape);

/// The rectangle attached to column i for the coloring: for a left-part
/// column, the widest rectangle with the column on its left edge; for a
/// right-part column, the widest one with the column on its right edge that
/// avoids left-part columns preceding it.
Rectangle column_rectangle(const MoonPolyomino& shape, int i);

/// Per-column count of cells still available when columns are filled in
/// precedence order. Validates e and s; throws InfeasibleSums when some
/// entry falls below the column sum.
std::vector<int> h_vector(const MoonPolyomino& shape, std::span<const int> e,
                          std::span<const int> s);

/// Same recurrence without the h_i >= s_i check (entries may be negative).
std::vector<int> available_cells(const MoonPolyomino& shape, std::span<const int> e,
                                 std::span<const int> s);

/// Checks sizes, 0/1 row sums, nonnegative column sums and equal totals.
void check_sums(const MoonPolyomino& shape, std::span<const int> e, std::span<const int> s);

struct ColumnMove {
  int from = 1;
  int to = 1;
  friend bool operator==(const ColumnMove&, const ColumnMove&) = default;
};

struct LeftAlignment {
  MoonPolyomino shape;
  std::vector<ColumnMove> moves;
  /// origin[k-1] = column of the input shape now at position k.
  std::vector<int> origin;
};

/// Repeatedly moves the leftmost column to the right end of the largest
/// rectangle containing it until every row starts in column 1.
LeftAlignment rearrange_left_aligned(const MoonPolyomino& shape);

struct RowMove {
  int from = 1;
  int to = 1;
  friend bool operator==(const RowMove&, const RowMove&) = default;
};

struct TopAlignment {
  MoonPolyomino shape;
  std::vector<RowMove> moves;
  /// origin[k-1] = row of the input shape now at position k.
  std::vector<int> origin;
};

/// The row analogue: moves the top row to the bottom of the tallest
/// rectangle containing it until every column starts in row 1.
TopAlignment rearrange_top_aligned(const MoonPolyomino& shape);

MoonPolyomino reflect_rows(const MoonPolyomino& shape);     // row i -> n+1-i
MoonPolyomino reflect_columns(const MoonPolyomino& shape);  // col j -> m+1-j
MoonPolyomino transpose(const MoonPolyomino& shape);

/// new row k = old row order[k-1]; nullopt when the result is not a moon polyomino.
std::optional<MoonPolyomino> permute_rows(const MoonPolyomino& shape, std::span<const int> order);
/// new column k = old column order[k-1]; nullopt when not a moon polyomino.
std::optional<MoonPolyomino> permute_columns(const MoonPolyomino& shape,
                                             std::span<const int> order);

/// A clipped piece of a host shape, renormalized to start at row 1 and
/// column 1. Host coordinates = local + offset.
struct Region {
  MoonPolyomino shape;
  int row_offset = 0;
  int col_offset = 0;
};

/// Clips to rows [first_row, last_row] x columns [first_col, last_col];
/// rows left empty by the clip are dropped from either end.
Region extract_region(const MoonPolyomino& shape, const Rectangle& window);
Region extract_rows(const MoonPolyomino& shape, int first_row, int last_row);
Region extract_columns(const MoonPolyomino& shape, int first_col, int last_col);

}  // namespace moonfill
