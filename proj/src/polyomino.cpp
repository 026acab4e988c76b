#include "moonfill/polyomino.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>
#include <tuple>

#include "moonfill/error.hpp"

namespace moonfill {

namespace {

void check_column(const MoonPolyomino& shape, int j) {
  if (j < 1 || j > shape.cols())
    throw Error(ErrorKind::IndexOutOfRange, "column " + std::to_string(j) + " outside 1.." +
                                                std::to_string(shape.cols()),
                {j});
}

bool is_permutation_of_range(std::span<const int> order, int n) {
  if (static_cast<int>(order.size()) != n) return false;
  std::vector<char> seen(n + 1, 0);
  for (int x : order) {
    if (x < 1 || x > n || seen[x]) return false;
    seen[x] = 1;
  }
  return true;
}

// Rows covering each column of a list of spans, or nullopt if some row's
// columns are not contiguous.
std::optional<std::vector<RowInterval>> rows_from_columns(std::span<const ColumnSpan> columns) {
  int n = 0;
  for (const auto& c : columns) n = std::max(n, c.bottom);
  std::vector<RowInterval> rows;
  rows.reserve(n);
  for (int r = 1; r <= n; ++r) {
    int first = 0;
    int last = 0;
    for (int j = 1; j <= static_cast<int>(columns.size()); ++j) {
      if (!columns[j - 1].contains(r)) continue;
      if (first == 0) {
        first = j;
      } else if (last != j - 1) {
        return std::nullopt;
      }
      last = j;
    }
    if (first == 0) return std::nullopt;
    rows.push_back({first, last});
  }
  return rows;
}

}  // namespace

bool MoonPolyomino::contains(int row, int col) const {
  return row >= 1 && row <= rows() && this->row(row).contains(col);
}

bool MoonPolyomino::contains(const Rectangle& rect) const {
  // In a convex shape the two horizontal edges decide containment.
  if (rect.top < 1 || rect.bottom > rows() || rect.top > rect.bottom || rect.left > rect.right)
    return false;
  const RowInterval span{rect.left, rect.right};
  return row(rect.top).contains(span) && row(rect.bottom).contains(span);
}

int MoonPolyomino::cell_count() const {
  int total = 0;
  for (const auto& r : data_->rows) total += r.length();
  return total;
}

bool MoonPolyomino::is_rectangle() const {
  const auto& rs = data_->rows;
  return std::all_of(rs.begin(), rs.end(), [&](const RowInterval& r) { return r == rs.front(); });
}

bool MoonPolyomino::is_left_aligned() const {
  return std::all_of(data_->rows.begin(), data_->rows.end(),
                     [](const RowInterval& r) { return r.left == 1; });
}

bool MoonPolyomino::is_top_aligned() const {
  return std::all_of(data_->columns.begin(), data_->columns.end(),
                     [](const ColumnSpan& c) { return c.top == 1; });
}

MoonPolyomino validate_moon(std::vector<RowInterval> rows) {
  if (rows.empty()) throw Error(ErrorKind::EmptyShape, "shape has no rows");
  const int n = static_cast<int>(rows.size());
  for (int i = 1; i <= n; ++i) {
    const auto& r = rows[i - 1];
    if (r.left < 1 || r.left > r.right)
      throw Error(ErrorKind::InvalidInterval,
                  "row " + std::to_string(i) + " has interval [" + std::to_string(r.left) + ", " +
                      std::to_string(r.right) + "]",
                  {i});
  }
  for (int i = 1; i <= n; ++i) {
    for (int k = i + 1; k <= n; ++k) {
      const auto& a = rows[i - 1];
      const auto& b = rows[k - 1];
      if (!a.contains(b) && !b.contains(a))
        throw Error(ErrorKind::NotComparable,
                    "rows " + std::to_string(i) + " and " + std::to_string(k) +
                        " are not nested",
                    {i, k});
    }
  }
  int m = 0;
  for (const auto& r : rows) m = std::max(m, r.right);
  std::vector<ColumnSpan> columns;
  columns.reserve(m);
  for (int j = 1; j <= m; ++j) {
    int top = 0;
    int bottom = 0;
    for (int i = 1; i <= n; ++i) {
      if (!rows[i - 1].contains(j)) continue;
      if (top == 0) {
        top = i;
      } else if (bottom != i - 1) {
        throw Error(ErrorKind::NotColumnConvex,
                    "column " + std::to_string(j) + " is interrupted above row " +
                        std::to_string(i),
                    {j});
      }
      bottom = i;
    }
    if (top == 0)
      throw Error(ErrorKind::MissingColumn, "column " + std::to_string(j) + " has no cells",
                  {j});
    columns.push_back({top, bottom});
  }
  auto data = std::make_shared<MoonPolyomino::Data>();
  data->rows = std::move(rows);
  data->columns = std::move(columns);
  return MoonPolyomino(std::move(data));
}

std::optional<MoonPolyomino> try_moon(std::vector<RowInterval> rows) {
  try {
    return validate_moon(std::move(rows));
  } catch (const Error&) {
    return std::nullopt;
  }
}

MoonPolyomino moon_from_columns(std::span<const ColumnSpan> columns) {
  auto rows = rows_from_columns(columns);
  if (!rows) throw Error(ErrorKind::NotColumnConvex, "columns do not assemble into rows");
  return validate_moon(std::move(*rows));
}

ColumnClassification classify_columns(const MoonPolyomino& shape) {
  ColumnClassification out;
  int best = 0;
  for (int j = 1; j <= shape.cols(); ++j) {
    if (shape.column_length(j) > best) {
      best = shape.column_length(j);
      out.pivot = j;
    }
  }
  for (int j = 1; j <= shape.cols(); ++j) (j < out.pivot ? out.left_part : out.right_part).push_back(j);
  return out;
}

namespace {

auto precedence_key(const MoonPolyomino& shape, const ColumnClassification& cls, int j) {
  const bool left = cls.in_left(j);
  return std::tuple{shape.column_length(j), left ? 0 : 1, left ? j : -j};
}

}  // namespace

bool column_precedes(const MoonPolyomino& shape, int i, int j) {
  check_column(shape, i);
  check_column(shape, j);
  if (i == j)
    throw Error(ErrorKind::IndexOutOfRange, "a column is not comparable with itself", {i});
  const auto cls = classify_columns(shape);
  return precedence_key(shape, cls, i) < precedence_key(shape, cls, j);
}

std::vector<int> precedence_order(const MoonPolyomino& shape) {
  const auto cls = classify_columns(shape);
  std::vector<int> order(shape.cols());
  std::iota(order.begin(), order.end(), 1);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    return precedence_key(shape, cls, a) < precedence_key(shape, cls, b);
  });
  return order;
}

Rectangle column_rectangle(const MoonPolyomino& shape, int i) {
  check_column(shape, i);
  const auto cls = classify_columns(shape);
  const ColumnSpan span = shape.column(i);
  Rectangle rect{span.top, span.bottom, i, i};
  if (cls.in_left(i)) {
    while (rect.right < shape.cols() && shape.column(rect.right + 1).contains(span)) ++rect.right;
  } else {
    while (rect.left > 1) {
      const int next = rect.left - 1;
      if (!shape.column(next).contains(span)) break;
      if (cls.in_left(next) &&
          precedence_key(shape, cls, next) < precedence_key(shape, cls, i))
        break;
      rect.left = next;
    }
  }
  return rect;
}

void check_sums(const MoonPolyomino& shape, std::span<const int> e, std::span<const int> s) {
  if (static_cast<int>(e.size()) != shape.rows())
    throw Error(ErrorKind::InfeasibleSums, "row-sum vector has " + std::to_string(e.size()) +
                                               " entries, shape has " +
                                               std::to_string(shape.rows()) + " rows");
  if (static_cast<int>(s.size()) != shape.cols())
    throw Error(ErrorKind::InfeasibleSums, "column-sum vector has " + std::to_string(s.size()) +
                                               " entries, shape has " +
                                               std::to_string(shape.cols()) + " columns");
  for (int i = 1; i <= shape.rows(); ++i)
    if (e[i - 1] != 0 && e[i - 1] != 1)
      throw Error(ErrorKind::InfeasibleSums, "row sum of row " + std::to_string(i) + " not 0/1",
                  {i});
  for (int j = 1; j <= shape.cols(); ++j)
    if (s[j - 1] < 0)
      throw Error(ErrorKind::InfeasibleSums,
                  "column sum of column " + std::to_string(j) + " is negative", {j});
  const int total_e = std::accumulate(e.begin(), e.end(), 0);
  const int total_s = std::accumulate(s.begin(), s.end(), 0);
  if (total_e != total_s)
    throw Error(ErrorKind::InfeasibleSums, "row sums total " + std::to_string(total_e) +
                                               " but column sums total " +
                                               std::to_string(total_s));
}

std::vector<int> available_cells(const MoonPolyomino& shape, std::span<const int> e,
                                 std::span<const int> s) {
  check_sums(shape, e, s);
  std::vector<int> h(shape.cols(), 0);
  int placed = 0;
  for (int j : precedence_order(shape)) {
    const ColumnSpan span = shape.column(j);
    int empty_rows = 0;
    for (int r = span.top; r <= span.bottom; ++r) empty_rows += e[r - 1] == 0 ? 1 : 0;
    h[j - 1] = span.length() - empty_rows - placed;
    placed += s[j - 1];
  }
  return h;
}

std::vector<int> h_vector(const MoonPolyomino& shape, std::span<const int> e,
                          std::span<const int> s) {
  auto h = available_cells(shape, e, s);
  for (int j = 1; j <= shape.cols(); ++j)
    if (h[j - 1] < s[j - 1])
      throw Error(ErrorKind::InfeasibleSums,
                  "column " + std::to_string(j) + " has " + std::to_string(h[j - 1]) +
                      " available cells for " + std::to_string(s[j - 1]) + " ones",
                  {j});
  return h;
}

LeftAlignment rearrange_left_aligned(const MoonPolyomino& shape) {
  std::vector<ColumnSpan> cols(shape.column_spans().begin(), shape.column_spans().end());
  std::vector<int> origin(cols.size());
  std::iota(origin.begin(), origin.end(), 1);
  const auto aligned = [&] {
    for (std::size_t k = 1; k < cols.size(); ++k)
      if (!cols[k - 1].contains(cols[k])) return false;
    return true;
  };
  std::vector<ColumnMove> moves;
  const std::size_t limit = cols.size() * cols.size() + 1;
  while (!aligned()) {
    if (moves.size() > limit) throw std::logic_error("column rearrangement does not terminate");
    std::size_t width = 1;
    while (width < cols.size() && cols[width].contains(cols.front())) ++width;
    std::rotate(cols.begin(), cols.begin() + 1, cols.begin() + width);
    std::rotate(origin.begin(), origin.begin() + 1, origin.begin() + width);
    moves.push_back({1, static_cast<int>(width)});
  }
  return {moon_from_columns(cols), std::move(moves), std::move(origin)};
}

TopAlignment rearrange_top_aligned(const MoonPolyomino& shape) {
  std::vector<RowInterval> rows(shape.row_intervals().begin(), shape.row_intervals().end());
  std::vector<int> origin(rows.size());
  std::iota(origin.begin(), origin.end(), 1);
  const auto aligned = [&] {
    for (std::size_t k = 1; k < rows.size(); ++k)
      if (!rows[k - 1].contains(rows[k])) return false;
    return true;
  };
  std::vector<RowMove> moves;
  const std::size_t limit = rows.size() * rows.size() + 1;
  while (!aligned()) {
    if (moves.size() > limit) throw std::logic_error("row rearrangement does not terminate");
    std::size_t height = 1;
    while (height < rows.size() && rows[height].contains(rows.front())) ++height;
    std::rotate(rows.begin(), rows.begin() + 1, rows.begin() + height);
    std::rotate(origin.begin(), origin.begin() + 1, origin.begin() + height);
    moves.push_back({1, static_cast<int>(height)});
  }
  return {validate_moon(std::move(rows)), std::move(moves), std::move(origin)};
}

MoonPolyomino reflect_rows(const MoonPolyomino& shape) {
  std::vector<RowInterval> rows(shape.row_intervals().rbegin(), shape.row_intervals().rend());
  return validate_moon(std::move(rows));
}

MoonPolyomino reflect_columns(const MoonPolyomino& shape) {
  const int m = shape.cols();
  std::vector<RowInterval> rows;
  for (const auto& r : shape.row_intervals()) rows.push_back({m + 1 - r.right, m + 1 - r.left});
  return validate_moon(std::move(rows));
}

MoonPolyomino transpose(const MoonPolyomino& shape) {
  std::vector<RowInterval> rows;
  for (const auto& c : shape.column_spans()) rows.push_back({c.top, c.bottom});
  return validate_moon(std::move(rows));
}

std::optional<MoonPolyomino> permute_rows(const MoonPolyomino& shape, std::span<const int> order) {
  if (!is_permutation_of_range(order, shape.rows()))
    throw Error(ErrorKind::IndexOutOfRange, "row order is not a permutation");
  std::vector<RowInterval> rows;
  for (int k : order) rows.push_back(shape.row(k));
  return try_moon(std::move(rows));
}

std::optional<MoonPolyomino> permute_columns(const MoonPolyomino& shape,
                                             std::span<const int> order) {
  if (!is_permutation_of_range(order, shape.cols()))
    throw Error(ErrorKind::IndexOutOfRange, "column order is not a permutation");
  std::vector<ColumnSpan> cols;
  for (int k : order) cols.push_back(shape.column(k));
  auto rows = rows_from_columns(cols);
  if (!rows) return std::nullopt;
  return try_moon(std::move(*rows));
}

Region extract_region(const MoonPolyomino& shape, const Rectangle& window) {
  const int top = std::max(window.top, 1);
  const int bottom = std::min(window.bottom, shape.rows());
  std::vector<std::optional<RowInterval>> clipped;
  for (int r = top; r <= bottom; ++r) {
    const auto& row = shape.row(r);
    RowInterval c{std::max(row.left, window.left), std::min(row.right, window.right)};
    clipped.push_back(c.left <= c.right ? std::optional(c) : std::nullopt);
  }
  std::size_t first = 0;
  while (first < clipped.size() && !clipped[first]) ++first;
  std::size_t last = clipped.size();
  while (last > first && !clipped[last - 1]) --last;
  if (first == last) throw Error(ErrorKind::EmptyShape, "window contains no cells");
  int min_left = shape.cols();
  for (std::size_t k = first; k < last; ++k) {
    if (!clipped[k])
      throw Error(ErrorKind::NotColumnConvex, "window splits the shape into pieces");
    min_left = std::min(min_left, clipped[k]->left);
  }
  std::vector<RowInterval> rows;
  for (std::size_t k = first; k < last; ++k)
    rows.push_back({clipped[k]->left - min_left + 1, clipped[k]->right - min_left + 1});
  return {validate_moon(std::move(rows)), top - 1 + static_cast<int>(first), min_left - 1};
}

Region extract_rows(const MoonPolyomino& shape, int first_row, int last_row) {
  return extract_region(shape, {first_row, last_row, 1, shape.cols()});
}

Region extract_columns(const MoonPolyomino& shape, int first_col, int last_col) {
  return extract_region(shape, {1, shape.rows(), first_col, last_col});
}

}  // namespace moonfill
