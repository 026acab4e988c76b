#include "moonfill/kasraoui.hpp"

#include <numeric>
#include <string>

#include "moonfill/error.hpp"

namespace moonfill {

Coloring::Coloring(const MoonPolyomino& shape) : cells_(shape.rows()) {
  for (auto& row : cells_) row.assign(shape.cols(), 0);
}

std::vector<Cell> Coloring::cells() const {
  std::vector<Cell> out;
  for (std::size_t r = 0; r < cells_.size(); ++r)
    for (std::size_t c = 0; c < cells_[r].size(); ++c)
      if (cells_[r][c]) out.push_back({static_cast<int>(r) + 1, static_cast<int>(c) + 1});
  return out;
}

Coloring coloring(const Filling& filling) {
  const auto& shape = filling.shape();
  Coloring out(shape);
  for (int r = 1; r <= shape.rows(); ++r)
    if (filling.column_of_row(r) == 0)
      for (int c = shape.row(r).left; c <= shape.row(r).right; ++c) out.mark(r, c);
  const auto cls = classify_columns(shape);
  for (int i = 1; i <= shape.cols(); ++i) {
    const Rectangle rect = column_rectangle(shape, i);
    for (int r = rect.top; r <= rect.bottom; ++r) {
      if (filling.column_of_row(r) != i) continue;
      if (cls.in_left(i)) {
        for (int c = i + 1; c <= rect.right; ++c) out.mark(r, c);
      } else {
        for (int c = rect.left; c < i; ++c) out.mark(r, c);
      }
    }
  }
  return out;
}

namespace {

int uncolored_run(const Cell& cell, const Filling& filling, const std::optional<Coloring>& colors,
                  int step) {
  const auto& shape = filling.shape();
  if (!shape.contains(cell.row, cell.col))
    throw Error(ErrorKind::CellOutsideShape,
                "cell (" + std::to_string(cell.row) + ", " + std::to_string(cell.col) +
                    ") is outside the shape",
                {cell.row, cell.col});
  if (!filling.is_one(cell.row, cell.col)) return 0;
  const Coloring computed = colors ? Coloring(shape) : coloring(filling);
  const Coloring& col = colors ? *colors : computed;
  const ColumnSpan span = shape.column(cell.col);
  int count = 0;
  for (int r = cell.row + step; span.contains(r); r += step)
    if (!filling.is_one(r, cell.col) && !col.colored(r, cell.col)) ++count;
  return count;
}

void malformed(int column, const std::string& what) {
  throw Error(ErrorKind::MalformedComposition,
              "composition of column " + std::to_string(column) + " " + what, {column});
}

void check_compositions(std::span<const int> h, std::span<const int> s, const CompositionSeq& cs) {
  if (cs.size() != s.size())
    throw Error(ErrorKind::MalformedComposition,
                "expected " + std::to_string(s.size()) + " compositions, got " +
                    std::to_string(cs.size()));
  for (std::size_t i = 0; i < s.size(); ++i) {
    const int col = static_cast<int>(i) + 1;
    const auto& c = cs[i];
    if (s[i] == 0) {
      if (c.size() != 1 || c[0] != 0) malformed(col, "must be (0) for a column without 1s");
      continue;
    }
    if (static_cast<int>(c.size()) != s[i] + 1)
      malformed(col, "has " + std::to_string(c.size()) + " parts, expected " +
                         std::to_string(s[i] + 1));
    int total = 0;
    for (int x : c) {
      if (x < 0) malformed(col, "has a negative part");
      total += x;
    }
    if (total != h[i] - s[i])
      malformed(col, "sums to " + std::to_string(total) + ", expected " +
                         std::to_string(h[i] - s[i]));
  }
}

}  // namespace

int auc(const Cell& cell, const Filling& filling, const std::optional<Coloring>& colors) {
  return uncolored_run(cell, filling, colors, -1);
}

int buc(const Cell& cell, const Filling& filling, const std::optional<Coloring>& colors) {
  return uncolored_run(cell, filling, colors, +1);
}

CompositionSeq to_compositions(const Filling& filling) {
  const auto& shape = filling.shape();
  const Coloring colors = coloring(filling);
  CompositionSeq out(shape.cols());
  for (int i = 1; i <= shape.cols(); ++i) {
    auto& c = out[i - 1];
    int gap = 0;
    const ColumnSpan span = shape.column(i);
    for (int r = span.top; r <= span.bottom; ++r) {
      if (filling.is_one(r, i)) {
        c.push_back(gap);
        gap = 0;
      } else if (!colors.colored(r, i)) {
        ++gap;
      }
    }
    // A column without 1s carries (0), whatever its uncolored count.
    c.push_back(c.empty() ? 0 : gap);
  }
  return out;
}

Filling from_compositions(const MoonPolyomino& shape, std::span<const int> e,
                          std::span<const int> s, const CompositionSeq& cs) {
  const auto h = h_vector(shape, e, s);
  check_compositions(h, s, cs);
  return detail::from_compositions(shape, e, s, cs, detail::precedence(shape));
}

std::pair<int, int> ne_se_from_compositions(const MoonPolyomino& shape, std::span<const int> e,
                                            std::span<const int> s, const CompositionSeq& cs) {
  const auto h = h_vector(shape, e, s);
  check_compositions(h, s, cs);
  return detail::ne_se_from_compositions(h, s, cs, detail::precedence(shape));
}

namespace detail {

ColumnOrder precedence(const MoonPolyomino& shape) {
  const auto cls = classify_columns(shape);
  ColumnOrder out{precedence_order(shape), std::vector<char>(shape.cols(), 0)};
  for (int j : cls.left_part) out.in_left[j - 1] = 1;
  return out;
}

std::vector<int> available_cells(const MoonPolyomino& shape, std::span<const int> e,
                                 std::span<const int> s, const ColumnOrder& order) {
  check_sums(shape, e, s);
  std::vector<int> h(shape.cols(), 0);
  int placed = 0;
  for (int j : order.order) {
    const ColumnSpan span = shape.column(j);
    int empty_rows = 0;
    for (int r = span.top; r <= span.bottom; ++r) empty_rows += e[r - 1] == 0 ? 1 : 0;
    h[j - 1] = span.length() - empty_rows - placed;
    placed += s[j - 1];
  }
  return h;
}

CompositionSeq to_compositions(const Filling& filling, const ColumnOrder& order) {
  const auto& shape = filling.shape();
  std::vector<int> position(shape.cols() + 1, 0);
  for (std::size_t k = 0; k < order.order.size(); ++k) position[order.order[k]] = static_cast<int>(k);
  CompositionSeq out(shape.cols());
  for (int i = 1; i <= shape.cols(); ++i) {
    auto& c = out[i - 1];
    int gap = 0;
    const ColumnSpan span = shape.column(i);
    for (int r = span.top; r <= span.bottom; ++r) {
      const int j = filling.column_of_row(r);
      if (j == i) {
        c.push_back(gap);
        gap = 0;
      } else if (j != 0 && position[j] > position[i]) {
        ++gap;
      }
    }
    c.push_back(c.empty() ? 0 : gap);
  }
  return out;
}

Filling from_compositions(const MoonPolyomino& shape, std::span<const int> e,
                          std::span<const int> s, const CompositionSeq& cs,
                          const ColumnOrder& order) {
  const auto h = available_cells(shape, e, s, order);
  for (int j = 1; j <= shape.cols(); ++j)
    if (h[j - 1] < s[j - 1])
      throw Error(ErrorKind::InfeasibleSums, "column " + std::to_string(j) + " is overfull", {j});
  check_compositions(h, s, cs);
  std::vector<int> row_cols(shape.rows(), 0);
  for (int i : order.order) {
    if (s[i - 1] == 0) continue;
    const auto& c = cs[i - 1];
    std::size_t part = 0;
    int skip = c[0];
    const ColumnSpan span = shape.column(i);
    for (int r = span.top; r <= span.bottom && part < static_cast<std::size_t>(s[i - 1]); ++r) {
      if (e[r - 1] == 0 || row_cols[r - 1] != 0) continue;
      if (skip > 0) {
        --skip;
        continue;
      }
      row_cols[r - 1] = i;
      skip = c[++part];
    }
    if (part != static_cast<std::size_t>(s[i - 1]))
      malformed(i, "does not fit the available cells");
  }
  return Filling(shape, std::move(row_cols));
}

std::pair<int, int> ne_se_from_compositions(std::span<const int> h, std::span<const int> s,
                                            const CompositionSeq& cs, const ColumnOrder& order) {
  int ne = 0;
  int se = 0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    int prefix = 0;
    for (int k = 0; k < s[i]; ++k) {
      prefix += cs[i][k];
      const int below = h[i] - s[i] - prefix;
      if (order.in_left[i]) {
        ne += prefix;
        se += below;
      } else {
        ne += below;
        se += prefix;
      }
    }
  }
  return {ne, se};
}

}  // namespace detail

}  // namespace moonfill
