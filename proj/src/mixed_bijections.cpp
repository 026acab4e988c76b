#include "moonfill/mixed_bijections.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <stdexcept>
#include <string>

#include "moonfill/error.hpp"
#include "moonfill/kasraoui.hpp"

namespace moonfill {

namespace {

enum class Direction { forward, backward };

// Rewrites the gap compositions of a filling whose first row holds a 1 in
// column t, over the whole (upper) shape it lives on.
Filling rewrite_upper(const Filling& local, int t, Direction dir) {
  const auto& shape = local.shape();
  const auto e = local.row_sums();
  const auto s = local.col_sums();
  auto cs = to_compositions(local);
  const RowInterval first = shape.row(1);
  const int full = shape.column_length(t);
  int u = t;
  while (u - 1 >= first.left && shape.column_length(u - 1) == full) --u;
  for (int i = first.left; i <= first.right; ++i) {
    auto& c = cs[i - 1];
    if (i == t) {
      if (dir == Direction::forward)
        std::rotate(c.begin(), c.begin() + 1, c.end());
      else
        std::rotate(c.rbegin(), c.rbegin() + 1, c.rend());
    } else if ((i < u || i > t) && s[i - 1] != 0) {
      const int shift = dir == Direction::forward ? 1 : -1;
      c.front() -= shift;
      c.back() += shift;
      if (c.front() < 0 || c.back() < 0) {
        if (dir == Direction::forward)
          throw std::logic_error("first-row transport: leading gap of column " +
                                 std::to_string(i) + " is zero");
        throw Error(ErrorKind::NoPivotFound, "filling is not an image of the first-row transport");
      }
    }
  }
  return from_compositions(shape, e, s, cs);
}

Filling apply_on_rows(const Filling& filling, int first, int last,
                      const std::function<Filling(const Filling&)>& map) {
  const Region region = extract_rows(filling.shape(), first, last);
  return embed_filling(filling, region, map(restrict_filling(filling, region)));
}

Filling apply_on_window(const Filling& filling, const Rectangle& window,
                        const std::function<Filling(const Filling&)>& map) {
  const Region region = extract_region(filling.shape(), window);
  return embed_filling(filling, region, map(restrict_filling(filling, region)));
}

void check_row(const Filling& filling, int r) {
  if (r < 1 || r > filling.rows())
    throw Error(ErrorKind::IndexOutOfRange,
                "row " + std::to_string(r) + " outside 1.." + std::to_string(filling.rows()), {r});
}

void check_col(const Filling& filling, int c) {
  if (c < 1 || c > filling.cols())
    throw Error(ErrorKind::IndexOutOfRange,
                "column " + std::to_string(c) + " outside 1.." + std::to_string(filling.cols()),
                {c});
}

template <typename Subset>
void check_universe(const Subset& subset, int expected) {
  if (subset.universe() != expected)
    throw Error(ErrorKind::IndexOutOfRange, "subset universe " +
                                                std::to_string(subset.universe()) +
                                                " does not match " + std::to_string(expected));
}

}  // namespace

std::optional<UpperLowerSplit> pivot_split(const Filling& filling) {
  const int t = filling.column_of_row(1);
  if (t == 0) return std::nullopt;
  UpperLowerSplit out;
  out.pivot = t;
  const int bottom = filling.shape().column(t).bottom;
  for (int r = 1; r <= filling.rows(); ++r) (r <= bottom ? out.upper : out.lower).push_back(r);
  return out;
}

Filling first_row_transport(const Filling& filling) {
  const int t = filling.column_of_row(1);
  if (t == 0) return filling;
  const int bottom = filling.shape().column(t).bottom;
  const Region region = extract_rows(filling.shape(), 1, bottom);
  const Filling local = restrict_filling(filling, region);
  return embed_filling(filling, region,
                       rewrite_upper(local, t - region.col_offset, Direction::forward));
}

int recover_pivot(const Filling& image) {
  const auto& shape = image.shape();
  if (image.column_of_row(1) == 0)
    throw Error(ErrorKind::NoPivotFound, "first row is empty");
  const RowInterval first = shape.row(1);
  std::set<int> bottoms;
  for (int j = first.left; j <= first.right; ++j) bottoms.insert(shape.column(j).bottom);
  std::vector<int> found;
  for (int bottom : bottoms) {
    const Region region = extract_rows(shape, 1, bottom);
    const Filling local = restrict_filling(image, region);
    const auto cs = to_compositions(local);
    const auto s = local.col_sums();
    for (int j : precedence_order(local.shape())) {
      const int host = j + region.col_offset;
      if (!first.contains(host) || s[j - 1] == 0 || cs[j - 1].back() != 0) continue;
      if (shape.column(host).bottom == bottom) found.push_back(host);
      break;
    }
  }
  if (found.empty())
    throw Error(ErrorKind::NoPivotFound, "no column qualifies as the first-row pivot");
  if (found.size() > 1) throw std::logic_error("first-row pivot is ambiguous");
  return found.front();
}

Filling first_row_transport_inverse(const Filling& filling) {
  if (filling.column_of_row(1) == 0) return filling;
  const int t = recover_pivot(filling);
  const int bottom = filling.shape().column(t).bottom;
  const Region region = extract_rows(filling.shape(), 1, bottom);
  const Filling local = restrict_filling(filling, region);
  return embed_filling(filling, region,
                       rewrite_upper(local, t - region.col_offset, Direction::backward));
}

Filling row_suffix_transport(const Filling& filling, int r) {
  check_row(filling, r);
  return apply_on_rows(filling, r, filling.rows(), first_row_transport);
}

Filling row_suffix_transport_inverse(const Filling& filling, int r) {
  check_row(filling, r);
  return apply_on_rows(filling, r, filling.rows(), first_row_transport_inverse);
}

Filling top_mixed_transport(const Filling& filling, const RowSubset& rows) {
  check_universe(rows, filling.rows());
  Filling out = filling;
  const auto members = rows.members();
  for (auto it = members.rbegin(); it != members.rend(); ++it) out = row_suffix_transport(out, *it);
  return out;
}

Filling top_mixed_transport_inverse(const Filling& filling, const RowSubset& rows) {
  check_universe(rows, filling.rows());
  Filling out = filling;
  for (int r : rows.members()) out = row_suffix_transport_inverse(out, r);
  return out;
}

Filling rectangle_reversal(const Filling& filling) {
  const auto& shape = filling.shape();
  if (!shape.is_rectangle())
    throw Error(ErrorKind::NotARectangle, "rectangle reversal needs a rectangular shape");
  detail::ColumnOrder order{std::vector<int>(shape.cols()), std::vector<char>(shape.cols(), 1)};
  std::iota(order.order.begin(), order.order.end(), 1);
  auto cs = detail::to_compositions(filling, order);
  std::reverse(cs[0].begin(), cs[0].end());
  return detail::from_compositions(shape, filling.row_sums(), filling.col_sums(), cs, order);
}

RectangleChain rectangle_chain(const MoonPolyomino& shape) {
  RectangleChain out;
  out.first_row = shape.column(1).top;
  out.last_row = shape.column(1).bottom;
  const Region region = extract_rows(shape, out.first_row, out.last_row);
  const auto& local = region.shape;
  const int m = local.cols();
  for (int j = 1; j <= m; ++j)
    if (j == m || local.column_length(j) != local.column_length(j + 1)) out.run_ends.push_back(j);
  const auto host_rect = [&](int rows_of, int right) {
    const ColumnSpan span = local.column(rows_of);
    return Rectangle{span.top + region.row_offset, span.bottom + region.row_offset, 1, right};
  };
  for (std::size_t i = 0; i < out.run_ends.size(); ++i) {
    out.blocks.push_back(host_rect(out.run_ends[i], out.run_ends[i]));
    if (i + 1 < out.run_ends.size())
      out.overlaps.push_back(host_rect(out.run_ends[i + 1], out.run_ends[i]));
  }
  return out;
}

Filling first_column_transport(const Filling& filling) {
  const auto chain = rectangle_chain(filling.shape());
  const std::size_t k = chain.blocks.size();
  Filling out = apply_on_window(filling, chain.blocks[k - 1], rectangle_reversal);
  for (std::size_t i = k - 1; i-- > 0;) {
    out = apply_on_window(out, chain.overlaps[i], rectangle_reversal);
    out = apply_on_window(out, chain.blocks[i], rectangle_reversal);
  }
  return out;
}

Filling first_column_transport_inverse(const Filling& filling) {
  const auto chain = rectangle_chain(filling.shape());
  const std::size_t k = chain.blocks.size();
  Filling out = filling;
  for (std::size_t i = 0; i + 1 < k; ++i) {
    out = apply_on_window(out, chain.blocks[i], rectangle_reversal);
    out = apply_on_window(out, chain.overlaps[i], rectangle_reversal);
  }
  return apply_on_window(out, chain.blocks[k - 1], rectangle_reversal);
}

Filling column_suffix_transport(const Filling& filling, int c) {
  check_col(filling, c);
  const Region region = extract_columns(filling.shape(), c, filling.cols());
  return embed_filling(filling, region, first_column_transport(restrict_filling(filling, region)));
}

Filling column_suffix_transport_inverse(const Filling& filling, int c) {
  check_col(filling, c);
  const Region region = extract_columns(filling.shape(), c, filling.cols());
  return embed_filling(filling, region,
                       first_column_transport_inverse(restrict_filling(filling, region)));
}

Filling left_mixed_transport(const Filling& filling, const ColSubset& cols) {
  check_universe(cols, filling.cols());
  Filling out = filling;
  const auto members = cols.members();
  for (auto it = members.rbegin(); it != members.rend(); ++it)
    out = column_suffix_transport(out, *it);
  return out;
}

Filling left_mixed_transport_inverse(const Filling& filling, const ColSubset& cols) {
  check_universe(cols, filling.cols());
  Filling out = filling;
  for (int c : cols.members()) out = column_suffix_transport_inverse(out, c);
  return out;
}

namespace {

RowSubset mirrored(const RowSubset& rows) {
  std::vector<int> out;
  for (int r : rows.members()) out.push_back(rows.universe() + 1 - r);
  return RowSubset(out, rows.universe());
}

ColSubset mirrored(const ColSubset& cols) {
  std::vector<int> out;
  for (int c : cols.members()) out.push_back(cols.universe() + 1 - c);
  return ColSubset(out, cols.universe());
}

}  // namespace

Filling bottom_mixed_transport(const Filling& filling, const RowSubset& rows) {
  check_universe(rows, filling.rows());
  return reflect_filling_rows(top_mixed_transport(reflect_filling_rows(filling), mirrored(rows)));
}

Filling bottom_mixed_transport_inverse(const Filling& filling, const RowSubset& rows) {
  check_universe(rows, filling.rows());
  return reflect_filling_rows(
      top_mixed_transport_inverse(reflect_filling_rows(filling), mirrored(rows)));
}

Filling right_mixed_transport(const Filling& filling, const ColSubset& cols) {
  check_universe(cols, filling.cols());
  return reflect_filling_columns(
      left_mixed_transport(reflect_filling_columns(filling), mirrored(cols)));
}

Filling right_mixed_transport_inverse(const Filling& filling, const ColSubset& cols) {
  check_universe(cols, filling.cols());
  return reflect_filling_columns(
      left_mixed_transport_inverse(reflect_filling_columns(filling), mirrored(cols)));
}

namespace {

// Positions among the first `height` rows whose 1 lies inside `block`.
std::vector<std::size_t> unshaded(const std::vector<int>& cols, std::size_t height,
                                  const RowInterval& block) {
  std::vector<std::size_t> out;
  for (std::size_t k = 0; k < height; ++k)
    if (cols[k] != 0 && block.contains(cols[k])) out.push_back(k);
  return out;
}

void reassign(std::vector<int>& cols, const std::vector<std::size_t>& positions,
              const std::vector<int>& contents) {
  for (std::size_t k = 0; k < positions.size(); ++k) cols[positions[k]] = contents[k];
}

std::vector<int> contents_at(const std::vector<int>& cols, const std::vector<std::size_t>& positions) {
  std::vector<int> out;
  for (auto p : positions) out.push_back(cols[p]);
  return out;
}

}  // namespace

Filling top_align_transport(const Filling& filling) {
  const auto align = rearrange_top_aligned(filling.shape());
  std::vector<RowInterval> rows(filling.shape().row_intervals().begin(),
                                filling.shape().row_intervals().end());
  std::vector<int> cols(filling.row_columns().begin(), filling.row_columns().end());
  for (const RowMove& move : align.moves) {
    const auto height = static_cast<std::size_t>(move.to);
    const RowInterval block = rows[0];
    if (cols[0] == 0) {
      std::rotate(rows.begin(), rows.begin() + 1, rows.begin() + height);
      std::rotate(cols.begin(), cols.begin() + 1, cols.begin() + height);
      continue;
    }
    const auto before = unshaded(cols, height, block);
    const auto contents = contents_at(cols, before);
    std::rotate(rows.begin(), rows.begin() + 1, rows.begin() + height);
    std::rotate(cols.begin(), cols.begin() + 1, cols.begin() + height);
    reassign(cols, unshaded(cols, height, block), contents);
  }
  return Filling(align.shape, std::move(cols));
}

Filling top_align_transport_inverse(const Filling& filling, const MoonPolyomino& source) {
  const auto align = rearrange_top_aligned(source);
  if (!(filling.shape() == align.shape))
    throw Error(ErrorKind::ShapeMismatch, "filling is not on the top-aligned form of the source");
  // Row lists before each move.
  std::vector<std::vector<RowInterval>> snapshots;
  std::vector<RowInterval> rows(source.row_intervals().begin(), source.row_intervals().end());
  for (const RowMove& move : align.moves) {
    snapshots.push_back(rows);
    std::rotate(rows.begin(), rows.begin() + 1, rows.begin() + move.to);
  }
  std::vector<int> cols(filling.row_columns().begin(), filling.row_columns().end());
  for (std::size_t k = align.moves.size(); k-- > 0;) {
    const auto height = static_cast<std::size_t>(align.moves[k].to);
    const RowInterval block = snapshots[k][0];
    if (cols[height - 1] == 0) {
      std::rotate(cols.begin(), cols.begin() + height - 1, cols.begin() + height);
      continue;
    }
    const auto after = unshaded(cols, height, block);
    const auto contents = contents_at(cols, after);
    std::rotate(cols.begin(), cols.begin() + height - 1, cols.begin() + height);
    reassign(cols, unshaded(cols, height, block), contents);
  }
  return Filling(source, std::move(cols));
}

Filling row_permutation_transport(const Filling& filling, const RowSubset& rows,
                                  const MoonPolyomino& target) {
  auto source_rows = std::vector<RowInterval>(filling.shape().row_intervals().begin(),
                                              filling.shape().row_intervals().end());
  auto target_rows =
      std::vector<RowInterval>(target.row_intervals().begin(), target.row_intervals().end());
  std::sort(source_rows.begin(), source_rows.end());
  std::sort(target_rows.begin(), target_rows.end());
  if (source_rows != target_rows)
    throw Error(ErrorKind::ShapeMismatch, "target is not a row permutation of the source shape");
  check_universe(rows, filling.rows());
  const Filling aligned = top_align_transport(top_mixed_transport(filling, rows));
  return top_mixed_transport_inverse(top_align_transport_inverse(aligned, target), rows);
}

}  // namespace moonfill
