#include <algorithm>

#include "doctest.h"
#include "fixtures.hpp"
#include "moonfill/error.hpp"
#include "oracles.hpp"

using namespace moonfill;

namespace {

ErrorKind kind_of(const std::vector<RowInterval>& rows) {
  try {
    validate_moon(rows);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("shape unexpectedly valid");
  return ErrorKind::ParseError;
}

std::vector<int> sorted_lengths(const std::vector<int>& v) {
  auto out = v;
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> column_lengths(const MoonPolyomino& shape) {
  std::vector<int> out;
  for (int j = 1; j <= shape.cols(); ++j) out.push_back(shape.column_length(j));
  return out;
}

std::vector<int> row_lengths(const MoonPolyomino& shape) {
  std::vector<int> out;
  for (int i = 1; i <= shape.rows(); ++i) out.push_back(shape.row(i).length());
  return out;
}

}  // namespace

TEST_CASE("validate_moon accepts the reference shapes") {
  const auto shape = fixtures::sample_shape();
  CHECK(shape.rows() == 7);
  CHECK(shape.cols() == 6);
  CHECK(shape.column(1) == ColumnSpan{2, 6});
  CHECK(shape.column(6) == ColumnSpan{4, 6});
  CHECK(shape.cell_count() == 2 + 4 + 5 + 6 + 6 + 6 + 2);

  const auto single = validate_moon({{1, 1}});
  CHECK(single.rows() == 1);
  CHECK(single.cols() == 1);
}

TEST_CASE("validate_moon diagnostics") {
  try {
    validate_moon({{1, 3}, {2, 2}, {1, 3}});
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotColumnConvex);
    CHECK(e.indices() == std::vector<int>{1});
  }
  try {
    validate_moon({{1, 2}, {2, 3}});
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotComparable);
    CHECK(e.indices() == std::vector<int>{1, 2});
  }
  CHECK(kind_of({}) == ErrorKind::EmptyShape);
  CHECK(kind_of({{2, 1}}) == ErrorKind::InvalidInterval);
  CHECK(kind_of({{0, 1}}) == ErrorKind::InvalidInterval);
  CHECK(kind_of({{2, 3}}) == ErrorKind::MissingColumn);
}

TEST_CASE("classify_columns") {
  const auto fig = classify_columns(fixtures::sample_shape());
  CHECK(fig.pivot == 2);
  CHECK(fig.left_part == std::vector<int>{1});
  CHECK(fig.right_part == std::vector<int>{2, 3, 4, 5, 6});

  const auto rect = classify_columns(fixtures::rectangle(3, 4));
  CHECK(rect.pivot == 1);
  CHECK(rect.left_part.empty());

  const auto stair = classify_columns(validate_moon({{1, 3}, {1, 2}, {1, 1}}));
  CHECK(stair.left_part.empty());
  CHECK(stair.right_part == std::vector<int>{1, 2, 3});
}

TEST_CASE("classification satisfies unimodality on all small shapes") {
  for (int m = 1; m <= 4; ++m) {
    for (const auto& shape : oracle::all_moons(4, m)) {
      const auto cls = classify_columns(shape);
      const int k = cls.pivot;
      for (int j = 1; j + 1 < k; ++j) CHECK(shape.column_length(j) <= shape.column_length(j + 1));
      if (k > 1) CHECK(shape.column_length(k - 1) < shape.column_length(k));
      for (int j = k; j < m; ++j) CHECK(shape.column_length(j) >= shape.column_length(j + 1));
    }
  }
}

TEST_CASE("precedence order") {
  CHECK(precedence_order(fixtures::sample_shape()) == std::vector<int>{6, 5, 1, 4, 3, 2});
  CHECK(precedence_order(fixtures::rectangle(2, 4)) == std::vector<int>{4, 3, 2, 1});
  const auto shape = fixtures::sample_shape();
  CHECK_THROWS_AS(column_precedes(shape, 2, 2), Error);
  CHECK_THROWS_AS(column_precedes(shape, 0, 2), Error);
  CHECK_THROWS_AS(column_precedes(shape, 1, 7), Error);
}

TEST_CASE("precedence is a strict total order") {
  for (int m = 1; m <= 5; ++m) {
    for (const auto& shape : oracle::all_moons(m <= 4 ? 4 : 3, m)) {
      for (int i = 1; i <= m; ++i)
        for (int j = 1; j <= m; ++j) {
          if (i == j) continue;
          CHECK(column_precedes(shape, i, j) != column_precedes(shape, j, i));
          for (int k = 1; k <= m; ++k) {
            if (k == i || k == j) continue;
            if (column_precedes(shape, i, j) && column_precedes(shape, j, k))
              CHECK(column_precedes(shape, i, k));
          }
        }
    }
  }
}

TEST_CASE("column rectangles") {
  const auto fig = fixtures::sample_shape();
  CHECK(column_rectangle(fig, 1) == Rectangle{2, 6, 1, 4});

  const auto rect = fixtures::rectangle(3, 4);
  for (int i = 1; i <= 4; ++i) CHECK(column_rectangle(rect, i) == Rectangle{1, 3, 1, i});

  const auto col = fixtures::rectangle(3, 1);
  CHECK(column_rectangle(col, 1) == Rectangle{1, 3, 1, 1});
  CHECK_THROWS_AS(column_rectangle(col, 2), Error);
}

TEST_CASE("column rectangles match brute-force maximality") {
  for (int m = 1; m <= 4; ++m) {
    for (const auto& shape : oracle::all_moons(4, m)) {
      const auto cls = classify_columns(shape);
      for (int i = 1; i <= m; ++i) {
        const bool left = cls.in_left(i);
        const auto expected = oracle::widest_rectangle(shape, i, left, [&](int c) {
          return !left && cls.in_left(c) && column_precedes(shape, c, i);
        });
        CHECK(column_rectangle(shape, i) == expected);
        CHECK(shape.contains(column_rectangle(shape, i)));
      }
    }
  }
}

TEST_CASE("h_vector") {
  const auto fig = fixtures::sample_shape();
  CHECK(h_vector(fig, fixtures::sample_e(), fixtures::sample_s()) ==
        std::vector<int>{3, 1, 3, 2, 3, 3});

  const auto one = fixtures::rectangle(1, 1);
  const std::vector<int> e1{1};
  CHECK(h_vector(one, e1, e1) == std::vector<int>{1});

  const auto col = fixtures::rectangle(4, 1);
  const std::vector<int> e4{1, 1, 1, 1};
  const std::vector<int> s4{4};
  CHECK(h_vector(col, e4, s4) == std::vector<int>{4});

  const std::vector<int> bad_s{1, 1, 1, 1, 1, 0};
  CHECK_THROWS_AS(h_vector(fig, fixtures::sample_e(), bad_s), Error);
  // Two 1s in a one-cell column.
  const std::vector<int> e2{1, 1};
  const std::vector<int> s2{2, 0};
  CHECK_THROWS_AS(h_vector(validate_moon({{1, 2}, {2, 2}}), e2, s2), Error);
}

TEST_CASE("h_vector agrees with simulated filling") {
  for (const auto& shape : fixtures::small_shapes()) {
    for (const auto& [sums, members] : oracle::classes(shape)) {
      const auto& [e, s] = sums;
      CHECK(h_vector(shape, e, s) == oracle::simulated_h(shape, e, s, precedence_order(shape)));
    }
  }
}

TEST_CASE("left alignment of the alignment example shape") {
  const auto result = rearrange_left_aligned(fixtures::align_sample_shape());
  CHECK(result.shape == validate_moon({{1, 2}, {1, 3}, {1, 4}, {1, 6}, {1, 7}, {1, 7}, {1, 3}}));
  CHECK(result.moves == std::vector<ColumnMove>{{1, 6}, {1, 4}, {1, 3}});
  CHECK(result.origin == std::vector<int>{4, 5, 3, 2, 6, 1, 7});
}

TEST_CASE("rearrangements preserve lengths on all small shapes") {
  for (int m = 1; m <= 4; ++m) {
    for (const auto& shape : oracle::all_moons(4, m)) {
      const auto left = rearrange_left_aligned(shape);
      CHECK(left.shape.is_left_aligned());
      CHECK(sorted_lengths(column_lengths(left.shape)) == sorted_lengths(column_lengths(shape)));
      for (int k = 1; k <= m; ++k)
        CHECK(left.shape.column_length(k) == shape.column_length(left.origin[k - 1]));
      if (shape.is_left_aligned()) CHECK(left.moves.empty());

      const auto top = rearrange_top_aligned(shape);
      CHECK(top.shape.is_top_aligned());
      CHECK(sorted_lengths(row_lengths(top.shape)) == sorted_lengths(row_lengths(shape)));
      for (int k = 1; k <= shape.rows(); ++k)
        CHECK(top.shape.row(k) == shape.row(top.origin[k - 1]));
      if (shape.is_top_aligned()) CHECK(top.moves.empty());
    }
  }
  const auto fig = rearrange_top_aligned(fixtures::sample_shape());
  CHECK(fig.shape.is_top_aligned());
  const auto row = rearrange_top_aligned(fixtures::rectangle(1, 3));
  CHECK(row.moves.empty());
}

TEST_CASE("shape transforms") {
  const auto fig = fixtures::sample_shape();
  CHECK(reflect_rows(reflect_rows(fig)) == fig);
  CHECK(reflect_columns(reflect_columns(fig)) == fig);
  CHECK(transpose(transpose(fig)) == fig);
  CHECK(reflect_columns(fig).row(1) == RowInterval{4, 5});

  const std::vector<int> swap{2, 1, 3, 4, 5, 6, 7};
  CHECK(!permute_rows(fig, swap).has_value());
  const std::vector<int> cols{4, 2, 3, 1, 5, 6};
  CHECK(permute_columns(fig, cols).has_value());
  const std::vector<int> bad_cols{1, 2, 3, 4, 6, 5};
  CHECK(!permute_columns(fig, bad_cols).has_value());

  const auto region = extract_rows(fig, 3, 7);
  CHECK(region.row_offset == 2);
  CHECK(region.col_offset == 0);
  CHECK(region.shape.row(5) == RowInterval{2, 3});

  const auto right = extract_columns(fig, 4, 6);
  CHECK(right.row_offset == 1);
  CHECK(right.col_offset == 3);
  CHECK(right.shape.rows() == 5);
  CHECK(right.shape.row(1) == RowInterval{1, 1});
}
