#include <set>

#include "doctest.h"
#include "fixtures.hpp"
#include "moonfill/error.hpp"
#include "oracles.hpp"

using namespace moonfill;

TEST_CASE("filling construction") {
  const auto shape = fixtures::sample_shape();
  CHECK_THROWS_AS(Filling(shape, {1, 4, 0, 5, 1, 3, 2}), Error);
  CHECK_THROWS_AS(Filling(shape, {3, 4}), Error);
  const std::vector<Cell> clash{{2, 1}, {2, 3}};
  try {
    Filling::from_cells(shape, clash);
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidFilling);
  }
  const auto f = fixtures::sample_filling();
  CHECK(f.row_sums() == fixtures::sample_e());
  CHECK(f.col_sums() == fixtures::sample_s());
  CHECK(f.ones().size() == 6);
}

TEST_CASE("subsets") {
  const RowSubset s({4, 2, 2}, 7);
  CHECK(s.members() == std::vector<int>{2, 4});
  CHECK(s.complement().members() == std::vector<int>{1, 3, 5, 6, 7});
  CHECK(RowSubset::from_mask(0b1010, 7) == s);
  CHECK_THROWS_AS(RowSubset({8}, 7), Error);
  CHECK_THROWS_AS(ColSubset({0}, 6), Error);
}

TEST_CASE("golden statistics of the worked example filling") {
  const auto f = fixtures::sample_filling();
  CHECK(ne_count(f) == 6);
  CHECK(se_count(f) == 1);
  const RowSubset s({2, 4}, 7);
  CHECK(top_mixed(f, s) == 5);
  CHECK(top_mixed(f, s.complement()) == 2);
  CHECK(bottom_mixed(f, s) == 1);
  CHECK(bottom_mixed(f, s.complement()) == 6);
  const ColSubset t({1, 3}, 6);
  CHECK(left_mixed(f, t) == 4);
  CHECK(left_mixed(f, t.complement()) == 3);
  CHECK(right_mixed(f, t) == 2);
  CHECK(right_mixed(f, t.complement()) == 5);
}

TEST_CASE("small chain examples") {
  const auto sq = fixtures::rectangle(2, 2);
  CHECK(ne_count(Filling(sq, {2, 1})) == 1);
  CHECK(se_count(Filling(sq, {2, 1})) == 0);
  CHECK(ne_count(Filling(sq, {1, 2})) == 0);
  CHECK(se_count(Filling(sq, {1, 2})) == 1);
  const Filling empty(fixtures::sample_shape());
  CHECK(ne_count(empty) == 0);
  CHECK(se_count(empty) == 0);
}

TEST_CASE("statistics agree with the brute-force oracle") {
  for (const auto& shape : fixtures::small_shapes()) {
    if (shape.cell_count() > 20) continue;
    oracle::for_each_raw_filling(shape, [&](const Filling& f) {
      CHECK(ne_count(f) == oracle::ne(f));
      CHECK(se_count(f) == oracle::se(f));
      const int total = oracle::ne(f) + oracle::se(f);
      for (unsigned mask = 0; mask < (1U << shape.rows()); ++mask) {
        const auto a = oracle::subset_of_mask(mask, shape.rows());
        const auto rs = RowSubset::from_mask(mask, shape.rows());
        CHECK(top_mixed(f, rs) == oracle::mixed(f, 0, a));
        CHECK(bottom_mixed(f, rs) == oracle::mixed(f, 1, a));
        CHECK(top_mixed(f, rs) + top_mixed(f, rs.complement()) == total);
        CHECK(bottom_mixed(f, rs) + bottom_mixed(f, rs.complement()) == total);
      }
      for (unsigned mask = 0; mask < (1U << shape.cols()); ++mask) {
        const auto a = oracle::subset_of_mask(mask, shape.cols());
        const auto cs = ColSubset::from_mask(mask, shape.cols());
        CHECK(left_mixed(f, cs) == oracle::mixed(f, 2, a));
        CHECK(right_mixed(f, cs) == oracle::mixed(f, 3, a));
        CHECK(left_mixed(f, cs) + left_mixed(f, cs.complement()) == total);
      }
      CHECK(top_mixed(f, RowSubset({}, shape.rows())) == oracle::se(f));
      CHECK(top_mixed(f, RowSubset::all(shape.rows())) == oracle::ne(f));
      CHECK(left_mixed(f, ColSubset({}, shape.cols())) == oracle::se(f));
      CHECK(right_mixed(f, ColSubset({}, shape.cols())) == oracle::se(f));
    });
  }
}

TEST_CASE("enumeration matches brute force") {
  for (const auto& shape : fixtures::small_shapes()) {
    if (shape.cell_count() > 20) continue;
    for (const auto& [sums, members] : oracle::classes(shape)) {
      const auto& [e, s] = sums;
      const auto listed = enumerate_fillings(shape, e, s);
      CHECK(listed == members);  // both lexicographic
      CHECK(count_fillings(shape, e, s) == static_cast<long long>(members.size()));
      std::set<std::vector<int>> seen;
      for (const auto& f : listed) {
        CHECK(f.row_sums() == e);
        CHECK(f.col_sums() == s);
        seen.insert({f.row_columns().begin(), f.row_columns().end()});
      }
      CHECK(seen.size() == listed.size());
    }
  }
}

TEST_CASE("enumeration edge cases") {
  const auto sq = fixtures::rectangle(2, 2);
  const std::vector<int> ones{1, 1};
  CHECK(enumerate_fillings(sq, ones, ones).size() == 2);

  const auto fig = fixtures::sample_shape();
  const std::vector<int> ez(7, 0);
  const std::vector<int> sz(6, 0);
  CHECK(enumerate_fillings(fig, ez, sz).size() == 1);

  CHECK(count_fillings(fig, fixtures::sample_e(), fixtures::sample_s()) == 54);
  CHECK(oracle::fillings(fig, fixtures::sample_e(), fixtures::sample_s()).size() == 54);

  const std::vector<int> mismatch{1, 1, 1, 1, 1, 0};
  CHECK_THROWS_AS(enumerate_fillings(fig, fixtures::sample_e(), mismatch), Error);
  const std::vector<int> e{1, 1};
  const std::vector<int> s{2, 0};
  CHECK(enumerate_fillings(validate_moon({{1, 2}, {2, 2}}), e, s).empty());
}

TEST_CASE("partitioned enumeration covers the class once") {
  const auto fig = fixtures::sample_shape();
  std::multiset<std::vector<int>> parts;
  for (int part = 0; part < 3; ++part)
    for_each_filling_part(fig, fixtures::sample_e(), fixtures::sample_s(), part, 3,
                          [&](const Filling& f) {
                            parts.insert({f.row_columns().begin(), f.row_columns().end()});
                          });
  std::multiset<std::vector<int>> whole;
  for (const auto& f : enumerate_fillings(fig, fixtures::sample_e(), fixtures::sample_s()))
    whole.insert({f.row_columns().begin(), f.row_columns().end()});
  CHECK(parts == whole);
}

TEST_CASE("distributions") {
  const auto sq = fixtures::rectangle(2, 2);
  const std::vector<int> ones{1, 1};
  const BivarPoly p_plus_q = BivarPoly::monomial(1, 0) + BivarPoly::monomial(0, 1);
  for (auto stat : {MixedStatistic::top, MixedStatistic::bottom, MixedStatistic::left,
                    MixedStatistic::right})
    for (std::vector<int> a : {std::vector<int>{}, {1}, {2}, {1, 2}})
      CHECK(distribution(sq, ones, ones, stat, a) == p_plus_q);

  const auto fig = fixtures::sample_shape();
  const auto& e = fixtures::sample_e();
  const auto& s = fixtures::sample_s();
  const auto base = se_ne_distribution(fig, e, s);
  CHECK(distribution(fig, e, s, MixedStatistic::top, std::vector<int>{}) == base);
  CHECK(evaluate_at_one(base) == 54);
  CHECK(distribution(fig, e, s, MixedStatistic::top, std::vector<int>{2, 4}, 3) == base);
  CHECK_THROWS_AS(distribution(fig, e, s, MixedStatistic::left, std::vector<int>{7}), Error);

  const std::vector<int> e2{1, 1};
  const std::vector<int> s2{2, 0};
  CHECK(se_ne_distribution(validate_moon({{1, 2}, {2, 2}}), e2, s2).is_zero());
}

TEST_CASE("region restriction and embedding") {
  const auto f = fixtures::sample_filling();
  const auto region = extract_columns(f.shape(), 4, 6);
  const auto local = restrict_filling(f, region);
  // Host rows 2..6 with 1s in columns 4, -, 5, 1, 3.
  CHECK(std::vector<int>(local.row_columns().begin(), local.row_columns().end()) ==
        std::vector<int>{1, 0, 2, 0, 0});
  CHECK(embed_filling(f, region, local) == f);
  const Filling moved(region.shape, {0, 1, 2, 0, 0});
  const auto out = embed_filling(f, region, moved);
  CHECK(out.column_of_row(2) == 0);
  CHECK(out.column_of_row(3) == 4);
  CHECK(out.column_of_row(5) == 1);

  CHECK(reflect_filling_rows(reflect_filling_rows(f)) == f);
  CHECK(reflect_filling_columns(reflect_filling_columns(f)) == f);
}
