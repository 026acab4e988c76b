#include "doctest.h"
#include "fixtures.hpp"
#include "moonfill/error.hpp"
#include "oracles.hpp"

using namespace moonfill;

namespace {

BivarPoly p() { return BivarPoly::monomial(1, 0); }
BivarPoly q() { return BivarPoly::monomial(0, 1); }

}  // namespace

TEST_CASE("pq integers") {
  CHECK(pq_integer(0).is_zero());
  CHECK(pq_integer(1) == BivarPoly::constant(1));
  CHECK(pq_integer(2) == p() + q());
  CHECK(pq_integer(3) == p() * p() + p() * q() + q() * q());
}

TEST_CASE("pq binomials") {
  CHECK(pq_binomial(2, 1) == p() + q());
  BivarPoly expected;
  expected.add_term(4, 0, 1);
  expected.add_term(3, 1, 1);
  expected.add_term(2, 2, 2);
  expected.add_term(1, 3, 1);
  expected.add_term(0, 4, 1);
  CHECK(pq_binomial(4, 2) == expected);
  CHECK(pq_binomial(4, 2) == oracle::word_distribution({1, 1, 2, 2}));
  for (int n = 0; n <= 6; ++n) CHECK(pq_binomial(n, n) == BivarPoly::constant(1));
  CHECK(pq_binomial(3, 4).is_zero());
}

TEST_CASE("pq multinomials match word enumeration") {
  const std::vector<std::vector<int>> words{
      {1, 1, 2, 3}, {1, 2, 3, 4}, {1, 1, 1, 2, 2}, {1, 2, 2, 3, 3, 3}, {1}, {2, 2, 2}};
  for (const auto& w : words) {
    std::vector<int> parts(4, 0);
    for (int x : w) ++parts[x - 1];
    const auto poly = pq_multinomial(static_cast<int>(w.size()), parts);
    CHECK(poly == oracle::word_distribution(w));
    CHECK(is_symmetric(poly));
  }
  const std::vector<int> bad{1, 1};
  CHECK_THROWS_AS(pq_multinomial(3, bad), Error);
}

TEST_CASE("exact division") {
  const auto a = pq_factorial(5);
  CHECK(divide_exact(a, pq_integer(5)) == pq_factorial(4));
  CHECK(divide_exact(a, pq_factorial(5)) == BivarPoly::constant(1));
  try {
    divide_exact(pq_integer(3), pq_integer(2));
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InexactDivision);
  }
}

TEST_CASE("big coefficients stay exact") {
  const auto big = pq_multinomial(24, std::vector<int>{6, 6, 6, 6});
  Coeff expected = 1;
  for (int i = 2; i <= 24; ++i) expected *= i;
  Coeff six = 720;
  expected /= six * six * six * six;
  CHECK(evaluate_at_one(big) == expected);
  CHECK(is_symmetric(big));
}

TEST_CASE("product formula") {
  const auto fig = fixtures::sample_shape();
  const auto poly = product_formula(fig, fixtures::sample_e(), fixtures::sample_s());
  CHECK(evaluate_at_one(poly) == 54);
  CHECK(poly == se_ne_distribution(fig, fixtures::sample_e(), fixtures::sample_s()));
  const std::vector<int> ez(7, 0);
  const std::vector<int> sz(6, 0);
  CHECK(product_formula(fig, ez, sz) == BivarPoly::constant(1));
  const std::vector<int> one{1};
  CHECK(product_formula(fixtures::rectangle(1, 1), one, one) == BivarPoly::constant(1));
  const std::vector<int> e2{1, 1};
  const std::vector<int> s2{2, 0};
  CHECK_THROWS_AS(product_formula(validate_moon({{1, 2}, {2, 2}}), e2, s2), Error);
}

TEST_CASE("text rendering") {
  CHECK(to_text(BivarPoly{}) == "0");
  CHECK(to_text(pq_binomial(4, 2)) ==
        "1 p^4 q^0 + 1 p^3 q^1 + 2 p^2 q^2 + 1 p^1 q^3 + 1 p^0 q^4");
}
