#include "doctest.h"
#include "fixtures.hpp"
#include "moonfill/error.hpp"
#include "moonfill/io.hpp"
#include "moonfill/verify.hpp"

using namespace moonfill;

TEST_CASE("shape text") {
  const auto shape = parse_shape("# comment\n2 3\n1 4\n\n1 5  # trailing\n1 6\n1 6\n1 6\n2 3\n");
  CHECK(shape == fixtures::sample_shape());
  CHECK(parse_shape(format_shape(shape)) == shape);
  try {
    parse_shape("1 2\n1 x\n");
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ParseError);
    CHECK(e.indices() == std::vector<int>{2});
  }
  CHECK_THROWS_AS(parse_shape("1 2 3\n"), Error);
  CHECK_THROWS_AS(parse_shape("# nothing\n"), Error);
  try {
    parse_shape("1 2\n2 1\n");
    FAIL("expected failure");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::InvalidInterval);
  }
}

TEST_CASE("filling text") {
  const auto f = fixtures::sample_filling();
  const auto text = format_filling(f);
  CHECK(text == "1 3\n2 4\n4 5\n5 1\n6 3\n7 2\n");
  CHECK(parse_filling(text, f.shape()) == f);
  CHECK_THROWS_AS(parse_filling("1 1\n", f.shape()), Error);
}

TEST_CASE("composition text") {
  const auto f = fixtures::sample_filling();
  const auto cs = to_compositions(f);
  const auto text = format_compositions(f.row_sums(), cs);
  CHECK(text == "# e 1 1 0 1 1 1 1\n1: 1 1\n2: 0 0\n3: 0 0 1\n4: 0 1\n5: 0 2\n6: 0\n");
  const auto back = parse_compositions(text);
  CHECK(back.e == f.row_sums());
  CHECK(back.compositions == cs);
  CHECK(column_sums_of(cs) == f.col_sums());
  CHECK_THROWS_AS(parse_compositions("1: 0\n"), Error);
  CHECK_THROWS_AS(parse_compositions("# e 1\n2: 0\n"), Error);
  CHECK_THROWS_AS(parse_compositions("# e 1\n1 0\n"), Error);
}

TEST_CASE("words, matchings and lists") {
  CHECK(parse_word("1 2\n3 # tail\n") == Word{1, 2, 3});
  CHECK(format_word(Word{2, 1}) == "2 1\n");
  CHECK_THROWS_AS(parse_word(""), Error);
  const auto m = parse_matching("2 3\n1 7\n4 8\n5 6\n");
  CHECK(m.arcs().front() == Arc{1, 7});
  CHECK(format_matching(m) == "1 7\n2 3\n4 8\n5 6\n");
  CHECK(parse_int_list("2,4, 5") == std::vector<int>{2, 4, 5});
  CHECK(parse_int_list("").empty());
  CHECK(format_int_list(std::vector<int>{1, 2}, ',') == "1,2");
}

TEST_CASE("polynomial json") {
  CHECK(poly_to_json(BivarPoly{}) == R"({"terms":[]})");
  CHECK(poly_to_json(pq_binomial(2, 1)) ==
        R"({"terms":[{"coeff":"1","i":0,"j":1},{"coeff":"1","i":1,"j":0}]})");
  const auto big = pq_multinomial(24, std::vector<int>{6, 6, 6, 6});
  CHECK(poly_to_json(big).find("\"coeff\":\"") != std::string::npos);
}

TEST_CASE("digests") {
  CHECK(fnv1a("") == 0xcbf29ce484222325ULL);
  CHECK(digest("a") == "af63dc4c8601ec8c");
}

TEST_CASE("random shapes are reproducible") {
  Rng a(7);
  Rng b(7);
  for (int k = 0; k < 50; ++k) {
    const auto x = random_moon(a, 5, 5);
    const auto y = random_moon(b, 5, 5);
    CHECK(x == y);
    CHECK(x.rows() <= 5);
    CHECK(x.cols() <= 5);
    CHECK(try_moon({x.row_intervals().begin(), x.row_intervals().end()}).has_value());
    const auto f = random_filling(x, a);
    const auto g = random_filling(y, b);
    CHECK(f == g);
  }
}

TEST_CASE("verify suites") {
  VerifyOptions opt;
  opt.shapes = 3;
  opt.max_rows = 3;
  opt.max_cols = 3;
  opt.max_matching = 3;
  opt.max_catalan = 4;
  for (const auto& name : suite_names()) {
    const auto report = run_suite(name, opt);
    CHECK(report.passed());
    CHECK(!report.checks.empty());
    CHECK(format_report(report) == format_report(run_suite(name, opt)));
  }
  CHECK_THROWS_AS(run_suite("nope", opt), std::invalid_argument);
  SuiteReport failing;
  failing.suite = "demo";
  failing.checks.push_back({"c", false, 3, "shape (1,1)"});
  CHECK(!failing.passed());
  CHECK(format_report(failing) ==
        "suite: demo\nseed: 20240601\ncheck c: FAIL (3 instances)\n  counterexample: shape (1,1)\n"
        "result: FAIL\n");
}
