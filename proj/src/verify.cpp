#include "moonfill/verify.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <stdexcept>

#include "moonfill/classical.hpp"
#include "moonfill/io.hpp"
#include "moonfill/kasraoui.hpp"
#include "moonfill/mixed_bijections.hpp"

namespace moonfill {

bool SuiteReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const CheckResult& c) { return c.passed; });
}

namespace {

struct Instance {
  MoonPolyomino shape;
  std::vector<int> e;
  std::vector<int> s;
  std::vector<Filling> members;
};

class Check {
 public:
  explicit Check(std::string name) { result_.name = std::move(name); }

  void expect(bool ok, const std::function<std::string()>& describe) {
    ++result_.instances;
    if (ok || !result_.passed) return;
    result_.passed = false;
    result_.counterexample = describe();
  }

  CheckResult result() const { return result_; }

 private:
  CheckResult result_;
};

std::string describe_shape(const MoonPolyomino& shape) {
  std::string out;
  for (const auto& row : shape.row_intervals())
    out += "(" + std::to_string(row.left) + "," + std::to_string(row.right) + ")";
  return out;
}

std::string describe(const Instance& in, const Filling* filling = nullptr,
                     const std::vector<int>* subset = nullptr) {
  std::string out = "shape " + describe_shape(in.shape) + "; e " + format_int_list(in.e, ',') +
                    "; s " + format_int_list(in.s, ',');
  if (filling) {
    out += "; filling";
    for (const Cell& c : filling->ones())
      out += " " + std::to_string(c.row) + ":" + std::to_string(c.col);
  }
  if (subset) out += "; subset {" + format_int_list(*subset, ',') + "}";
  return out;
}

MoonPolyomino sample_shape() {
  return validate_moon({{2, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 6}, {1, 6}, {2, 3}});
}

Instance make_instance(const MoonPolyomino& shape, std::vector<int> e, std::vector<int> s) {
  auto members = enumerate_fillings(shape, e, s);
  return {shape, std::move(e), std::move(s), std::move(members)};
}

// The biggest (e, s) class of a shape; ties go to the first in row-major order.
Instance largest_class(const MoonPolyomino& shape) {
  std::map<std::pair<std::vector<int>, std::vector<int>>, long long> sizes;
  std::vector<int> cols(shape.rows(), 0);
  while (true) {
    const Filling f(shape, cols);
    ++sizes[{f.row_sums(), f.col_sums()}];
    int r = shape.rows() - 1;
    while (r >= 0) {
      const auto& row = shape.row(r + 1);
      cols[r] = cols[r] == 0 ? row.left : cols[r] + 1;
      if (cols[r] <= row.right) break;
      cols[r--] = 0;
    }
    if (r < 0) break;
  }
  auto best = sizes.begin();
  for (auto it = sizes.begin(); it != sizes.end(); ++it)
    if (it->second > best->second) best = it;
  return make_instance(shape, best->first.first, best->first.second);
}

// Seeded random instances (a random class and the largest class of each
// shape), smallest shapes first, then the worked example data.
std::vector<Instance> instances(const VerifyOptions& opt) {
  std::vector<Instance> out;
  Rng rng(opt.seed);
  for (int k = 0; k < opt.shapes; ++k) {
    const auto shape = random_moon(rng, opt.max_rows, opt.max_cols);
    const auto f = random_filling(shape, rng);
    out.push_back(make_instance(shape, f.row_sums(), f.col_sums()));
    auto largest = largest_class(shape);
    if (largest.e != out.back().e || largest.s != out.back().s) out.push_back(std::move(largest));
  }
  std::stable_sort(out.begin(), out.end(), [](const Instance& a, const Instance& b) {
    return a.shape.cell_count() < b.shape.cell_count();
  });
  out.push_back(make_instance(sample_shape(), {1, 1, 0, 1, 1, 1, 1}, {1, 1, 2, 1, 1, 0}));
  return out;
}

std::vector<int> mask_members(unsigned long long mask, int universe) {
  std::vector<int> out;
  for (int i = 1; i <= universe; ++i)
    if (mask >> (i - 1) & 1ULL) out.push_back(i);
  return out;
}

std::vector<int> complement(const std::vector<int>& a, int universe) {
  std::vector<int> out;
  for (int i = 1; i <= universe; ++i)
    if (!std::binary_search(a.begin(), a.end(), i)) out.push_back(i);
  return out;
}

std::vector<int> cols_of(const Filling& f) { return {f.row_columns().begin(), f.row_columns().end()}; }

bool row_kind(MixedStatistic kind) {
  return kind == MixedStatistic::top || kind == MixedStatistic::bottom;
}

const char* kind_name(MixedStatistic kind) {
  switch (kind) {
    case MixedStatistic::top: return "alpha";
    case MixedStatistic::bottom: return "beta";
    case MixedStatistic::left: return "gamma";
    case MixedStatistic::right: return "delta";
  }
  return "";
}

std::vector<CheckResult> mixed_suite(const VerifyOptions& opt,
                                     std::initializer_list<MixedStatistic> kinds) {
  Check symmetric("symmetric");
  std::map<MixedStatistic, Check> equal;
  for (auto kind : kinds) equal.emplace(kind, Check(std::string(kind_name(kind)) + "-distribution"));
  for (const auto& in : instances(opt)) {
    const auto base = se_ne_distribution(in.shape, in.e, in.s, opt.threads);
    symmetric.expect(is_symmetric(base), [&] { return describe(in); });
    for (auto kind : kinds) {
      const int universe = row_kind(kind) ? in.shape.rows() : in.shape.cols();
      for (unsigned long long mask = 0; mask < (1ULL << universe); ++mask) {
        const auto a = mask_members(mask, universe);
        equal.at(kind).expect(distribution(in.shape, in.e, in.s, kind, a, opt.threads) == base,
                              [&] { return describe(in, nullptr, &a); });
      }
    }
  }
  std::vector<CheckResult> out{symmetric.result()};
  for (auto kind : kinds) out.push_back(equal.at(kind).result());
  return out;
}

std::vector<CheckResult> product_suite(const VerifyOptions& opt) {
  Check product("product-formula");
  Check count("count");
  for (const auto& in : instances(opt)) {
    const auto formula = product_formula(in.shape, in.e, in.s);
    BivarPoly dist;
    for (const auto& f : in.members) dist.add_term(se_count(f), ne_count(f), 1);
    product.expect(dist == formula, [&] { return describe(in); });
    count.expect(evaluate_at_one(formula) == static_cast<Coeff>(in.members.size()),
                 [&] { return describe(in); });
  }
  return {product.result(), count.result()};
}

std::vector<CheckResult> psi_suite(const VerifyOptions& opt) {
  Check round_trip("psi-inv-of-psi");
  Check sums("composition-sums");
  Check formula("ne-se-formula");
  Check cells("auc-buc-chains");
  Check injective("psi-injective");
  for (const auto& in : instances(opt)) {
    const auto h = h_vector(in.shape, in.e, in.s);
    const auto cls = classify_columns(in.shape);
    std::set<CompositionSeq> images;
    for (const auto& f : in.members) {
      const auto cs = to_compositions(f);
      images.insert(cs);
      round_trip.expect(from_compositions(in.shape, in.e, in.s, cs) == f,
                        [&] { return describe(in, &f); });
      bool ok = true;
      for (int i = 1; i <= in.shape.cols(); ++i)
        if (in.s[i - 1] > 0)
          ok = ok && std::accumulate(cs[i - 1].begin(), cs[i - 1].end(), 0) == h[i - 1] - in.s[i - 1];
      sums.expect(ok, [&] { return describe(in, &f); });
      formula.expect(ne_se_from_compositions(in.shape, in.e, in.s, cs) ==
                         std::pair{ne_count(f), se_count(f)},
                     [&] { return describe(in, &f); });
      const auto colors = coloring(f);
      int ne = 0;
      int se = 0;
      for (const Cell& c : f.ones()) {
        const bool left = cls.in_left(c.col);
        ne += left ? auc(c, f, colors) : buc(c, f, colors);
        se += left ? buc(c, f, colors) : auc(c, f, colors);
      }
      cells.expect(ne == ne_count(f) && se == se_count(f), [&] { return describe(in, &f); });
    }
    injective.expect(images.size() == in.members.size(), [&] { return describe(in); });
  }
  return {round_trip.result(), sums.result(), formula.result(), cells.result(), injective.result()};
}

// Checks a class map for permutation, inverse and the (se, ne) transport.
template <typename Map, typename Inverse, typename Pair>
void check_transport(const Instance& in, const std::vector<int>* subset, Map map, Inverse inverse,
                     Pair pair, Check& transport, Check& permutation, Check& inverse_check) {
  const std::set<Filling> domain(in.members.begin(), in.members.end());
  std::set<Filling> images;
  for (const auto& f : in.members) {
    const Filling g = map(f);
    images.insert(g);
    transport.expect(pair(f) == std::pair{se_count(g), ne_count(g)},
                     [&] { return describe(in, &f, subset); });
    inverse_check.expect(inverse(g) == f, [&] { return describe(in, &f, subset); });
  }
  permutation.expect(images == domain, [&] { return describe(in, nullptr, subset); });
}

std::vector<CheckResult> rho_suite(const VerifyOptions& opt) {
  Check involution("rho-involution");
  Check transport("gamma-first-column");
  Check chain("phi-gamma-equals-rho");
  Rng rng(opt.seed);
  for (int k = 0; k < opt.shapes; ++k) {
    const int n = std::uniform_int_distribution<int>(1, opt.max_rows)(rng);
    const int m = std::uniform_int_distribution<int>(1, opt.max_cols)(rng);
    const auto shape = validate_moon(std::vector<RowInterval>(n, RowInterval{1, m}));
    const auto seed_filling = random_filling(shape, rng);
    const std::vector<int> first{1};
    const auto rest = complement(first, m);
    for (const auto& in : {make_instance(shape, seed_filling.row_sums(), seed_filling.col_sums()),
                           largest_class(shape)})
      for (const auto& f : in.members) {
        const Filling g = rectangle_reversal(f);
        involution.expect(rectangle_reversal(g) == f, [&] { return describe(in, &f); });
        transport.expect(left_mixed(f, ColSubset(first, m)) == se_count(g) &&
                             left_mixed(f, ColSubset(rest, m)) == ne_count(g),
                         [&] { return describe(in, &f); });
        chain.expect(first_column_transport(f) == g, [&] { return describe(in, &f); });
      }
  }
  return {involution.result(), transport.result(), chain.result()};
}

std::vector<CheckResult> theta_suite(const VerifyOptions& opt) {
  Check phi_t("phi-alpha-transport"), phi_p("phi-alpha-permutation"), phi_i("phi-alpha-inverse");
  Check th_t("theta-r-transport"), th_p("theta-r-permutation"), th_i("theta-r-inverse");
  Check big_t("Theta-transport"), big_p("Theta-permutation"), big_i("Theta-inverse");
  Check b_t("beta-transport"), b_p("beta-permutation"), b_i("beta-inverse");
  for (const auto& in : instances(opt)) {
    const int n = in.shape.rows();
    const std::vector<int> first{1};
    check_transport(
        in, &first, first_row_transport, first_row_transport_inverse,
        [&](const Filling& f) {
          return std::pair{top_mixed(f, RowSubset(first, n)),
                           top_mixed(f, RowSubset(complement(first, n), n))};
        },
        phi_t, phi_p, phi_i);
    for (int r = 1; r <= n; ++r) {
      // The pair for S' + {r} becomes the pair for S', S' inside rows 1..r-1.
      for (unsigned long long mask = 0; mask < (1ULL << (r - 1)); ++mask) {
        const auto small = mask_members(mask, n);
        auto big = small;
        big.push_back(r);
        std::set<Filling> images;
        for (const auto& f : in.members) {
          const Filling g = row_suffix_transport(f, r);
          if (mask == 0) images.insert(g);
          th_t.expect(top_mixed(f, RowSubset(big, n)) == top_mixed(g, RowSubset(small, n)) &&
                          top_mixed(f, RowSubset(complement(big, n), n)) ==
                              top_mixed(g, RowSubset(complement(small, n), n)),
                      [&] { return describe(in, &f, &big); });
          if (mask == 0)
            th_i.expect(row_suffix_transport_inverse(g, r) == f,
                        [&] { return describe(in, &f, &big); });
        }
        if (mask == 0)
          th_p.expect(images == std::set<Filling>(in.members.begin(), in.members.end()),
                      [&] { return describe(in, nullptr, &big); });
      }
    }
    for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
      const auto a = mask_members(mask, n);
      const RowSubset rows(a, n);
      check_transport(
          in, &a, [&](const Filling& f) { return top_mixed_transport(f, rows); },
          [&](const Filling& g) { return top_mixed_transport_inverse(g, rows); },
          [&](const Filling& f) {
            return std::pair{top_mixed(f, rows), top_mixed(f, rows.complement())};
          },
          big_t, big_p, big_i);
      check_transport(
          in, &a, [&](const Filling& f) { return bottom_mixed_transport(f, rows); },
          [&](const Filling& g) { return bottom_mixed_transport_inverse(g, rows); },
          [&](const Filling& f) {
            return std::pair{bottom_mixed(f, rows), bottom_mixed(f, rows.complement())};
          },
          b_t, b_p, b_i);
    }
  }
  return {phi_t.result(), phi_p.result(), phi_i.result(), th_t.result(), th_p.result(),
          th_i.result(),  big_t.result(), big_p.result(), big_i.result(), b_t.result(),
          b_p.result(),   b_i.result()};
}

std::vector<CheckResult> sigma_suite(const VerifyOptions& opt) {
  Check phi_t("phi-gamma-transport"), phi_p("phi-gamma-permutation"), phi_i("phi-gamma-inverse");
  Check xi_t("xi-c-transport"), xi_p("xi-c-permutation"), xi_i("xi-c-inverse");
  Check big_t("Sigma-transport"), big_p("Sigma-permutation"), big_i("Sigma-inverse");
  Check d_t("delta-transport"), d_p("delta-permutation"), d_i("delta-inverse");
  for (const auto& in : instances(opt)) {
    const int m = in.shape.cols();
    const std::vector<int> first{1};
    check_transport(
        in, &first, first_column_transport, first_column_transport_inverse,
        [&](const Filling& f) {
          return std::pair{left_mixed(f, ColSubset(first, m)),
                           left_mixed(f, ColSubset(complement(first, m), m))};
        },
        phi_t, phi_p, phi_i);
    for (int c = 1; c <= m; ++c) {
      for (unsigned long long mask = 0; mask < (1ULL << (c - 1)); ++mask) {
        const auto small = mask_members(mask, m);
        auto big = small;
        big.push_back(c);
        std::set<Filling> images;
        for (const auto& f : in.members) {
          const Filling g = column_suffix_transport(f, c);
          if (mask == 0) images.insert(g);
          xi_t.expect(left_mixed(f, ColSubset(big, m)) == left_mixed(g, ColSubset(small, m)) &&
                          left_mixed(f, ColSubset(complement(big, m), m)) ==
                              left_mixed(g, ColSubset(complement(small, m), m)),
                      [&] { return describe(in, &f, &big); });
          if (mask == 0)
            xi_i.expect(column_suffix_transport_inverse(g, c) == f,
                        [&] { return describe(in, &f, &big); });
        }
        if (mask == 0)
          xi_p.expect(images == std::set<Filling>(in.members.begin(), in.members.end()),
                      [&] { return describe(in, nullptr, &big); });
      }
    }
    for (unsigned long long mask = 0; mask < (1ULL << m); ++mask) {
      const auto a = mask_members(mask, m);
      const ColSubset cols(a, m);
      check_transport(
          in, &a, [&](const Filling& f) { return left_mixed_transport(f, cols); },
          [&](const Filling& g) { return left_mixed_transport_inverse(g, cols); },
          [&](const Filling& f) {
            return std::pair{left_mixed(f, cols), left_mixed(f, cols.complement())};
          },
          big_t, big_p, big_i);
      check_transport(
          in, &a, [&](const Filling& f) { return right_mixed_transport(f, cols); },
          [&](const Filling& g) { return right_mixed_transport_inverse(g, cols); },
          [&](const Filling& f) {
            return std::pair{right_mixed(f, cols), right_mixed(f, cols.complement())};
          },
          d_t, d_p, d_i);
    }
  }
  return {phi_t.result(), phi_p.result(), phi_i.result(), xi_t.result(), xi_p.result(),
          xi_i.result(),  big_t.result(), big_p.result(), big_i.result(), d_t.result(),
          d_p.result(),   d_i.result()};
}

std::vector<CheckResult> h_suite(const VerifyOptions& opt) {
  Check keep("h-keeps-se-ne");
  Check onto("h-bijects-onto-class");
  Check back("h-inverse");
  Check lambda_keep("lambda-keeps-alpha-pair");
  Check lambda_perm("lambda-bijective");
  Check lambda_back("lambda-round-trip");
  Rng rng(opt.seed ^ 0x5a5aULL);
  for (const auto& in : instances(opt)) {
    const auto target = rearrange_top_aligned(in.shape).shape;
    std::set<Filling> images;
    for (const auto& f : in.members) {
      const Filling g = top_align_transport(f);
      images.insert(g);
      keep.expect(se_count(g) == se_count(f) && ne_count(g) == ne_count(f) &&
                      g.col_sums() == f.col_sums(),
                  [&] { return describe(in, &f); });
      back.expect(top_align_transport_inverse(g, in.shape) == f, [&] { return describe(in, &f); });
    }
    if (!in.members.empty()) {
      const auto e_image = images.begin()->row_sums();
      const auto expected = enumerate_fillings(target, e_image, in.s);
      onto.expect(images == std::set<Filling>(expected.begin(), expected.end()),
                  [&] { return describe(in); });
    }
    const int n = in.shape.rows();
    const auto a = mask_members(std::uniform_int_distribution<unsigned long long>(
                                    0, (1ULL << n) - 1)(rng),
                                n);
    const RowSubset rows(a, n);
    std::set<std::vector<int>> lambda_images;
    for (const auto& f : in.members) {
      const Filling g = row_permutation_transport(f, rows, target);
      lambda_images.insert(cols_of(g));
      lambda_keep.expect(top_mixed(g, rows) == top_mixed(f, rows) &&
                             top_mixed(g, rows.complement()) == top_mixed(f, rows.complement()),
                         [&] { return describe(in, &f, &a); });
      lambda_back.expect(row_permutation_transport(g, rows, in.shape) == f,
                         [&] { return describe(in, &f, &a); });
    }
    lambda_perm.expect(lambda_images.size() == in.members.size(),
                       [&] { return describe(in, nullptr, &a); });
  }
  return {keep.result(),        onto.result(),        back.result(),
          lambda_keep.result(), lambda_perm.result(), lambda_back.result()};
}

std::vector<CheckResult> invariance_suite(const VerifyOptions& opt) {
  Check cols("column-permutation");
  Check rows("row-permutation");
  for (const auto& in : instances(opt)) {
    const auto base = se_ne_distribution(in.shape, in.e, in.s, opt.threads);
    std::vector<int> order(in.shape.cols());
    std::iota(order.begin(), order.end(), 1);
    do {
      const auto moved = permute_columns(in.shape, order);
      if (!moved) continue;
      std::vector<int> s;
      for (int j : order) s.push_back(in.s[j - 1]);
      cols.expect(se_ne_distribution(*moved, in.e, s, opt.threads) == base, [&] {
        return describe(in, nullptr, &order) + "; permuted " + describe_shape(*moved);
      });
    } while (std::next_permutation(order.begin(), order.end()));
    std::vector<int> row_order(in.shape.rows());
    std::iota(row_order.begin(), row_order.end(), 1);
    do {
      const auto moved = permute_rows(in.shape, row_order);
      if (!moved) continue;
      std::vector<int> e;
      for (int r : row_order) e.push_back(in.e[r - 1]);
      rows.expect(se_ne_distribution(*moved, e, in.s, opt.threads) == base, [&] {
        return describe(in, nullptr, &row_order) + "; permuted " + describe_shape(*moved);
      });
    } while (std::next_permutation(row_order.begin(), row_order.end()));
  }
  return {cols.result(), rows.result()};
}

std::vector<CheckResult> words_suite(const VerifyOptions&) {
  Check mixed_check("mixed-distribution");
  Check inversions("inv-coinv-distribution");
  Check filling_check("word-filling-statistics");
  const std::vector<Word> multisets{{1, 1, 2, 3}, {1, 1, 2, 2}, {1, 2, 2, 3, 3}, {1, 2, 3, 4}};
  for (const auto& letters : multisets) {
    const int n = static_cast<int>(letters.size());
    const int m = letters.back();
    std::vector<int> parts(m, 0);
    for (int x : letters) ++parts[x - 1];
    const auto expected = pq_multinomial(n, parts);
    const auto dump = [&](const std::vector<int>* a) {
      std::string out = "word multiset " + format_int_list(letters, ',');
      if (a) out += "; subset {" + format_int_list(*a, ',') + "}";
      return out;
    };
    BivarPoly plain;
    Word w = letters;
    do {
      plain.add_term(inv(w), coinv(w), 1);
      const Filling f = word_to_filling(w, m);
      filling_check.expect(inv(w) == se_count(f) && coinv(w) == ne_count(f),
                           [&] { return "word " + format_int_list(w, ','); });
    } while (std::next_permutation(w.begin(), w.end()));
    inversions.expect(plain == expected, [&] { return dump(nullptr); });
    for (auto kind : {MixedStatistic::top, MixedStatistic::bottom, MixedStatistic::left,
                      MixedStatistic::right}) {
      const int universe = row_kind(kind) ? n : m;
      for (unsigned long long mask = 0; mask < (1ULL << universe); ++mask) {
        const auto a = mask_members(mask, universe);
        const auto rest = complement(a, universe);
        BivarPoly dist;
        Word v = letters;
        do {
          dist.add_term(word_mixed(v, m, kind, a), word_mixed(v, m, kind, rest), 1);
        } while (std::next_permutation(v.begin(), v.end()));
        mixed_check.expect(dist == expected, [&] { return dump(&a); });
      }
    }
  }
  return {mixed_check.result(), inversions.result(), filling_check.result()};
}

std::vector<CheckResult> matchings_suite(const VerifyOptions& opt) {
  Check product("crossing-nesting-product");
  Check unique("unique-alpha-zero");
  for (int n = 1; n <= opt.max_matching; ++n)
    for (const auto& cls : endpoint_classes(n)) {
      const auto matchings = enumerate_matchings(cls.lefts, cls.rights);
      BivarPoly formula = BivarPoly::constant(1);
      for (int h : matching_h_vector(cls.lefts, cls.rights)) formula *= pq_integer(h);
      for (unsigned long long mask = 0; mask < (1ULL << n); ++mask) {
        std::vector<int> s;
        std::vector<int> rest;
        for (int r = 1; r <= n; ++r) (mask >> (r - 1) & 1ULL ? s : rest).push_back(cls.lefts[r - 1]);
        BivarPoly dist;
        int zeros = 0;
        for (const auto& pi : matchings) {
          const int a = mixed_alpha_matching(pi, s);
          dist.add_term(a, mixed_alpha_matching(pi, rest), 1);
          zeros += a == 0;
        }
        const auto dump = [&] {
          return "A {" + format_int_list(cls.lefts, ',') + "}; B {" +
                 format_int_list(cls.rights, ',') + "}; S {" + format_int_list(s, ',') + "}";
        };
        product.expect(dist == formula, dump);
        unique.expect(zeros == 1, dump);
      }
    }
  return {product.result(), unique.result()};
}

std::vector<CheckResult> catalan_suite(const VerifyOptions& opt) {
  Check count("alpha-zero-count");
  std::vector<long long> catalan{1};
  for (int k = 1; k <= opt.max_catalan; ++k) {
    long long c = 0;
    for (int i = 0; i < k; ++i) c += catalan[i] * catalan[k - 1 - i];
    catalan.push_back(c);
  }
  using Rule = std::function<std::vector<int>(const std::vector<int>&)>;
  const std::vector<std::pair<std::string, Rule>> rules{
      {"empty", [](const std::vector<int>&) { return std::vector<int>{}; }},
      {"all", [](const std::vector<int>& lefts) { return lefts; }},
      {"odd", [](const std::vector<int>& lefts) {
         std::vector<int> out;
         for (std::size_t k = 0; k < lefts.size(); k += 2) out.push_back(lefts[k]);
         return out;
       }}};
  for (int n = 1; n <= opt.max_catalan; ++n)
    for (const auto& [rule_name, rule] : rules) {
      long long zeros = 0;
      for (const auto& cls : endpoint_classes(n))
        for_each_matching(cls.lefts, cls.rights, [&](const Matching& pi) {
          zeros += mixed_alpha_matching(pi, rule(pi.left_endpoints())) == 0;
        });
      count.expect(zeros == catalan[n], [&] {
        return "n " + std::to_string(n) + "; rule " + rule_name + "; got " +
               std::to_string(zeros) + ", expected " + std::to_string(catalan[n]);
      });
    }
  return {count.result()};
}

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"row-mixed", "col-mixed", "product",    "psi",
                                              "rho",       "theta",     "sigma",      "h-transport",
                                              "invariance", "words",    "matchings",  "catalan"};
  return names;
}

SuiteReport run_suite(std::string_view name, const VerifyOptions& options) {
  SuiteReport report;
  report.suite = std::string(name);
  report.seed = options.seed;
  if (name == "row-mixed")
    report.checks = mixed_suite(options, {MixedStatistic::top, MixedStatistic::bottom});
  else if (name == "col-mixed")
    report.checks = mixed_suite(options, {MixedStatistic::left, MixedStatistic::right});
  else if (name == "product")
    report.checks = product_suite(options);
  else if (name == "psi")
    report.checks = psi_suite(options);
  else if (name == "rho")
    report.checks = rho_suite(options);
  else if (name == "theta")
    report.checks = theta_suite(options);
  else if (name == "sigma")
    report.checks = sigma_suite(options);
  else if (name == "h-transport")
    report.checks = h_suite(options);
  else if (name == "invariance")
    report.checks = invariance_suite(options);
  else if (name == "words")
    report.checks = words_suite(options);
  else if (name == "matchings")
    report.checks = matchings_suite(options);
  else if (name == "catalan")
    report.checks = catalan_suite(options);
  else
    throw std::invalid_argument("unknown suite '" + std::string(name) + "'");
  return report;
}

std::string format_report(const SuiteReport& report) {
  std::string out = "suite: " + report.suite + "\nseed: " + std::to_string(report.seed) + "\n";
  for (const auto& c : report.checks) {
    out += "check " + c.name + ": " + (c.passed ? "pass" : "FAIL") + " (" +
           std::to_string(c.instances) + " instances)\n";
    if (!c.passed) out += "  counterexample: " + c.counterexample + "\n";
  }
  out += std::string("result: ") + (report.passed() ? "pass" : "FAIL") + "\n";
  return out;
}

}  // namespace moonfill
