#pragma once

// Brute-force reference implementations. They share no code paths with the
// library beyond the shape and filling containers.

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <utility>
#include <vector>

#include "moonfill/filling.hpp"
#include "moonfill/polyomino.hpp"
#include "moonfill/pq_poly.hpp"

namespace oracle {

using namespace moonfill;

/// Every filling of the shape with at most one 1 per row, any sums.
inline void for_each_raw_filling(const MoonPolyomino& shape,
                                 const std::function<void(const Filling&)>& visit) {
  const int n = shape.rows();
  std::vector<int> cols(n, 0);
  while (true) {
    visit(Filling(shape, cols));
    int r = n - 1;
    while (r >= 0) {
      if (cols[r] == 0) {
        cols[r] = shape.row(r + 1).left;
        break;
      }
      if (cols[r] < shape.row(r + 1).right) {
        ++cols[r];
        break;
      }
      cols[r] = 0;
      --r;
    }
    if (r < 0) return;
  }
}

inline std::vector<Filling> fillings(const MoonPolyomino& shape, const std::vector<int>& e,
                                     const std::vector<int>& s) {
  std::vector<Filling> out;
  for_each_raw_filling(shape, [&](const Filling& f) {
    if (f.row_sums() == e && f.col_sums() == s) out.push_back(f);
  });
  std::sort(out.begin(), out.end());
  return out;
}

/// Distinct (e, s) pairs realized by some filling, each with its fillings.
inline std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<Filling>> classes(
    const MoonPolyomino& shape) {
  std::map<std::pair<std::vector<int>, std::vector<int>>, std::vector<Filling>> out;
  for_each_raw_filling(shape, [&](const Filling& f) {
    out[{f.row_sums(), f.col_sums()}].push_back(f);
  });
  return out;
}

struct RawChain {
  int r1, c1, r2, c2;  // r1 < r2
  bool ne;
};

/// Chains found by checking every cell of each bounding rectangle.
inline std::vector<RawChain> raw_chains(const Filling& f) {
  std::vector<RawChain> out;
  const auto& shape = f.shape();
  for (int r1 = 1; r1 <= f.rows(); ++r1) {
    for (int r2 = r1 + 1; r2 <= f.rows(); ++r2) {
      const int c1 = f.column_of_row(r1);
      const int c2 = f.column_of_row(r2);
      if (c1 == 0 || c2 == 0 || c1 == c2) continue;
      bool inside = true;
      for (int r = r1; r <= r2 && inside; ++r)
        for (int c = std::min(c1, c2); c <= std::max(c1, c2) && inside; ++c)
          inside = shape.contains(r, c);
      if (inside) out.push_back({r1, c1, r2, c2, c1 > c2});
    }
  }
  return out;
}

inline int ne(const Filling& f) {
  int n = 0;
  for (const auto& c : raw_chains(f)) n += c.ne ? 1 : 0;
  return n;
}

inline int se(const Filling& f) {
  int n = 0;
  for (const auto& c : raw_chains(f)) n += c.ne ? 0 : 1;
  return n;
}

/// kind: 0 top (row of upper), 1 bottom (row of lower), 2 left (column of
/// left cell), 3 right (column of right cell).
inline int mixed(const Filling& f, int kind, const std::set<int>& a) {
  int n = 0;
  for (const auto& c : raw_chains(f)) {
    int anchor = 0;
    switch (kind) {
      case 0: anchor = c.r1; break;
      case 1: anchor = c.r2; break;
      case 2: anchor = std::min(c.c1, c.c2); break;
      default: anchor = std::max(c.c1, c.c2); break;
    }
    const bool in = a.count(anchor) > 0;
    n += (in == c.ne) ? 1 : 0;
  }
  return n;
}

inline std::set<int> complement(const std::set<int>& a, int universe) {
  std::set<int> out;
  for (int i = 1; i <= universe; ++i)
    if (!a.count(i)) out.insert(i);
  return out;
}

inline std::set<int> subset_of_mask(unsigned mask, int universe) {
  std::set<int> out;
  for (int i = 1; i <= universe; ++i)
    if (mask >> (i - 1) & 1U) out.insert(i);
  return out;
}

/// Widest rectangle spanning exactly the rows of column i with column i as
/// its left (left-part) or right (right-part) edge, found by scanning all
/// candidate widths cell by cell. `excluded` columns may not be included.
inline Rectangle widest_rectangle(const MoonPolyomino& shape, int i, bool leftmost,
                                  const std::function<bool(int)>& excluded) {
  const ColumnSpan span = shape.column(i);
  Rectangle best{span.top, span.bottom, i, i};
  for (int w = 1; w <= shape.cols(); ++w) {
    const int left = leftmost ? i : i - w + 1;
    const int right = leftmost ? i + w - 1 : i;
    if (left < 1 || right > shape.cols()) break;
    bool ok = true;
    for (int c = left; c <= right && ok; ++c) {
      if (c != i && excluded(c)) ok = false;
      for (int r = span.top; r <= span.bottom && ok; ++r) ok = shape.contains(r, c);
    }
    if (!ok) break;
    best = {span.top, span.bottom, left, right};
  }
  return best;
}

/// Available cells per column, simulated by placing 1s greedily in the
/// topmost free nonempty rows while walking columns in `order`.
inline std::vector<int> simulated_h(const MoonPolyomino& shape, const std::vector<int>& e,
                                    const std::vector<int>& s, const std::vector<int>& order) {
  std::vector<int> h(shape.cols(), 0);
  std::vector<char> used(shape.rows() + 1, 0);
  for (int j : order) {
    std::vector<int> free_rows;
    for (int r = shape.column(j).top; r <= shape.column(j).bottom; ++r)
      if (e[r - 1] == 1 && !used[r]) free_rows.push_back(r);
    h[j - 1] = static_cast<int>(free_rows.size());
    for (int k = 0; k < s[j - 1] && k < static_cast<int>(free_rows.size()); ++k)
      used[free_rows[k]] = 1;
  }
  return h;
}

/// sum over rearrangements of the multiset of p^inv q^coinv.
inline BivarPoly word_distribution(std::vector<int> letters) {
  std::sort(letters.begin(), letters.end());
  BivarPoly out;
  do {
    int inv = 0;
    int coinv = 0;
    for (std::size_t i = 0; i < letters.size(); ++i)
      for (std::size_t j = i + 1; j < letters.size(); ++j) {
        inv += letters[i] > letters[j] ? 1 : 0;
        coinv += letters[i] < letters[j] ? 1 : 0;
      }
    out.add_term(inv, coinv, 1);
  } while (std::next_permutation(letters.begin(), letters.end()));
  return out;
}

/// C_0 = 1, C_{n+1} = sum C_i C_{n-i}.
inline std::vector<long long> catalan(int n) {
  std::vector<long long> c(n + 1, 0);
  c[0] = 1;
  for (int k = 1; k <= n; ++k)
    for (int i = 0; i < k; ++i) c[k] += c[i] * c[k - 1 - i];
  return c;
}

/// All perfect matchings on [2n] as sorted (l, r) arc lists.
inline std::vector<std::vector<std::pair<int, int>>> all_matchings(int n) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> arcs;
  std::vector<char> used(2 * n + 1, 0);
  std::function<void()> go = [&] {
    int first = 1;
    while (first <= 2 * n && used[first]) ++first;
    if (first > 2 * n) {
      out.push_back(arcs);
      return;
    }
    used[first] = 1;
    for (int r = first + 1; r <= 2 * n; ++r) {
      if (used[r]) continue;
      used[r] = 1;
      arcs.push_back({first, r});
      go();
      arcs.pop_back();
      used[r] = 0;
    }
    used[first] = 0;
  };
  go();
  return out;
}

/// Every moon polyomino with at most max_rows rows and exactly `cols` columns.
inline std::vector<MoonPolyomino> all_moons(int max_rows, int cols) {
  std::vector<RowInterval> intervals;
  for (int l = 1; l <= cols; ++l)
    for (int r = l; r <= cols; ++r) intervals.push_back({l, r});
  std::vector<MoonPolyomino> out;
  for (int n = 1; n <= max_rows; ++n) {
    std::vector<std::size_t> idx(n, 0);
    while (true) {
      std::vector<RowInterval> rows;
      for (auto k : idx) rows.push_back(intervals[k]);
      if (auto shape = try_moon(rows); shape && shape->cols() == cols)
        out.push_back(*shape);
      int p = n - 1;
      while (p >= 0 && ++idx[p] == intervals.size()) idx[p--] = 0;
      if (p < 0) break;
    }
  }
  return out;
}

}  // namespace oracle
