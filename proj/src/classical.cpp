#include "moonfill/classical.hpp"

#include <algorithm>
#include <string>

#include "moonfill/error.hpp"

namespace moonfill {

namespace {

void check_letters(std::span<const int> word, int m) {
  for (std::size_t i = 0; i < word.size(); ++i)
    if (word[i] < 1 || word[i] > m)
      throw Error(ErrorKind::LetterOutOfRange,
                  "letter " + std::to_string(word[i]) + " at position " + std::to_string(i + 1) +
                      " outside 1.." + std::to_string(m),
                  {static_cast<int>(i) + 1});
}

std::vector<char> subset_mask(std::span<const int> subset, int universe) {
  std::vector<char> mask(universe + 1, 0);
  for (int x : subset) {
    if (x < 1 || x > universe)
      throw Error(ErrorKind::IndexOutOfRange,
                  "index " + std::to_string(x) + " outside 1.." + std::to_string(universe), {x});
    mask[x] = 1;
  }
  return mask;
}

}  // namespace

Filling word_to_filling(std::span<const int> word, int m) {
  check_letters(word, m);
  const int n = static_cast<int>(word.size());
  if (n == 0 || m < 1) throw Error(ErrorKind::EmptyShape, "word filling needs n, m >= 1");
  std::vector<int> cols(n);
  for (int i = 1; i <= n; ++i) cols[n - i] = word[i - 1];
  return Filling(validate_moon(std::vector<RowInterval>(n, RowInterval{1, m})), std::move(cols));
}

int inv(std::span<const int> word) {
  int count = 0;
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = i + 1; j < word.size(); ++j) count += word[i] > word[j];
  return count;
}

int coinv(std::span<const int> word) {
  int count = 0;
  for (std::size_t i = 0; i < word.size(); ++i)
    for (std::size_t j = i + 1; j < word.size(); ++j) count += word[i] < word[j];
  return count;
}

int word_mixed(std::span<const int> word, int m, MixedStatistic kind,
               std::span<const int> subset) {
  check_letters(word, m);
  const int n = static_cast<int>(word.size());
  const bool by_row = kind == MixedStatistic::top || kind == MixedStatistic::bottom;
  const auto mask = subset_mask(subset, by_row ? n : m);
  int count = 0;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j) {
      const int a = word[i - 1];
      const int b = word[j - 1];
      if (a == b) continue;
      const bool co = a < b;
      bool in = false;
      switch (kind) {
        case MixedStatistic::top: in = mask[n + 1 - j]; break;
        case MixedStatistic::bottom: in = mask[n + 1 - i]; break;
        case MixedStatistic::left: in = co ? mask[a] : mask[b]; break;
        case MixedStatistic::right: in = co ? mask[b] : mask[a]; break;
      }
      count += co == in;
    }
  return count;
}

int word_mixed_by_position(std::span<const int> word, int m, MixedStatistic kind,
                           std::span<const int> positions) {
  if (kind == MixedStatistic::left || kind == MixedStatistic::right)
    return word_mixed(word, m, kind, positions);
  const int n = static_cast<int>(word.size());
  subset_mask(positions, n);
  std::vector<int> rows;
  for (int i : positions) rows.push_back(n + 1 - i);
  return word_mixed(word, m, kind, rows);
}

Matching::Matching(std::vector<Arc> arcs) : arcs_(std::move(arcs)) {
  std::sort(arcs_.begin(), arcs_.end());
  const int n2 = 2 * size();
  std::vector<char> seen(n2 + 1, 0);
  for (const Arc& a : arcs_) {
    if (a.left >= a.right || a.left < 1 || a.right > n2 || seen[a.left] || seen[a.right])
      throw Error(ErrorKind::InvalidEndpointSets,
                  "arc (" + std::to_string(a.left) + "," + std::to_string(a.right) +
                      ") does not fit a matching on 1.." + std::to_string(n2),
                  {a.left, a.right});
    seen[a.left] = seen[a.right] = 1;
  }
}

std::vector<int> Matching::left_endpoints() const {
  std::vector<int> out;
  for (const Arc& a : arcs_) out.push_back(a.left);
  return out;
}

std::vector<int> Matching::right_endpoints() const {
  std::vector<int> out;
  for (const Arc& a : arcs_) out.push_back(a.right);
  std::sort(out.begin(), out.end());
  return out;
}

Filling matching_to_filling(const Matching& matching) {
  const int n = matching.size();
  if (n == 0) throw Error(ErrorKind::EmptyShape, "empty matching");
  const auto lefts = matching.left_endpoints();
  const auto rights = matching.right_endpoints();
  // Column c holds r_{n+1-c}.
  const auto column_of = [&](int r) {
    const auto k = std::lower_bound(rights.begin(), rights.end(), r) - rights.begin() + 1;
    return n + 1 - static_cast<int>(k);
  };
  std::vector<RowInterval> rows;
  std::vector<int> cols;
  for (int r = 0; r < n; ++r) {
    const int longer = static_cast<int>(rights.end() -
                                        std::upper_bound(rights.begin(), rights.end(), lefts[r]));
    rows.push_back({1, longer});
    cols.push_back(column_of(matching.arcs()[r].right));
  }
  return Filling(validate_moon(std::move(rows)), std::move(cols));
}

namespace {

// Calls count(first left endpoint, is_crossing) for each crossing or nesting.
template <typename Count>
void for_each_pair(const Matching& matching, Count count) {
  const auto& arcs = matching.arcs();
  for (std::size_t x = 0; x < arcs.size(); ++x)
    for (std::size_t y = x + 1; y < arcs.size(); ++y) {
      const Arc& a = arcs[x];
      const Arc& b = arcs[y];
      if (b.left > a.right) continue;
      count(a.left, b.right > a.right);
    }
}

}  // namespace

int crossings(const Matching& matching) {
  int total = 0;
  for_each_pair(matching, [&](int, bool crossing) { total += crossing; });
  return total;
}

int nestings(const Matching& matching) {
  int total = 0;
  for_each_pair(matching, [&](int, bool crossing) { total += !crossing; });
  return total;
}

int mixed_alpha_matching(const Matching& matching, std::span<const int> lefts) {
  const auto mask = subset_mask(lefts, 2 * matching.size());
  const auto own = matching.left_endpoints();
  for (int l : lefts)
    if (!std::binary_search(own.begin(), own.end(), l))
      throw Error(ErrorKind::IndexOutOfRange,
                  std::to_string(l) + " is not a left endpoint", {l});
  int total = 0;
  for_each_pair(matching, [&](int first, bool crossing) { total += crossing == bool(mask[first]); });
  return total;
}

void check_endpoint_sets(std::span<const int> lefts, std::span<const int> rights) {
  const int n2 = static_cast<int>(lefts.size() + rights.size());
  if (lefts.size() != rights.size() || n2 == 0)
    throw Error(ErrorKind::InvalidEndpointSets, "endpoint sets must be nonempty and equal-sized");
  std::vector<int> side(n2 + 1, 0);
  const auto mark = [&](int x, int tag) {
    if (x < 1 || x > n2 || side[x] != 0)
      throw Error(ErrorKind::InvalidEndpointSets,
                  "endpoint " + std::to_string(x) + " repeated or outside 1.." + std::to_string(n2),
                  {x});
    side[x] = tag;
  };
  for (int x : lefts) mark(x, 1);
  for (int x : rights) mark(x, -1);
  int open = 0;
  for (int x = 1; x <= n2; ++x) {
    open += side[x];
    if (open < 0)
      throw Error(ErrorKind::InvalidEndpointSets,
                  "prefix 1.." + std::to_string(x) + " has more right than left endpoints", {x});
  }
}

std::vector<int> matching_h_vector(std::span<const int> lefts, std::span<const int> rights) {
  check_endpoint_sets(lefts, rights);
  std::vector<int> a(lefts.begin(), lefts.end());
  std::vector<int> b(rights.begin(), rights.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<int> h;
  for (std::size_t i = 0; i < b.size(); ++i) {
    const auto before = std::lower_bound(a.begin(), a.end(), b[i]) - a.begin();
    h.push_back(static_cast<int>(before) - static_cast<int>(i));
  }
  return h;
}

void for_each_matching(std::span<const int> lefts, std::span<const int> rights,
                       const MatchingVisitor& visit) {
  check_endpoint_sets(lefts, rights);
  std::vector<int> a(lefts.begin(), lefts.end());
  std::vector<int> b(rights.begin(), rights.end());
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  std::vector<char> used(a.size(), 0);
  std::vector<Arc> arcs;
  std::function<void(std::size_t)> step = [&](std::size_t k) {
    if (k == b.size()) {
      visit(Matching(arcs));
      return;
    }
    for (std::size_t x = 0; x < a.size() && a[x] < b[k]; ++x) {
      if (used[x]) continue;
      used[x] = 1;
      arcs.push_back({a[x], b[k]});
      step(k + 1);
      arcs.pop_back();
      used[x] = 0;
    }
  };
  step(0);
}

std::vector<Matching> enumerate_matchings(std::span<const int> lefts,
                                          std::span<const int> rights) {
  std::vector<Matching> out;
  for_each_matching(lefts, rights, [&](const Matching& m) { out.push_back(m); });
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<EndpointClass> endpoint_classes(int n) {
  std::vector<EndpointClass> out;
  EndpointClass current;
  std::function<void(int, int)> step = [&](int x, int open) {
    if (x > 2 * n) {
      out.push_back(current);
      return;
    }
    if (static_cast<int>(current.lefts.size()) < n) {
      current.lefts.push_back(x);
      step(x + 1, open + 1);
      current.lefts.pop_back();
    }
    if (open > 0) {
      current.rights.push_back(x);
      step(x + 1, open - 1);
      current.rights.pop_back();
    }
  };
  if (n >= 1) step(1, 0);
  return out;
}

}  // namespace moonfill
