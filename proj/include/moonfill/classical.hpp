#pragma once

#include <functional>
#include <span>
#include <vector>

#include "moonfill/filling.hpp"

namespace moonfill {

/// A word w_1..w_n over the alphabet [m].
using Word = std::vector<int>;

/// n x m rectangle filling with the 1 of letter w_i in row n+1-i, column w_i.
/// Throws LetterOutOfRange.
Filling word_to_filling(std::span<const int> word, int m);

int inv(std::span<const int> word);
int coinv(std::span<const int> word);

/// The four mixed statistics on a word. For top/bottom the subset holds row
/// indices of the associated filling (position i sits in row n+1-i); for
/// left/right it holds letters. Throws IndexOutOfRange, LetterOutOfRange.
int word_mixed(std::span<const int> word, int m, MixedStatistic kind,
               std::span<const int> subset);

/// Same statistic with top/bottom subsets given as word positions.
int word_mixed_by_position(std::span<const int> word, int m, MixedStatistic kind,
                           std::span<const int> positions);

struct Arc {
  int left = 1;
  int right = 2;
  friend auto operator<=>(const Arc&, const Arc&) = default;
};

/// A perfect matching on [2n], arcs sorted by left endpoint.
class Matching {
 public:
  /// Throws InvalidEndpointSets unless the arcs pair off [2n] with left < right.
  explicit Matching(std::vector<Arc> arcs);

  int size() const { return static_cast<int>(arcs_.size()); }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::vector<int> left_endpoints() const;
  std::vector<int> right_endpoints() const;

  friend bool operator==(const Matching&, const Matching&) = default;
  friend auto operator<=>(const Matching& a, const Matching& b) { return a.arcs_ <=> b.arcs_; }

 private:
  std::vector<Arc> arcs_;
};

/// Ferrers filling: row r is l_r, column c is r_{n+1-c}, and the cell
/// (l, r) exists iff l < r.
Filling matching_to_filling(const Matching& matching);

int crossings(const Matching& matching);
int nestings(const Matching& matching);

/// S-crossings plus complement-nestings; `lefts` are left endpoint values.
/// Throws IndexOutOfRange for a value that is not a left endpoint.
int mixed_alpha_matching(const Matching& matching, std::span<const int> lefts);

/// h_i = #{a in A : a < r_i} - (i - 1), indexed by r_1 < ... < r_n.
std::vector<int> matching_h_vector(std::span<const int> lefts, std::span<const int> rights);

/// Throws InvalidEndpointSets unless A and B partition [2n] and every prefix
/// holds at least as many elements of A as of B.
void check_endpoint_sets(std::span<const int> lefts, std::span<const int> rights);

using MatchingVisitor = std::function<void(const Matching&)>;

void for_each_matching(std::span<const int> lefts, std::span<const int> rights,
                       const MatchingVisitor& visit);
std::vector<Matching> enumerate_matchings(std::span<const int> lefts,
                                          std::span<const int> rights);

struct EndpointClass {
  std::vector<int> lefts;
  std::vector<int> rights;
};

/// Every valid (A, B) on [2n], in lexicographic order of A.
std::vector<EndpointClass> endpoint_classes(int n);

}  // namespace moonfill
