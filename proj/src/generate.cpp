#include "moonfill/generate.hpp"

#include <deque>

namespace moonfill {

namespace {

int uniform(Rng& rng, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng); }

}  // namespace

MoonPolyomino random_moon(Rng& rng, int max_rows, int max_cols) {
  const int n = uniform(rng, (max_rows + 1) / 2, max_rows);
  const int m = uniform(rng, (max_cols + 1) / 2, max_cols);
  std::deque<RowInterval> rows{{1, m}};
  RowInterval current{1, m};
  for (int k = 1; k < n; ++k) {
    if (uniform(rng, 0, 1) == 0 && current.length() > 1) {
      const int shrink = uniform(rng, 1, current.length() - 1);
      const int from_left = uniform(rng, 0, shrink);
      current = {current.left + from_left, current.right - (shrink - from_left)};
    }
    if (uniform(rng, 0, 1) == 0)
      rows.push_front(current);
    else
      rows.push_back(current);
  }
  return validate_moon({rows.begin(), rows.end()});
}

Filling random_filling(const MoonPolyomino& shape, Rng& rng, double density) {
  std::bernoulli_distribution pick(density);
  std::vector<int> cols(shape.rows(), 0);
  for (int r = 1; r <= shape.rows(); ++r)
    if (pick(rng)) cols[r - 1] = uniform(rng, shape.row(r).left, shape.row(r).right);
  return Filling(shape, std::move(cols));
}

}  // namespace moonfill
