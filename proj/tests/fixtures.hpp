#pragma once

#include <vector>

#include "moonfill/filling.hpp"
#include "moonfill/polyomino.hpp"

namespace fixtures {

using namespace moonfill;

inline MoonPolyomino sample_shape() {
  return validate_moon({{2, 3}, {1, 4}, {1, 5}, {1, 6}, {1, 6}, {1, 6}, {2, 3}});
}

// Row 3 empty.
inline Filling sample_filling() { return Filling(sample_shape(), {3, 4, 0, 5, 1, 3, 2}); }

inline const std::vector<int>& sample_e() {
  static const std::vector<int> e{1, 1, 0, 1, 1, 1, 1};
  return e;
}

inline const std::vector<int>& sample_s() {
  static const std::vector<int> s{1, 1, 2, 1, 1, 0};
  return s;
}

inline MoonPolyomino chain_sample_shape() {
  return validate_moon({{2, 3}, {1, 3}, {1, 5}, {1, 6}, {1, 6}, {1, 5}, {3, 3}});
}

inline Filling chain_sample_input() { return Filling(chain_sample_shape(), {2, 3, 1, 3, 6, 4, 3}); }
inline Filling chain_sample_intermediate() { return Filling(chain_sample_shape(), {2, 3, 3, 4, 6, 1, 3}); }
inline Filling chain_sample_output() { return Filling(chain_sample_shape(), {2, 3, 1, 4, 6, 3, 3}); }

inline MoonPolyomino align_sample_shape() {
  return validate_moon({{4, 5}, {3, 5}, {2, 5}, {1, 6}, {1, 7}, {1, 7}, {3, 5}});
}

inline MoonPolyomino rectangle(int n, int m) {
  return validate_moon(std::vector<RowInterval>(n, RowInterval{1, m}));
}

/// Shapes used by the exhaustive bijection checks.
inline std::vector<MoonPolyomino> small_shapes() {
  return {
      rectangle(1, 1),
      rectangle(2, 2),
      rectangle(3, 3),
      rectangle(2, 4),
      validate_moon({{1, 3}, {1, 2}, {1, 1}}),
      validate_moon({{2, 2}, {1, 3}, {1, 3}, {2, 3}}),
      validate_moon({{2, 3}, {1, 4}, {1, 3}, {2, 2}}),
      validate_moon({{3, 3}, {2, 4}, {1, 4}, {1, 5}, {2, 4}}),
      validate_moon({{2, 3}, {1, 4}, {2, 4}, {3, 3}}),
      chain_sample_shape(),
      sample_shape(),
  };
}

}  // namespace fixtures
