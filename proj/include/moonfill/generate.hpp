#pragma once

#include <cstdint>
#include <random>

#include "moonfill/filling.hpp"

namespace moonfill {

using Rng = std::mt19937_64;

inline constexpr std::uint64_t default_seed = 20240601;

/// A random moon polyomino with ceil(max/2)..max rows and columns:
/// a containment chain of intervals, longest first, dealt to the top or
/// the bottom of the stack.
MoonPolyomino random_moon(Rng& rng, int max_rows, int max_cols);

/// Each row gets a 1 with probability `density`, in a uniform column of
/// its interval. Its sums give a feasible (e, s).
Filling random_filling(const MoonPolyomino& shape, Rng& rng, double density = 0.6);

}  // namespace moonfill
