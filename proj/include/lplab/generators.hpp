#pragma once

#include <cstdint>

#include "lplab/geometry.hpp"

namespace lplab {

/// {1..k}^2. Spans exactly k - 1 distinct l_inf distances.
PointSet grid(int k);

/// k horizontal rows y = a; row a holds x = (b_a + a') / (10n), a' = 1..k,
/// n = k^2, with the rational offset b_a = a / (100 n^2). All x-coordinates
/// are distinct and the set spans exactly 2k - 2 distinct l_inf distances.
PointSet row_construction(int k);

/// Offset used by row_construction for row a.
Rational row_offset(int a, int k);

struct Box {
    Rational x_min, x_max, y_min, y_max;
};

/// n distinct points drawn uniformly from the lattice (1/denom_bound) Z^2
/// clipped to the box; deterministic in the seed.
PointSet random_rational(int n, std::uint64_t seed, const Box& box, int denom_bound);

}  // namespace lplab
