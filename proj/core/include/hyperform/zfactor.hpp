#pragma once

#include <utility>
#include <vector>

#include "hyperform/upoly.hpp"

namespace hyperform {

/// Complete factorization over Q. Factors are monic irreducible; the
/// rational leading content is dropped. Deterministic output order
/// (sorted by degree, then coefficient sequence).
std::vector<std::pair<QPoly, int>> factor_rational_poly(const QPoly& p);

bool is_irreducible_q(const QPoly& p);

/// Rational roots of p (the degree-1 factors).
std::vector<Rational> rational_roots(const QPoly& p);

} // namespace hyperform
