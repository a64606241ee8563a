#pragma once

#include <vector>

#include "feq/ball.hpp"
#include "feq/unipoly.hpp"

namespace feq {

/// Isolates all complex roots of a squarefree polynomial. Returns exactly
/// deg(m) pairwise-disjoint Balls, each containing one root, each with
/// radius <= 2^-precision_bits, ordered by descending real midpoint and
/// then descending imaginary midpoint. Throws NotSquarefree when
/// gcd(m, m') is non-constant.
std::vector<Ball> root_isolate(const UniPoly& m, int precision_bits);

} // namespace feq
