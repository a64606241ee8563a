#pragma once

#include <vector>

#include "feq/cond_expr.hpp"
#include "feq/equation.hpp"

namespace feq {

/// Exhaustive search over embedding tuples (h_1, ..., h_p) in {0..d-1}^p for
/// the tuples whose automorphism system annihilates every condition
///
///   sum_i a_i * C(p, l) * prod_{j in S} phi_{h_j}(alpha_i)
///                       * prod_{j not in S} phi_{h_j}(beta_i)  =  0
///
/// over all role subsets S (equivalently all (l, sigma) pairs, deduplicated:
/// subsets inducing the same multiset of root/role assignments are checked
/// once). The coefficients a_i are taken at the distinguished root.
/// Pre: the spec validates. Results come in lexicographic tuple order.
std::vector<EmbeddingTuple> kernel_search(const EquationSpec& spec, int p,
                                          const PrecisionPolicy& pp = {});

} // namespace feq
