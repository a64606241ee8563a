#pragma once

// Internal helpers for integer-coefficient polynomial sequences
// (subresultants, factor search). Not installed.

#include <vector>

#include "feq/rational.hpp"

namespace feq::ipoly {

using IVec = std::vector<Int>; // lowest degree first, trimmed

inline void trim(IVec& p) {
    while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

inline int degree(const IVec& p) { return static_cast<int>(p.size()) - 1; }

inline Int content(const IVec& p) {
    Int c = 0;
    for (const Int& a : p) c = int_gcd(c, a);
    return c;
}

IVec primitive_part(const IVec& p);
IVec mul(const IVec& a, const IVec& b);
IVec scale(const IVec& a, const Int& s);
/// a - b, trimmed.
IVec sub(const IVec& a, const IVec& b);
Int eval(const IVec& p, const Int& x);
IVec derivative(const IVec& p);
/// Exact division by a scalar; asserts divisibility.
IVec div_scalar_exact(const IVec& a, const Int& s);
/// Pseudo-remainder: lc(b)^(deg a - deg b + 1) * a mod b. Pre: b != 0, deg a >= deg b.
IVec prem(IVec a, const IVec& b);
/// Exact polynomial division; returns false if b does not divide a over Z.
bool divides(const IVec& a, const IVec& b, IVec* quotient = nullptr);

} // namespace feq::ipoly
