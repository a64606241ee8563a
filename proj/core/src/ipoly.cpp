#include "ipoly.hpp"

#include <cassert>

namespace feq::ipoly {

IVec primitive_part(const IVec& p) {
    Int c = content(p);
    if (sgn(c) == 0) return {};
    if (sgn(p.back()) < 0) c = -c;
    return div_scalar_exact(p, c);
}

IVec mul(const IVec& a, const IVec& b) {
    if (a.empty() || b.empty()) return {};
    IVec r(a.size() + b.size() - 1, Int(0));
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
    trim(r);
    return r;
}

IVec scale(const IVec& a, const Int& s) {
    if (sgn(s) == 0) return {};
    IVec r = a;
    for (Int& x : r) x *= s;
    return r;
}

IVec sub(const IVec& a, const IVec& b) {
    IVec r = a;
    if (b.size() > r.size()) r.resize(b.size(), Int(0));
    for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    trim(r);
    return r;
}

Int eval(const IVec& p, const Int& x) {
    Int r = 0;
    for (auto it = p.rbegin(); it != p.rend(); ++it) r = r * x + *it;
    return r;
}

IVec derivative(const IVec& p) {
    if (p.size() <= 1) return {};
    IVec r(p.size() - 1);
    for (size_t i = 1; i < p.size(); ++i) r[i - 1] = Int(static_cast<long>(i)) * p[i];
    trim(r);
    return r;
}

IVec div_scalar_exact(const IVec& a, const Int& s) {
    assert(sgn(s) != 0);
    IVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) {
        Int q, rem;
        mpz_tdiv_qr(q.get_mpz_t(), rem.get_mpz_t(), a[i].get_mpz_t(), s.get_mpz_t());
        assert(sgn(rem) == 0);
        r[i] = q;
    }
    trim(r);
    return r;
}

IVec prem(IVec a, const IVec& b) {
    assert(!b.empty());
    const int db = degree(b);
    const Int& lb = b.back();
    long e = degree(a) - db + 1;
    while (!a.empty() && degree(a) >= db) {
        const int shift = degree(a) - db;
        Int la = a.back();
        // a <- lc(b)*a - lc(a)*x^shift*b, cancelling the top coefficient
        IVec shifted(static_cast<size_t>(shift), Int(0));
        shifted.insert(shifted.end(), b.begin(), b.end());
        a = sub(scale(a, lb), scale(shifted, la));
        --e;
    }
    // degree may drop by more than one per step; the definition demands
    // exactly lc(b)^(da-db+1) scalings in total
    if (e > 0 && !a.empty()) a = scale(a, int_pow(lb, static_cast<unsigned long>(e)));
    return a;
}

bool divides(const IVec& a, const IVec& b, IVec* quotient) {
    if (b.empty()) return a.empty();
    if (a.empty()) {
        if (quotient) quotient->clear();
        return true;
    }
    if (degree(a) < degree(b)) return false;
    IVec rem = a;
    IVec q(degree(a) - degree(b) + 1, Int(0));
    const Int& lb = b.back();
    for (int k = degree(a); k >= degree(b); --k) {
        if (static_cast<size_t>(k) >= rem.size() || sgn(rem[k]) == 0) continue;
        Int qc, r;
        mpz_tdiv_qr(qc.get_mpz_t(), r.get_mpz_t(), rem[k].get_mpz_t(), lb.get_mpz_t());
        if (sgn(r) != 0) return false;
        q[k - degree(b)] = qc;
        for (int j = 0; j <= degree(b); ++j) rem[k - degree(b) + j] -= qc * b[j];
    }
    trim(rem);
    if (!rem.empty()) return false;
    if (quotient) {
        trim(q);
        *quotient = q;
    }
    return true;
}

} // namespace feq::ipoly
