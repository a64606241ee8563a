#include "feq/cond_expr.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "ipoly.hpp"

#include <atomic>

namespace feq {

namespace {
std::atomic<long> g_precision_high_water{0};
}

long precision_high_water() { return g_precision_high_water.load(); }
void reset_precision_high_water() { g_precision_high_water.store(0); }

namespace {

// u^k reduced modulo the monic minimal polynomial, as a coefficient vector
// of length deg(field)
std::vector<Rational> power_rep(const NumberField& field, int k) {
    const int d = field.degree();
    std::vector<Rational> rep(static_cast<size_t>(d));
    if (k < d) {
        rep[static_cast<size_t>(k)] = Rational(1);
        return rep;
    }
    rep[static_cast<size_t>(d - 1)] = Rational(1); // u^(d-1)
    const UniPoly& m = field.min_poly();
    for (int step = d - 1; step < k; ++step) {
        // multiply by u: shift, then reduce the overflowing top term
        Rational top = rep[static_cast<size_t>(d - 1)];
        for (int j = d - 1; j >= 1; --j) rep[static_cast<size_t>(j)] = rep[static_cast<size_t>(j - 1)];
        rep[0] = Rational(0);
        if (!top.is_zero())
            for (int j = 0; j < d; ++j) rep[static_cast<size_t>(j)] -= top * m.coeff(j);
    }
    return rep;
}

} // namespace

CondExpr::CondExpr(NumberField::Ptr field, int embedding_vars)
    : field_(std::move(field)), total_vars_(embedding_vars + 1) {
    if (!field_) throw PreconditionFailed("condition expression without a field");
    if (embedding_vars < 0) throw PreconditionFailed("negative variable count");
}

CondExpr CondExpr::from_element(NumberField::Ptr field, int embedding_vars, const FieldElement& e,
                                int var) {
    CondExpr out(std::move(field), embedding_vars);
    if (var < 0 || var >= out.total_vars_) throw PreconditionFailed("variable slot out of range");
    std::vector<int> exps(static_cast<size_t>(out.total_vars_), 0);
    for (size_t k = 0; k < e.coeffs().size(); ++k) {
        if (e.coeffs()[k].is_zero()) continue;
        exps[static_cast<size_t>(var)] = static_cast<int>(k);
        out.add_monomial(exps, e.coeffs()[k]);
    }
    return out;
}

CondExpr CondExpr::constant(NumberField::Ptr field, int embedding_vars, const Rational& c) {
    CondExpr out(std::move(field), embedding_vars);
    out.add_monomial(std::vector<int>(static_cast<size_t>(embedding_vars) + 1, 0), c);
    return out;
}

void CondExpr::add_monomial(const std::vector<int>& exps, const Rational& c) {
    if (static_cast<int>(exps.size()) != total_vars_)
        throw PreconditionFailed("exponent vector length mismatch");
    if (c.is_zero()) return;
    const int d = field_->degree();
    // reduce the first oversized exponent and recurse on the pieces
    for (size_t j = 0; j < exps.size(); ++j) {
        if (exps[j] < 0) throw PreconditionFailed("negative exponent");
        if (exps[j] >= d) {
            const std::vector<Rational> rep = power_rep(*field_, exps[j]);
            std::vector<int> next = exps;
            for (int q = 0; q < d; ++q) {
                if (rep[static_cast<size_t>(q)].is_zero()) continue;
                next[j] = q;
                add_monomial(next, c * rep[static_cast<size_t>(q)]);
            }
            return;
        }
    }
    auto it = terms_.find(exps);
    if (it == terms_.end()) {
        terms_.emplace(exps, c);
    } else {
        it->second += c;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

CondExpr& CondExpr::operator+=(const CondExpr& o) {
    if (total_vars_ != o.total_vars_ || !field_->same_field(*o.field_))
        throw PreconditionFailed("incompatible condition expressions");
    for (const auto& [e, c] : o.terms_) add_monomial(e, c);
    return *this;
}

CondExpr operator*(const CondExpr& a, const CondExpr& b) {
    if (a.total_vars_ != b.total_vars_ || !a.field_->same_field(*b.field_))
        throw PreconditionFailed("incompatible condition expressions");
    CondExpr out(a.field_, a.total_vars_ - 1);
    std::vector<int> exps(static_cast<size_t>(a.total_vars_));
    for (const auto& [ea, ca] : a.terms_)
        for (const auto& [eb, cb] : b.terms_) {
            for (size_t j = 0; j < exps.size(); ++j) exps[j] = ea[j] + eb[j];
            out.add_monomial(exps, ca * cb);
        }
    return out;
}

CondExpr CondExpr::scaled(const Rational& s) const {
    CondExpr out(field_, total_vars_ - 1);
    if (s.is_zero()) return out;
    for (const auto& [e, c] : terms_) out.terms_.emplace(e, c * s);
    return out;
}

long CondExpr::zero_floor_bits() const {
    // Clear denominators (q), pass to the algebraic integers theta_h = b*s_h
    // (b the leading coefficient of the primitive integer minimal polynomial).
    // w = q * b^Dtot * value is then an algebraic integer of degree at most
    // D = d^(p+1); if w != 0 its norm is a nonzero rational integer, so
    // |w| >= 1/U^(D-1) with U an upper bound on |w| over all conjugate tuples.
    const ipoly::IVec M = integer_primitive(field_->min_poly());
    const Int b = M.back();
    Int theta(0); // bound on |theta_h| = b|s_h| <= b + max |M_i|, Cauchy
    for (size_t i = 0; i + 1 < M.size(); ++i) {
        Int a;
        mpz_abs(a.get_mpz_t(), M[i].get_mpz_t());
        if (a > theta) theta = a;
    }
    theta += b;
    if (theta < 1) theta = 1;

    Int q(1);
    for (const auto& [e, c] : terms_) q = int_lcm(q, c.denominator());
    long dtot = 0;
    {
        std::vector<int> maxdeg(static_cast<size_t>(total_vars_), 0);
        for (const auto& [e, c] : terms_)
            for (size_t j = 0; j < e.size(); ++j) maxdeg[j] = std::max(maxdeg[j], e[j]);
        for (int m : maxdeg) dtot += m;
    }

    Int U(0);
    for (const auto& [e, c] : terms_) {
        long tot = 0;
        for (int x : e) tot += x;
        Int num;
        mpz_abs(num.get_mpz_t(), c.numerator().get_mpz_t());
        U += num * (q / c.denominator()) * int_pow(b, static_cast<unsigned long>(dtot - tot)) *
             int_pow(theta, static_cast<unsigned long>(tot));
    }
    if (U < 1) U = 1;

    const double log2_d = field_->degree() > 1 ? std::log2(static_cast<double>(field_->degree())) : 0.0;
    const double D = std::pow(2.0, log2_d * total_vars_); // d^(p+1)
    const double bits_q = static_cast<double>(mpz_sizeinbase(q.get_mpz_t(), 2));
    const double bits_b = static_cast<double>(mpz_sizeinbase(b.get_mpz_t(), 2));
    const double bits_u = static_cast<double>(mpz_sizeinbase(U.get_mpz_t(), 2));
    const double total = bits_q + static_cast<double>(dtot) * bits_b + (D - 1.0) * bits_u + 2.0;
    if (total > 1e15) return static_cast<long>(1e15);
    return static_cast<long>(total) + 1;
}

bool is_zero_at_tuple(const CondExpr& e, int identity_index, const EmbeddingTuple& tuple,
                      const PrecisionPolicy& pp) {
    if (static_cast<int>(tuple.indices.size()) != e.embedding_vars())
        throw PreconditionFailed("tuple length does not match the expression");
    if (e.identically_zero()) return true;
    const NumberField::Ptr& field = e.field();
    const int d = field->degree();
    std::vector<int> slot_root(static_cast<size_t>(e.total_vars()));
    slot_root[0] = identity_index;
    for (size_t j = 0; j < tuple.indices.size(); ++j) slot_root[j + 1] = tuple.indices[j];
    for (int idx : slot_root)
        if (idx < 0 || idx >= d) throw PreconditionFailed("root index out of range");

    // degree-1 field: the reduced expression is a rational constant
    if (d == 1) return false; // a nonzero constant

    std::vector<int> maxdeg(slot_root.size(), 0);
    for (const auto& [exps, c] : e.terms())
        for (size_t j = 0; j < exps.size(); ++j) maxdeg[j] = std::max(maxdeg[j], exps[j]);

    const long floor_bits = e.zero_floor_bits();
    long w = std::max<long>(pp.start_bits, 64);
    for (;;) {
        long seen = g_precision_high_water.load();
        while (seen < w && !g_precision_high_water.compare_exchange_weak(seen, w)) {
        }
        // per-slot power tables of the root enclosures
        std::vector<std::vector<Ball>> pows(slot_root.size());
        for (size_t j = 0; j < slot_root.size(); ++j) {
            if (maxdeg[j] == 0) continue;
            pows[j].reserve(static_cast<size_t>(maxdeg[j]));
            const Ball root = field->root_ball(slot_root[j], static_cast<int>(w));
            pows[j].push_back(root);
            for (int k = 2; k <= maxdeg[j]; ++k) pows[j].push_back(ball_mul(pows[j].back(), root, w));
        }
        Ball acc; // exact zero
        for (const auto& [exps, c] : e.terms()) {
            Ball term = Ball::from_rational(c, Rational(0), w);
            for (size_t j = 0; j < exps.size(); ++j)
                if (exps[j] > 0) term = ball_mul(term, pows[j][static_cast<size_t>(exps[j] - 1)], w);
            acc = ball_add(acc, term, w);
        }
        if (acc.excludes_zero()) return false;
        const Dyadic ub = acc.abs_upper();
        if (ub.is_zero() || ub.mag_bits() <= -floor_bits) return true;
        if (w >= pp.max_bits)
            throw PrecisionExhausted("zero floor of " + std::to_string(floor_bits) +
                                     " bits exceeds the precision limit");
        long next = w * 2;
        if (w >= 256 && floor_bits + 128 > next) next = floor_bits + 128;
        w = std::min<long>(next, pp.max_bits);
    }
}

} // namespace feq
