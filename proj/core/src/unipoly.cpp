#include "feq/unipoly.hpp"

#include <sstream>

#include "ipoly.hpp"

namespace feq {

UniPoly::UniPoly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::constant(const Rational& c) { return UniPoly({c}); }

UniPoly UniPoly::x() { return UniPoly({Rational(0), Rational(1)}); }

UniPoly UniPoly::monomial(int k, const Rational& c) {
    std::vector<Rational> v(static_cast<size_t>(k) + 1);
    v.back() = c;
    return UniPoly(std::move(v));
}

Rational UniPoly::coeff(int k) const {
    if (k < 0 || static_cast<size_t>(k) >= c_.size()) return Rational(0);
    return c_[static_cast<size_t>(k)];
}

const Rational& UniPoly::leading() const { return c_.back(); }

bool UniPoly::is_monic() const { return !c_.empty() && c_.back().is_one(); }

Rational UniPoly::eval(const Rational& x) const {
    Rational r(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

UniPoly UniPoly::derivative() const {
    if (c_.size() <= 1) return {};
    std::vector<Rational> d(c_.size() - 1);
    for (size_t i = 1; i < c_.size(); ++i) d[i - 1] = Rational(static_cast<long>(i)) * c_[i];
    return UniPoly(std::move(d));
}

UniPoly UniPoly::monic() const {
    if (is_zero()) throw DivisionByZero("monic() of the zero polynomial");
    return leading().reciprocal() * *this;
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Rational> r(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i)
        for (size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
    return UniPoly(std::move(r));
}

UniPoly operator*(const Rational& s, const UniPoly& p) {
    std::vector<Rational> r = p.c_;
    for (Rational& c : r) c *= s;
    return UniPoly(std::move(r));
}

UniPoly operator-(const UniPoly& a) {
    std::vector<Rational> r = a.c_;
    for (Rational& c : r) c = -c;
    return UniPoly(std::move(r));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream out;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational c = coeff(k);
        if (c.is_zero()) continue;
        const Rational mag = c.abs();
        if (first) {
            if (c.sign() < 0) out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = mag.is_one();
        if (k == 0) {
            out << mag.str();
        } else {
            if (!unit) {
                if (mag.is_integer())
                    out << mag.str() << "*";
                else
                    out << "(" << mag.str() << ")*";
            }
            out << var;
            if (k > 1) out << "^" << k;
        }
    }
    return out.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& a, const UniPoly& b) {
    if (b.is_zero()) throw DivisionByZero("polynomial division by zero");
    UniPoly rem = a;
    std::vector<Rational> q;
    if (rem.degree() >= b.degree()) q.resize(static_cast<size_t>(rem.degree() - b.degree()) + 1);
    const Rational lb_inv = b.leading().reciprocal();
    while (!rem.is_zero() && rem.degree() >= b.degree()) {
        const int shift = rem.degree() - b.degree();
        const Rational f = rem.leading() * lb_inv;
        q[static_cast<size_t>(shift)] = f;
        rem -= UniPoly::monomial(shift, f) * b;
    }
    return {UniPoly(std::move(q)), rem};
}

UniPoly poly_gcd(const UniPoly& a, const UniPoly& b) {
    UniPoly f = a, g = b;
    while (!g.is_zero()) {
        UniPoly r = divmod(f, g).second;
        f = std::move(g);
        g = std::move(r);
    }
    if (f.is_zero()) return f;
    return f.monic();
}

bool is_squarefree(const UniPoly& f) {
    if (f.is_zero()) return false;
    if (f.degree() == 0) return true;
    return poly_gcd(f, f.derivative()).degree() == 0;
}

std::vector<Int> integer_primitive(const UniPoly& f) {
    Int l(1);
    for (const Rational& c : f.coeffs()) l = int_lcm(l, c.denominator());
    ipoly::IVec v(f.coeffs().size());
    for (size_t i = 0; i < v.size(); ++i) {
        const Rational& c = f.coeffs()[i];
        v[i] = c.numerator() * (l / c.denominator());
    }
    ipoly::trim(v);
    return ipoly::primitive_part(v);
}

namespace {

// Res(A, B) for nonzero integer polynomials via the subresultant PRS
// (Cohen, Algorithm 3.3.7).
Int resultant_int(ipoly::IVec A, ipoly::IVec B) {
    using namespace ipoly;
    int s = 1;
    if (degree(A) < degree(B)) {
        if ((degree(A) & 1) && (degree(B) & 1)) s = -s;
        std::swap(A, B);
    }
    Int a_cont = content(A), b_cont = content(B);
    if (sgn(A.back()) < 0) a_cont = -a_cont;
    if (sgn(B.back()) < 0) b_cont = -b_cont;
    A = div_scalar_exact(A, a_cont);
    B = div_scalar_exact(B, b_cont);
    Int t = int_pow(a_cont, static_cast<unsigned long>(degree(B))) *
            int_pow(b_cont, static_cast<unsigned long>(degree(A)));
    if (degree(B) == 0) {
        // B = +-1 (primitive constant)
        Int lead = int_pow(B[0], static_cast<unsigned long>(degree(A)));
        return Int(s) * t * lead;
    }
    Int g(1), h(1);
    while (true) {
        const long delta = degree(A) - degree(B);
        if ((degree(A) & 1) && (degree(B) & 1)) s = -s;
        IVec R = prem(A, B);
        A = B;
        Int divisor = g * int_pow(h, static_cast<unsigned long>(delta));
        B = R.empty() ? R : div_scalar_exact(R, divisor);
        if (B.empty()) return Int(0); // common factor
        g = A.back();
        if (delta == 0) {
            // h unchanged
        } else if (delta == 1) {
            h = g;
        } else {
            Int num = int_pow(g, static_cast<unsigned long>(delta));
            Int den = int_pow(h, static_cast<unsigned long>(delta - 1));
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            h = q;
        }
        if (degree(B) == 0) {
            const long da = degree(A);
            Int num = int_pow(B[0], static_cast<unsigned long>(da));
            Int den = (da >= 1) ? int_pow(h, static_cast<unsigned long>(da - 1)) : Int(1);
            Int q, r;
            mpz_tdiv_qr(q.get_mpz_t(), r.get_mpz_t(), num.get_mpz_t(), den.get_mpz_t());
            return Int(s) * t * q;
        }
    }
}

// Rational pre/post-scaling shared by both resultant routes. Returns true
// if the result is already decided (one side constant or zero).
bool resultant_trivial(const UniPoly& f, const UniPoly& g, Rational* out) {
    if (f.is_zero() && g.is_zero()) throw BothZero("resultant of two zero polynomials");
    if (f.is_zero() || g.is_zero()) {
        const UniPoly& nz = f.is_zero() ? g : f;
        *out = nz.degree() == 0 ? Rational(1) : Rational(0);
        return true;
    }
    if (f.degree() == 0) {
        *out = f.coeff(0).pow(g.degree());
        return true;
    }
    if (g.degree() == 0) {
        *out = g.coeff(0).pow(f.degree());
        return true;
    }
    return false;
}

} // namespace

Rational resultant_subresultant(const UniPoly& f, const UniPoly& g) {
    Rational triv;
    if (resultant_trivial(f, g, &triv)) return triv;
    // Res over Q reduces to Res over Z: Res(f,g) = Res(F,G) / (cf^deg(g) * cg^deg(f))
    // where f = cf*F, g = cg*G with F, G primitive.
    ipoly::IVec F = integer_primitive(f), G = integer_primitive(g);
    const Rational cf = f.leading() / Rational(F.back());
    const Rational cg = g.leading() / Rational(G.back());
    Rational r(resultant_int(F, G));
    return cf.pow(g.degree()) * cg.pow(f.degree()) * r;
}

Rational resultant_sylvester(const UniPoly& f, const UniPoly& g) {
    Rational triv;
    if (resultant_trivial(f, g, &triv)) return triv;
    const int m = f.degree(), n = g.degree();
    const int N = m + n;
    std::vector<std::vector<Rational>> a(static_cast<size_t>(N),
                                         std::vector<Rational>(static_cast<size_t>(N)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j <= m; ++j) a[i][i + j] = f.coeff(m - j);
    for (int i = 0; i < m; ++i)
        for (int j = 0; j <= n; ++j) a[n + i][i + j] = g.coeff(n - j);
    // exact Gaussian elimination
    Rational det(1);
    for (int col = 0; col < N; ++col) {
        int pivot = -1;
        for (int row = col; row < N; ++row)
            if (!a[row][col].is_zero()) {
                pivot = row;
                break;
            }
        if (pivot < 0) return Rational(0);
        if (pivot != col) {
            std::swap(a[pivot], a[col]);
            det = -det;
        }
        det *= a[col][col];
        const Rational inv = a[col][col].reciprocal();
        for (int row = col + 1; row < N; ++row) {
            if (a[row][col].is_zero()) continue;
            const Rational fct = a[row][col] * inv;
            for (int k = col; k < N; ++k) a[row][k] -= fct * a[col][k];
        }
    }
    return det;
}

Rational poly_resultant(const UniPoly& f, const UniPoly& g) {
    Rational triv;
    if (resultant_trivial(f, g, &triv)) return triv;
    if (f.degree() <= 4 && g.degree() <= 4) return resultant_sylvester(f, g);
    return resultant_subresultant(f, g);
}

Rational separation_bound(const UniPoly& m) {
    if (m.degree() < 2) throw DegreeTooSmall("separation bound needs degree >= 2");
    if (!is_squarefree(m)) throw NotSquarefree("separation bound needs a squarefree polynomial");
    // Mahler: sep(M) > sqrt(3*|disc|) / (d^((d+2)/2) * ||M||_2^(d-1)) for the
    // primitive integer image M; every step below rounds the bound downward.
    const ipoly::IVec M = integer_primitive(m);
    const unsigned long d = static_cast<unsigned long>(ipoly::degree(M));
    UniPoly mi;
    {
        std::vector<Rational> c(M.size());
        for (size_t i = 0; i < M.size(); ++i) c[i] = Rational(M[i]);
        mi = UniPoly(std::move(c));
    }
    const Rational res = poly_resultant(mi, mi.derivative());
    Int disc_num = res.numerator(); // integer since M is integral
    mpz_abs(disc_num.get_mpz_t(), disc_num.get_mpz_t());
    const Int lead = M.back();
    // sqrt(3*|disc|/lc) >= isqrt(3*|disc|*lc)/lc
    const Int sqrt_num = int_isqrt(3 * disc_num * lead);
    Int norm_sq(0);
    for (const Int& c : M) norm_sq += c * c;
    const Int norm_ub = int_isqrt(norm_sq) + 1;
    const Int denom = int_pow(Int(static_cast<long>(d)), (d + 3) / 2) *
                      int_pow(norm_ub, d - 1);
    return Rational(sqrt_num, lead * denom);
}

} // namespace feq
