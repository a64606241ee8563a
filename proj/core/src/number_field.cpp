#include "feq/number_field.hpp"

#include <algorithm>
#include <map>

#include "feq/roots.hpp"
#include "ipoly.hpp"

namespace feq {

namespace {

// ---------------------------------------------------------------------------
// integer factorization (trial division + Pollard rho), divisor enumeration
// ---------------------------------------------------------------------------

bool is_probable_prime(const Int& n) {
    return mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

Int pollard_rho(const Int& n) {
    // n odd composite, not a prime power of interest; returns a proper factor
    for (unsigned long c = 1;; ++c) {
        Int x(2), y(2), d(1);
        while (d == 1) {
            x = (x * x + c) % n;
            y = (y * y + c) % n;
            y = (y * y + c) % n;
            d = int_gcd(x > y ? x - y : y - x, n);
        }
        if (d != n) return d;
    }
}

void factor_into(Int n, std::map<Int, int>& out) {
    if (n < 0) n = -n;
    if (n <= 1) return;
    for (long p : {2L, 3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L, 41L, 43L, 47L}) {
        while (mpz_divisible_ui_p(n.get_mpz_t(), static_cast<unsigned long>(p))) {
            ++out[Int(p)];
            n /= static_cast<unsigned long>(p);
        }
    }
    Int p(53);
    while (n > 1 && p * p <= n && p < 100000) {
        while (mpz_divisible_p(n.get_mpz_t(), p.get_mpz_t())) {
            ++out[p];
            n /= p;
        }
        p += 2;
    }
    if (n == 1) return;
    if (is_probable_prime(n)) {
        ++out[n];
        return;
    }
    const Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

std::vector<Int> positive_divisors(const Int& n) {
    std::map<Int, int> f;
    factor_into(n, f);
    std::vector<Int> divs{Int(1)};
    for (const auto& [p, e] : f) {
        const size_t base = divs.size();
        Int pk(1);
        for (int k = 1; k <= e; ++k) {
            pk *= p;
            for (size_t i = 0; i < base; ++i) divs.push_back(divs[i] * pk);
        }
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// ---------------------------------------------------------------------------
// irreducibility over Q
// ---------------------------------------------------------------------------

// modular arithmetic in F_p[x], p a small prime
using FpPoly = std::vector<long>; // lowest degree first, coefficients in [0, p)

void fp_trim(FpPoly& a) {
    while (!a.empty() && a.back() == 0) a.pop_back();
}

FpPoly fp_mulmod(const FpPoly& a, const FpPoly& b, const FpPoly& mod, long p) {
    if (a.empty() || b.empty()) return {};
    FpPoly r(a.size() + b.size() - 1, 0);
    for (size_t i = 0; i < a.size(); ++i)
        for (size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + a[i] * b[j]) % p;
    // reduce by the monic image of mod
    const long inv_lead = [&] {
        long l = mod.back() % p, r0 = 1, base = l, e = p - 2;
        while (e) {
            if (e & 1) r0 = r0 * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r0;
    }();
    const int dm = static_cast<int>(mod.size()) - 1;
    for (int k = static_cast<int>(r.size()) - 1; k >= dm; --k) {
        const long c = r[static_cast<size_t>(k)] * inv_lead % p;
        if (c == 0) continue;
        for (int j = 0; j <= dm; ++j) {
            long& slot = r[static_cast<size_t>(k - dm + j)];
            slot = (slot - c * mod[static_cast<size_t>(j)]) % p;
            if (slot < 0) slot += p;
        }
    }
    fp_trim(r);
    return r;
}

FpPoly fp_powmod_p(const FpPoly& a, long p, const FpPoly& mod) {
    // a^p mod (mod), exponent equal to the characteristic
    FpPoly result{1};
    FpPoly base = a;
    long e = p;
    while (e) {
        if (e & 1) result = fp_mulmod(result, base, mod, p);
        base = fp_mulmod(base, base, mod, p);
        e >>= 1;
    }
    return result;
}

FpPoly fp_gcd(FpPoly a, FpPoly b, long p) {
    auto modinv = [p](long v) {
        long r0 = 1, base = v % p, e = p - 2;
        while (e) {
            if (e & 1) r0 = r0 * base % p;
            base = base * base % p;
            e >>= 1;
        }
        return r0;
    };
    while (!b.empty()) {
        // a mod b
        const long inv = modinv(b.back());
        FpPoly r = a;
        for (int k = static_cast<int>(r.size()) - 1; k >= static_cast<int>(b.size()) - 1; --k) {
            const long c = r[static_cast<size_t>(k)] * inv % p;
            if (c == 0) continue;
            const int shift = k - (static_cast<int>(b.size()) - 1);
            for (size_t j = 0; j < b.size(); ++j) {
                long& slot = r[static_cast<size_t>(shift) + j];
                slot = (slot - c * b[j]) % p;
                if (slot < 0) slot += p;
            }
        }
        fp_trim(r);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

FpPoly fp_image(const ipoly::IVec& g, long p) {
    FpPoly r(g.size());
    for (size_t i = 0; i < g.size(); ++i) {
        long v = static_cast<long>(mpz_fdiv_ui(g[i].get_mpz_t(), static_cast<unsigned long>(p)));
        r[i] = v;
    }
    fp_trim(r);
    return r;
}

// proves irreducibility over F_p; false means "no conclusion here"
bool fp_irreducible(const ipoly::IVec& g, long p) {
    const FpPoly gp = fp_image(g, p);
    const int d = ipoly::degree(g);
    if (static_cast<int>(gp.size()) - 1 != d) return false; // leading coefficient vanished
    FpPoly deriv(gp.size() - 1);
    for (size_t i = 1; i < gp.size(); ++i)
        deriv[i - 1] = static_cast<long>(i % static_cast<size_t>(p)) * gp[i] % p;
    fp_trim(deriv);
    if (deriv.empty()) return false;
    if (fp_gcd(gp, deriv, p).size() > 1) return false; // not squarefree mod p
    // no irreducible factor of degree <= d/2  <=>  irreducible
    FpPoly h{0, 1}; // x
    for (int i = 1; i <= d / 2; ++i) {
        h = fp_powmod_p(h, p, gp);
        FpPoly hx = h;
        if (hx.size() < 2) hx.resize(2, 0);
        hx[1] = (hx[1] - 1) % p;
        if (hx[1] < 0) hx[1] += p;
        fp_trim(hx);
        if (fp_gcd(gp, hx, p).size() > 1) return false;
    }
    return true;
}

// Kronecker: exhaustive search for a factor of degree k in [2, deg/2] by
// interpolating through divisors of the values at k+1 integer points.
std::optional<ipoly::IVec> kronecker_factor(const ipoly::IVec& G) {
    using ipoly::IVec;
    const int d = ipoly::degree(G);
    struct Point {
        long x;
        Int value;
        std::vector<Int> divisors; // positive
    };
    std::vector<Point> pool;
    for (long x : {0L, 1L, -1L, 2L, -2L, 3L, -3L, 4L, -4L, 5L, -5L, 6L, -6L}) {
        Int v = ipoly::eval(G, Int(x));
        if (sgn(v) == 0) continue; // integer roots were handled earlier
        pool.push_back({x, v, {}});
    }
    std::sort(pool.begin(), pool.end(), [](const Point& a, const Point& b) {
        Int aa, bb;
        mpz_abs(aa.get_mpz_t(), a.value.get_mpz_t());
        mpz_abs(bb.get_mpz_t(), b.value.get_mpz_t());
        return aa < bb;
    });

    for (int k = 2; k <= d / 2; ++k) {
        const size_t npts = static_cast<size_t>(k) + 1;
        if (pool.size() < npts) break;
        std::vector<Point*> pts;
        for (size_t i = 0; i < npts; ++i) {
            if (pool[i].divisors.empty()) pool[i].divisors = positive_divisors(pool[i].value);
            pts.push_back(&pool[i]);
        }
        // combination budget; signs double every slot except the first
        double combos = 1;
        for (size_t i = 0; i < npts; ++i)
            combos *= static_cast<double>(pts[i]->divisors.size()) * (i == 0 ? 1.0 : 2.0);
        if (combos > 4e6)
            throw UnsupportedDegree("factor search space too large for exhaustive interpolation");

        // Lagrange basis over the chosen points, exact rational coefficients
        std::vector<std::vector<Rational>> basis(npts);
        for (size_t j = 0; j < npts; ++j) {
            std::vector<Rational> num{Rational(1)};
            Rational den(1);
            for (size_t t = 0; t < npts; ++t) {
                if (t == j) continue;
                std::vector<Rational> next(num.size() + 1);
                for (size_t i = 0; i < num.size(); ++i) {
                    next[i] += num[i] * Rational(-pts[t]->x);
                    next[i + 1] += num[i];
                }
                num = std::move(next);
                den *= Rational(pts[j]->x - pts[t]->x);
            }
            const Rational inv = den.reciprocal();
            for (Rational& c : num) c *= inv;
            basis[j] = std::move(num);
        }

        std::vector<size_t> idx(npts, 0);
        std::vector<int> sign(npts, 1);
        while (true) {
            // candidate through (x_j, sign_j * divisor_j)
            std::vector<Rational> cand(npts);
            for (size_t j = 0; j < npts; ++j) {
                const Rational cj = Rational(pts[j]->divisors[idx[j]] * sign[j]);
                for (size_t i = 0; i < npts; ++i) cand[i] += cj * basis[j][i];
            }
            bool integral = true;
            IVec ic(npts);
            for (size_t i = 0; i < npts && integral; ++i) {
                if (!cand[i].is_integer())
                    integral = false;
                else
                    ic[i] = cand[i].numerator();
            }
            if (integral) {
                ipoly::trim(ic);
                if (ipoly::degree(ic) == k && ipoly::divides(G, ic)) return ic;
            }
            // advance odometer: sign first (skipping the fixed-positive slot 0)
            size_t pos = 0;
            for (pos = 0; pos < npts; ++pos) {
                if (pos != 0 && sign[pos] == 1) {
                    sign[pos] = -1;
                    break;
                }
                sign[pos] = 1;
                if (++idx[pos] < pts[pos]->divisors.size()) break;
                idx[pos] = 0;
            }
            if (pos == npts) break;
        }
    }
    return std::nullopt;
}

// monic rational factor witness t - r
UniPoly linear_witness(const Rational& root) {
    return UniPoly({-root, Rational(1)});
}

UniPoly from_ivec(const ipoly::IVec& v) {
    std::vector<Rational> c(v.size());
    for (size_t i = 0; i < v.size(); ++i) c[i] = Rational(v[i]);
    return UniPoly(std::move(c));
}

// throws Reducible / UnsupportedDegree; returns normally if irreducible
void check_irreducible(const UniPoly& m) {
    const int d = m.degree();
    if (d == 1) return;
    {
        const UniPoly g = poly_gcd(m, m.derivative());
        if (g.degree() > 0) throw Reducible("minimal polynomial has a repeated factor", g);
    }
    if (d > 8) throw UnsupportedDegree("field degree above 8 is not supported");
    const ipoly::IVec G = integer_primitive(m);
    // rational root test: roots p/q with p | G(0), q | lc(G)
    if (sgn(G[0]) == 0) throw Reducible("zero constant term", UniPoly::x());
    for (const Int& p : positive_divisors(G[0])) {
        for (const Int& q : positive_divisors(G.back())) {
            for (int s : {1, -1}) {
                const Rational r(s * p, q);
                if (from_ivec(G).eval(r).is_zero())
                    throw Reducible("rational root " + r.str(), linear_witness(r));
            }
        }
    }
    if (d <= 3) return; // no rational root and degree <= 3
    for (long p : {3L, 5L, 7L, 11L, 13L, 17L, 19L, 23L, 29L, 31L, 37L})
        if (fp_irreducible(G, p)) return;
    if (auto f = kronecker_factor(G))
        throw Reducible("factor found by interpolation search", from_ivec(*f));
}

} // namespace

// ---------------------------------------------------------------------------
// NumberField
// ---------------------------------------------------------------------------

NumberField::NumberField(UniPoly m, int distinguished, std::vector<Ball> initial_roots,
                         int initial_bits)
    : min_poly_(std::move(m)),
      degree_(min_poly_.degree()),
      distinguished_(distinguished),
      cached_bits_(initial_bits),
      cache_(std::move(initial_roots)) {}

NumberField::Ptr NumberField::rationals() {
    static const Ptr q = create(UniPoly::x());
    return q;
}

NumberField::Ptr NumberField::create(const UniPoly& min_poly,
                                     std::optional<std::pair<Rational, Rational>> root_hint) {
    if (min_poly.degree() < 1) throw PreconditionFailed("minimal polynomial must have degree >= 1");
    if (!min_poly.is_monic()) throw PreconditionFailed("minimal polynomial must be monic");
    check_irreducible(min_poly);

    int have_bits = 64;
    std::vector<Ball> roots = root_isolate(min_poly, have_bits);

    int dist = 0;
    if (root_hint) {
        const Rational& hre = root_hint->first;
        const Rational& him = root_hint->second;
        // strictly-nearest test on exact squared distances:
        // sqrt(B) - sqrt(A) > R  <=>  B - A - R^2 > 0 and (B - A - R^2)^2 > 4 R^2 A
        auto strictly_closer = [](const Rational& A, const Rational& B, const Rational& R) {
            const Rational lhs = B - A - R * R;
            if (lhs.sign() <= 0) return false;
            return lhs * lhs > Rational(4) * R * R * A;
        };
        for (int attempt = 0;; ++attempt) {
            std::vector<Rational> d2(roots.size());
            for (size_t i = 0; i < roots.size(); ++i) {
                const Rational dr = roots[i].re().to_rational() - hre;
                const Rational di = roots[i].im().to_rational() - him;
                d2[i] = dr * dr + di * di;
            }
            int winner = -1;
            for (size_t i = 0; i < roots.size() && winner < 0; ++i) {
                bool closest = true;
                for (size_t j = 0; j < roots.size() && closest; ++j) {
                    if (i == j) continue;
                    const Rational rr =
                        (roots[i].rad() + roots[j].rad()).to_rational();
                    if (!strictly_closer(d2[i], d2[j], rr)) closest = false;
                }
                if (closest) winner = static_cast<int>(i);
            }
            if (winner >= 0) {
                dist = winner;
                break;
            }
            if (attempt >= 4) throw AmbiguousHint("root hint is not nearest to a unique root");
            have_bits *= 4;
            std::vector<Ball> finer = root_isolate(min_poly, have_bits);
            // re-match in creation order (balls at both levels are disjoint)
            std::vector<Ball> matched;
            matched.reserve(roots.size());
            for (const Ball& old : roots)
                for (const Ball& nb : finer)
                    if (!balls_disjoint(old, nb)) {
                        matched.push_back(nb);
                        break;
                    }
            if (matched.size() != roots.size()) throw Error("root refinement lost a root");
            roots = std::move(matched);
        }
    }
    return Ptr(new NumberField(min_poly, dist, std::move(roots), have_bits));
}

void NumberField::refine_locked(int bits) const {
    std::vector<Ball> finer = root_isolate(min_poly_, bits);
    std::vector<Ball> matched;
    matched.reserve(cache_.size());
    for (const Ball& old : cache_) {
        const Ball* hit = nullptr;
        for (const Ball& nb : finer) {
            if (!balls_disjoint(old, nb)) {
                if (hit) throw Error("root refinement is ambiguous");
                hit = &nb;
            }
        }
        if (!hit) throw Error("root refinement lost a root");
        matched.push_back(*hit);
    }
    cache_ = std::move(matched);
    cached_bits_ = bits;
}

Ball NumberField::root_ball(int index, int precision_bits) const {
    if (index < 0 || index >= degree_) throw PreconditionFailed("root index out of range");
    std::lock_guard<std::mutex> lock(mu_);
    if (precision_bits > cached_bits_) refine_locked(precision_bits);
    return cache_[static_cast<size_t>(index)];
}

std::vector<Ball> NumberField::roots(int precision_bits) const {
    std::lock_guard<std::mutex> lock(mu_);
    if (precision_bits > cached_bits_) refine_locked(precision_bits);
    return cache_;
}

bool NumberField::same_field(const NumberField& other) const {
    if (this == &other) return true;
    return min_poly_ == other.min_poly_ && distinguished_ == other.distinguished_;
}

// ---------------------------------------------------------------------------
// FieldElement
// ---------------------------------------------------------------------------

FieldElement::FieldElement(NumberField::Ptr field, std::vector<Rational> coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
    if (!field_) throw PreconditionFailed("field element without a field");
    coeffs_.resize(static_cast<size_t>(field_->degree()));
}

FieldElement FieldElement::from_rational(NumberField::Ptr field, const Rational& q) {
    std::vector<Rational> c(static_cast<size_t>(field->degree()));
    c[0] = q;
    return FieldElement(std::move(field), std::move(c));
}

FieldElement FieldElement::zero(NumberField::Ptr field) {
    return from_rational(std::move(field), Rational(0));
}

FieldElement FieldElement::one(NumberField::Ptr field) {
    return from_rational(std::move(field), Rational(1));
}

FieldElement FieldElement::generator(NumberField::Ptr field) {
    if (field->degree() == 1) {
        // u is the root of the degree-1 minimal polynomial, a rational number
        const Rational u = -field->min_poly().coeff(0);
        return from_rational(std::move(field), u);
    }
    std::vector<Rational> c(static_cast<size_t>(field->degree()));
    c[1] = Rational(1);
    return FieldElement(std::move(field), std::move(c));
}

bool FieldElement::is_zero() const {
    for (const Rational& c : coeffs_)
        if (!c.is_zero()) return false;
    return true;
}

bool FieldElement::is_rational() const {
    for (size_t i = 1; i < coeffs_.size(); ++i)
        if (!coeffs_[i].is_zero()) return false;
    return true;
}

Rational FieldElement::as_rational() const {
    if (!is_rational()) throw PreconditionFailed("element is not rational");
    return coeffs_[0];
}

void FieldElement::check_same_field(const FieldElement& a, const FieldElement& b) {
    if (a.field_ == b.field_) return;
    if (!a.field_->same_field(*b.field_)) throw FieldMismatch("elements of different fields");
}

FieldElement FieldElement::operator-() const {
    std::vector<Rational> c = coeffs_;
    for (Rational& x : c) x = -x;
    return FieldElement(field_, std::move(c));
}

FieldElement operator+(const FieldElement& a, const FieldElement& b) {
    FieldElement::check_same_field(a, b);
    std::vector<Rational> c = a.coeffs_;
    for (size_t i = 0; i < c.size(); ++i) c[i] += b.coeffs_[i];
    return FieldElement(a.field_, std::move(c));
}

FieldElement operator-(const FieldElement& a, const FieldElement& b) {
    FieldElement::check_same_field(a, b);
    std::vector<Rational> c = a.coeffs_;
    for (size_t i = 0; i < c.size(); ++i) c[i] -= b.coeffs_[i];
    return FieldElement(a.field_, std::move(c));
}

FieldElement operator*(const FieldElement& a, const FieldElement& b) {
    FieldElement::check_same_field(a, b);
    const size_t d = a.coeffs_.size();
    std::vector<Rational> prod(2 * d - 1);
    for (size_t i = 0; i < d; ++i) {
        if (a.coeffs_[i].is_zero()) continue;
        for (size_t j = 0; j < d; ++j) prod[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
    // reduce modulo the monic minimal polynomial: u^d = -(m_0 + ... + m_{d-1} u^{d-1})
    const UniPoly& m = a.field_->min_poly();
    for (size_t k = 2 * d - 2; k >= d; --k) {
        const Rational c = prod[k];
        if (!c.is_zero()) {
            for (size_t j = 0; j < d; ++j) prod[k - d + j] -= c * m.coeff(static_cast<int>(j));
            prod[k] = Rational(0);
        }
        if (k == d) break;
    }
    prod.resize(d);
    return FieldElement(a.field_, std::move(prod));
}

FieldElement operator*(const FieldElement& a, const Rational& s) {
    std::vector<Rational> c = a.coeffs_;
    for (Rational& x : c) x *= s;
    return FieldElement(a.field_, std::move(c));
}

FieldElement FieldElement::inverse() const {
    if (is_zero()) throw DivisionByZero("inverse of zero field element");
    // extended Euclid in Q[t] against the minimal polynomial
    UniPoly r0 = field_->min_poly(), r1 = UniPoly(coeffs_);
    UniPoly s0, s1 = UniPoly::constant(Rational(1)); // coefficients of the element
    while (!r1.is_zero()) {
        auto [q, r2] = divmod(r0, r1);
        UniPoly s2 = s0 - q * s1;
        r0 = std::move(r1);
        r1 = std::move(r2);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r0 = gcd = nonzero constant (min_poly irreducible, element nonzero)
    if (r0.degree() != 0) throw Error("inverse: gcd with the minimal polynomial is not constant");
    const UniPoly inv = r0.coeff(0).reciprocal() * s0;
    std::vector<Rational> c(coeffs_.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = inv.coeff(static_cast<int>(i));
    return FieldElement(field_, std::move(c));
}

FieldElement operator/(const FieldElement& a, const FieldElement& b) { return a * b.inverse(); }

FieldElement FieldElement::pow(unsigned long k) const {
    FieldElement acc = FieldElement::one(field_);
    FieldElement base = *this;
    while (k) {
        if (k & 1UL) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

bool operator==(const FieldElement& a, const FieldElement& b) {
    if (!a.field_->same_field(*b.field_)) return false;
    return a.coeffs_ == b.coeffs_;
}

Ball FieldElement::embed(int root_index, int precision_bits) const {
    const Dyadic target = Dyadic::power_of_two(-precision_bits);
    for (long w = precision_bits + 16;; w *= 2) {
        const Ball u = field_->root_ball(root_index, static_cast<int>(w));
        Ball acc = Ball::from_rational(coeffs_.back(), Rational(0), w);
        for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it)
            acc = ball_add(ball_mul(acc, u, w), Ball::from_rational(*it, Rational(0), w), w);
        if (acc.rad() <= target) return acc;
    }
}

std::string FieldElement::str() const {
    return UniPoly(coeffs_).str("u");
}

} // namespace feq
