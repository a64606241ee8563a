#include "feq/roots.hpp"

#include <algorithm>

namespace feq {

namespace {

// Approximate complex arithmetic on dyadics, rounded to `prec` bits.
// Used only to drive the iteration; all certification is ball-based.
struct AppC {
    Dyadic re, im;
};

AppC capp_round(AppC z, long prec) {
    return {z.re.round_nearest(prec), z.im.round_nearest(prec)};
}

AppC capp_add(const AppC& a, const AppC& b, long prec) {
    return capp_round({a.re + b.re, a.im + b.im}, prec);
}

AppC capp_sub(const AppC& a, const AppC& b, long prec) {
    return capp_round({a.re - b.re, a.im - b.im}, prec);
}

AppC capp_mul(const AppC& a, const AppC& b, long prec) {
    return capp_round({a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}, prec);
}

AppC capp_div(const AppC& a, const AppC& b, long prec) {
    const Dyadic den = b.re * b.re + b.im * b.im;
    const Dyadic nre = a.re * b.re + a.im * b.im;
    const Dyadic nim = a.im * b.re - a.re * b.im;
    return {Dyadic::div_approx(nre, den, prec), Dyadic::div_approx(nim, den, prec)};
}

bool capp_small(const AppC& z, long bits) {
    return z.re.mag_bits() <= -bits && z.im.mag_bits() <= -bits;
}

AppC horner(const std::vector<AppC>& coeffs, const AppC& z, long prec) {
    AppC acc = coeffs.back();
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it)
        acc = capp_add(capp_mul(acc, z, prec), *it, prec);
    return acc;
}

Ball eval_ball(const std::vector<Rational>& coeffs, const AppC& z, long prec) {
    const Ball zb = Ball::exact_point(z.re, z.im);
    Ball acc = Ball::from_rational(coeffs.back(), Rational(0), prec);
    for (auto it = coeffs.rbegin() + 1; it != coeffs.rend(); ++it)
        acc = ball_add(ball_mul(acc, zb, prec), Ball::from_rational(*it, Rational(0), prec), prec);
    return acc;
}

} // namespace

std::vector<Ball> root_isolate(const UniPoly& m, int precision_bits) {
    if (m.degree() < 1) throw PreconditionFailed("root isolation needs degree >= 1");
    if (!is_squarefree(m)) throw NotSquarefree("polynomial has a repeated root");
    const int d = m.degree();

    // exact rational root
    if (d == 1) {
        const Rational root = -(m.coeff(0) / m.coeff(1));
        return {Ball::from_rational(root, Rational(0), precision_bits + 2)};
    }

    std::vector<Rational> monic(static_cast<size_t>(d) + 1);
    const Rational lead_inv = m.leading().reciprocal();
    for (int i = 0; i <= d; ++i) monic[static_cast<size_t>(i)] = m.coeff(i) * lead_inv;
    std::vector<Rational> deriv(static_cast<size_t>(d));
    for (int i = 1; i <= d; ++i)
        deriv[static_cast<size_t>(i - 1)] = Rational(i) * monic[static_cast<size_t>(i)];

    // Cauchy bound on root magnitudes
    Rational bound(1);
    for (int i = 0; i < d; ++i) {
        const Rational a = monic[static_cast<size_t>(i)].abs();
        if (a > bound) bound = a;
    }
    bound += Rational(1);

    long prec = 64;
    const Dyadic target = Dyadic::power_of_two(-precision_bits);

    // deterministic starting points: bound * (0.40625 + 0.90625 i)^(k+1)
    std::vector<AppC> z(static_cast<size_t>(d));
    {
        const AppC seed{Dyadic(Int(13), -5), Dyadic(Int(29), -5)};
        const Dyadic b = Dyadic::from_rational(bound, prec);
        AppC cur = seed;
        for (int k = 0; k < d; ++k) {
            z[static_cast<size_t>(k)] = {cur.re * b, cur.im * b};
            cur = capp_mul(cur, seed, prec);
        }
    }

    std::vector<AppC> acoeffs(static_cast<size_t>(d) + 1);
    auto refresh_coeffs = [&]() {
        for (int i = 0; i <= d; ++i)
            acoeffs[static_cast<size_t>(i)] = {Dyadic::from_rational(monic[static_cast<size_t>(i)], prec),
                                               Dyadic()};
    };
    refresh_coeffs();

    auto durand_kerner_pass = [&](int iters, long tol_bits) {
        for (int it = 0; it < iters; ++it) {
            bool all_small = true;
            for (int k = 0; k < d; ++k) {
                AppC num = horner(acoeffs, z[static_cast<size_t>(k)], prec);
                AppC den{Dyadic(1), Dyadic()};
                for (int j = 0; j < d; ++j) {
                    if (j == k) continue;
                    den = capp_mul(den, capp_sub(z[static_cast<size_t>(k)], z[static_cast<size_t>(j)], prec),
                                   prec);
                }
                if (den.re.is_zero() && den.im.is_zero()) {
                    // collided iterates; nudge and continue
                    z[static_cast<size_t>(k)].re = z[static_cast<size_t>(k)].re + Dyadic::power_of_two(-prec / 3);
                    all_small = false;
                    continue;
                }
                const AppC step = capp_div(num, den, prec);
                z[static_cast<size_t>(k)] = capp_sub(z[static_cast<size_t>(k)], step, prec);
                if (!capp_small(step, tol_bits)) all_small = false;
            }
            if (all_small) break;
        }
    };

    durand_kerner_pass(400, prec / 2);

    for (int round = 0; round < 64; ++round) {
        // certification: the disc around z of radius d*|p(z)/p'(z)| contains a
        // root of p (from p'/p = sum 1/(z - r_i)); d disjoint discs for d
        // roots pin exactly one root each
        const long cert_prec = prec + 64;
        std::vector<Ball> balls;
        balls.reserve(static_cast<size_t>(d));
        bool ok = true;
        for (int k = 0; k < d && ok; ++k) {
            const Ball val = eval_ball(monic, z[static_cast<size_t>(k)], cert_prec);
            const Ball dval = eval_ball(deriv, z[static_cast<size_t>(k)], cert_prec);
            const Dyadic lb = dval.abs_lower();
            if (lb.is_zero()) {
                ok = false;
                break;
            }
            // pad the quotient so truncation in div_approx cannot shave the bound
            Dyadic r = Dyadic::div_approx(val.abs_upper() * Dyadic(d), lb, 64);
            r = (r + r * Dyadic::power_of_two(-8)).round_up_mag(32);
            if (r > target) {
                ok = false;
                break;
            }
            balls.push_back(Ball(z[static_cast<size_t>(k)].re, z[static_cast<size_t>(k)].im, r));
        }
        if (ok) {
            for (int i = 0; i < d && ok; ++i)
                for (int j = i + 1; j < d; ++j)
                    if (!balls_disjoint(balls[static_cast<size_t>(i)], balls[static_cast<size_t>(j)])) {
                        ok = false;
                        break;
                    }
        }
        if (ok) {
            std::sort(balls.begin(), balls.end(), [](const Ball& a, const Ball& b) {
                const int c = Dyadic::compare(a.re(), b.re());
                if (c != 0) return c > 0;
                return Dyadic::compare(a.im(), b.im()) > 0;
            });
            return balls;
        }
        prec *= 2;
        refresh_coeffs();
        durand_kerner_pass(80, prec - 16);
    }
    throw Error("root isolation failed to converge"); // unreachable for squarefree input
}

} // namespace feq
