// Acceptance suite: end-to-end checks of the analyzer against the known
// closed-form cases and the exact-arithmetic invariants. Prints one
// PASS/FAIL line per criterion; exit status is the number of failures.

#include <chrono>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "feq/analysis.hpp"
#include "feq/parser.hpp"
#include "feq/report.hpp"
#include "feq/solver.hpp"
#include "testutil.hpp"

using namespace feqtest;

namespace {

int failures = 0;

void criterion(int number, const std::string& name, const std::function<bool(std::string&)>& body) {
    std::string detail;
    bool ok = false;
    try {
        ok = body(detail);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << number << ": " << name;
    if (!ok && !detail.empty()) std::cout << " [" << detail << "]";
    std::cout << std::endl;
    if (!ok) ++failures;
}

const NumberField::Ptr Q = NumberField::rationals();

std::vector<FieldElement> monomial_f(const NumberField::Ptr& K, int p) {
    std::vector<FieldElement> f(static_cast<size_t>(p) + 1, FieldElement::zero(K));
    f.back() = FieldElement::one(K);
    return f;
}

bool classifications_are(const AnalysisReport& rep, const std::vector<Classification>& want,
                         std::string& detail) {
    if (rep.degrees.size() != want.size()) {
        detail = "degree count mismatch";
        return false;
    }
    for (size_t i = 0; i < want.size(); ++i)
        if (rep.degrees[i].classification != want[i]) {
            std::ostringstream s;
            s << "p=" << rep.degrees[i].p << " is "
              << classification_name(rep.degrees[i].classification) << ", expected "
              << classification_name(want[i]);
            detail = s.str();
            return false;
        }
    return true;
}

} // namespace

int main() {
    const auto t0 = std::chrono::steady_clock::now();
    using C = Classification;

    criterion(1, "symmetric two-node case, quadratic vs rational nodes", [](std::string& detail) {
        const auto K = sqrt3_field();
        const FieldElement u = FieldElement::generator(K);
        const FieldElement one = FieldElement::one(K);
        const FieldElement node = fel(K, 2) + u; // ratio 2 + sqrt(3)
        const auto spec_q = make_spec(K, {one, one}, {node, one}, {one, node});
        if (!classifications_are(analyze(spec_q),
                                 {C::UniqueMonomial, C::UniqueMonomial, C::UniqueMonomial}, detail))
            return false;
        const auto spec_r = make_spec(Q, {fel(Q, 1), fel(Q, 1)}, {fel(Q, 2), fel(Q, 1)},
                                      {fel(Q, 1), fel(Q, 2)});
        return classifications_are(analyze(spec_r), {C::UniqueMonomial, C::None, C::None}, detail);
    });

    criterion(2, "symmetric pairs with alpha != +-beta have trivial kernels",
              [](std::string& detail) {
                  Rng rng(520);
                  for (int trial = 0; trial < 10; ++trial) {
                      Rational alpha, beta;
                      do {
                          alpha = rng.rational(9, 4);
                          beta = rng.rational(9, 4);
                      } while (alpha == beta || alpha == -beta);
                      const auto spec = make_spec(
                          Q, {fel(Q, 1), fel(Q, 1)},
                          {FieldElement::from_rational(Q, alpha), FieldElement::from_rational(Q, beta)},
                          {FieldElement::from_rational(Q, beta), FieldElement::from_rational(Q, alpha)});
                      for (int p = 1; p <= 3; ++p)
                          if (!kernel_search(spec, p).empty()) {
                              detail = "kernel found at p=" + std::to_string(p) + " for alpha=" +
                                       alpha.str() + ", beta=" + beta.str();
                              return false;
                          }
                  }
                  return true;
              });

    criterion(3, "weighted endpoint rule: (1/4, 1/3) works, the pair (1/3, 1/4) does not",
              [](std::string& detail) {
                  const auto spec = weighted_onethird_spec();
                  const auto rep = analyze(spec);
                  if (!classifications_are(rep, {C::UniqueMonomial, C::UniqueMonomial, C::None},
                                           detail))
                      return false;
                  if (*rep.degrees[0].c_tilde != fel(Q, 1, 2) ||
                      *rep.degrees[1].c_tilde != fel(Q, 1, 3)) {
                      detail = "c~ values differ";
                      return false;
                  }
                  for (int p = 1; p <= 2; ++p) {
                      const auto f = monomial_f(Q, p);
                      if (!verify_identity(spec, f, reconstruct_F(spec, f))) {
                          detail = "identity fails at p=" + std::to_string(p);
                          return false;
                      }
                  }
                  // the swapped constants must fail the degree-2 identity
                  const auto swapped =
                      make_spec(Q, {fel(Q, 1, 3), fel(Q, 2, 3)}, {fel(Q, 1), fel(Q, 1, 4)},
                                {fel(Q, 0), fel(Q, 3, 4)});
                  const auto f2 = monomial_f(Q, 2);
                  if (verify_identity(swapped, f2, reconstruct_F(swapped, f2))) {
                      detail = "swapped constants unexpectedly verify";
                      return false;
                  }
                  return true;
              });

    criterion(4, "symmetric interior nodes (3 +- sqrt(3))/6 with equal weights",
              [](std::string& detail) {
                  const auto spec = symmetric_sqrt3_spec();
                  const auto rep = analyze(spec);
                  if (!classifications_are(
                          rep, {C::UniqueMonomial, C::UniqueMonomial, C::UniqueMonomial}, detail))
                      return false;
                  const auto K = spec.field;
                  const std::vector<FieldElement> expect{fel(K, 1, 2), fel(K, 1, 3), fel(K, 1, 4)};
                  for (size_t i = 0; i < 3; ++i)
                      if (*rep.degrees[i].c_tilde != expect[i]) {
                          detail = "c~ mismatch at p=" + std::to_string(i + 1);
                          return false;
                      }
                  for (int p = 1; p <= 3; ++p) {
                      const auto f = monomial_f(K, p);
                      std::vector<FieldElement> F(static_cast<size_t>(p) + 2,
                                                  FieldElement::zero(K));
                      F.back() = expect[static_cast<size_t>(p - 1)];
                      if (!verify_identity(spec, f, F)) {
                          detail = "identity fails at p=" + std::to_string(p);
                          return false;
                      }
                  }
                  // the conjugate node gives the byte-identical report
                  const auto conj = symmetric_sqrt3_spec(true);
                  const auto rep_conj = analyze(conj);
                  const std::string a = report_json(spec, rep, build_basis(spec, rep));
                  const std::string b = report_json(conj, rep_conj, build_basis(conj, rep_conj));
                  if (a != b) {
                      detail = "conjugate report differs";
                      return false;
                  }
                  return true;
              });

    criterion(5, "interior-node family: descending ratios and trivial kernels",
              [](std::string& detail) {
                  Rng rng(530);
                  for (int trial = 0; trial < 10; ++trial) {
                      const auto spec = rng.descending_shape_spec(3);
                      const auto rep = analyze(spec);
                      for (const auto& rel : descending_check(spec, rep))
                          if (!rel.holds) {
                              detail = "violated: " + rel.relation;
                              return false;
                          }
                      for (const auto& d : rep.degrees)
                          if (!d.kernel_witnesses.empty()) {
                              detail = "nonempty kernel at p=" + std::to_string(d.p);
                              return false;
                          }
                  }
                  return true;
              });

    criterion(6, "translates of the homogeneous family: universal constant", [](std::string& detail) {
        Rng rng(540);
        for (int trial = 0; trial < 10; ++trial) {
            // alpha_i = 1, distinct beta_i != -1, nonzero coefficients
            EquationSpec spec;
            for (;;) {
                const int n = static_cast<int>(rng.integer(1, 3));
                std::vector<FieldElement> a, alpha, beta;
                std::vector<Rational> seen;
                bool ok = true;
                for (int i = 0; i < n && ok; ++i) {
                    a.push_back(FieldElement::from_rational(Q, rng.nonzero_rational()));
                    alpha.push_back(FieldElement::one(Q));
                    const Rational b = rng.rational(9, 4);
                    for (const Rational& s : seen)
                        if (s == b) ok = false;
                    if (b == Rational(-1)) ok = false;
                    seen.push_back(b);
                    beta.push_back(FieldElement::from_rational(Q, b));
                }
                if (!ok) continue;
                spec = make_spec(Q, std::move(a), std::move(alpha), std::move(beta));
                if (validate(spec).ok) break;
            }
            if (!universal_constant_check(spec, analyze(spec))) {
                detail = "admissible degree with c~ != sum a";
                return false;
            }
        }
        return true;
    });

    criterion(7, "vanishing linear sums: synthesis verdict with the identity witness",
              [](std::string& detail) {
                  const auto spec = make_spec(Q, {fel(Q, 1), fel(Q, 1), fel(Q, -1)},
                                              {fel(Q, 2), fel(Q, 1), fel(Q, 3)},
                                              {fel(Q, 1), fel(Q, 3), fel(Q, 4)});
                  if (!validate(spec).ok) {
                      detail = "spec unexpectedly invalid";
                      return false;
                  }
                  const auto d1 = classify_degree(spec, 1);
                  if (d1.classification != Classification::SynthesisRequired) {
                      detail = std::string("got ") + classification_name(d1.classification);
                      return false;
                  }
                  bool identity_witness = false;
                  for (const auto& w : d1.kernel_witnesses)
                      if (w.indices == std::vector<int>{0}) identity_witness = true;
                  if (!identity_witness) {
                      detail = "identity tuple missing from the witnesses";
                      return false;
                  }
                  // f(x) = x solves the homogeneous equation: h = 0, F = 0
                  const auto f = monomial_f(Q, 1);
                  const auto F = reconstruct_F(spec, f);
                  if (!F.empty()) {
                      detail = "reconstructed F is not the zero polynomial";
                      return false;
                  }
                  if (!verify_identity(spec, f, F)) {
                      detail = "homogeneous identity fails for f = x";
                      return false;
                  }
                  return true;
              });

    criterion(8, "oracle invariants on 100 random rational specs", [](std::string& detail) {
        Rng rng(550);
        for (int trial = 0; trial < 100; ++trial) {
            const auto spec = rng.valid_rational_spec(3);
            // (a) swap symmetry
            const auto swapped = make_spec(spec.field, spec.a, spec.beta, spec.alpha);
            for (int p = 1; p <= degree_bound(spec); ++p) {
                const auto t = condition_sums(spec, p);
                const auto ts = condition_sums(swapped, p);
                for (size_t l = 0; l < t.size(); ++l)
                    if (t[l] != ts[t.size() - 1 - l]) {
                        detail = "swap symmetry broken";
                        return false;
                    }
            }
            // (b) scaling invariances
            const Rational s = rng.nonzero_rational(5, 3);
            const Rational tt = rng.nonzero_rational(5, 3);
            std::vector<FieldElement> sa, ta, tb;
            for (const auto& x : spec.a) sa.push_back(x * s);
            for (const auto& x : spec.alpha) ta.push_back(x * tt);
            for (const auto& x : spec.beta) tb.push_back(x * tt);
            const auto cs = make_spec(spec.field, sa, spec.alpha, spec.beta);
            const auto ns = make_spec(spec.field, spec.a, ta, tb);
            for (int p = 1; p <= degree_bound(spec); ++p) {
                const auto base = classify_degree(spec, p);
                if (classify_degree(cs, p).classification != base.classification ||
                    classify_degree(ns, p).classification != base.classification) {
                    detail = "scaling changed a classification";
                    return false;
                }
            }
            // (c) emitted basis terms verify
            const auto rep = analyze(spec);
            const auto basis = build_basis(spec, rep);
            std::vector<FieldElement> fconst{FieldElement::one(spec.field)};
            if (!verify_identity(spec, fconst, reconstruct_F(spec, fconst))) {
                detail = "constant term fails";
                return false;
            }
            for (const auto& term : basis.terms) {
                const auto f = monomial_f(spec.field, term.p);
                if (!verify_identity(spec, f, reconstruct_F(spec, f))) {
                    detail = "basis term fails at p=" + std::to_string(term.p);
                    return false;
                }
            }
            // (d) parse/serialize round trip
            if (spec_fingerprint(parse(serialize_spec(spec))) != spec_fingerprint(spec)) {
                detail = "serialize/parse round trip changed the spec";
                return false;
            }
        }
        return true;
    });

    criterion(9, "sound zero decisions for 50 crafted algebraic expressions",
              [](std::string& detail) {
                  struct Case {
                      CondExpr expr;
                      EmbeddingTuple tuple;
                      bool expect_zero;
                  };
                  std::vector<Case> cases;
                  auto add_vieta_cases = [&cases](const NumberField::Ptr& K) {
                      const int d = K->degree();
                      const UniPoly& m = K->min_poly();
                      std::vector<int> all(static_cast<size_t>(d));
                      for (int i = 0; i < d; ++i) all[static_cast<size_t>(i)] = i;
                      // elementary symmetric functions of all roots:
                      // e_k = (-1)^k * coeff(d-k) for the monic minimal polynomial
                      for (int k = 1; k <= d; ++k) {
                          CondExpr e(K, d);
                          std::vector<int> subset(static_cast<size_t>(k));
                          // sum over k-subsets of the d variables
                          std::function<void(int, int)> rec = [&](int start, int depth) {
                              if (depth == k) {
                                  std::vector<int> exps(static_cast<size_t>(d) + 1, 0);
                                  for (int j : subset) exps[static_cast<size_t>(j) + 1] = 1;
                                  e.add_monomial(exps, Rational(1));
                                  return;
                              }
                              for (int v = start; v < d; ++v) {
                                  subset[static_cast<size_t>(depth)] = v;
                                  rec(v + 1, depth + 1);
                              }
                          };
                          rec(0, 0);
                          const Rational ek = (k % 2 ? Rational(-1) : Rational(1)) * m.coeff(d - k);
                          CondExpr zero = e;
                          std::vector<int> const_exps(static_cast<size_t>(d) + 1, 0);
                          zero.add_monomial(const_exps, -ek);
                          cases.push_back({zero, EmbeddingTuple{all}, true});
                          CondExpr shifted = zero;
                          shifted.add_monomial(const_exps, Rational(Int(2 + k), Int(3)));
                          cases.push_back({shifted, EmbeddingTuple{all}, false});
                      }
                  };
                  const std::vector<NumberField::Ptr> fields{
                      sqrt2_field(),
                      sqrt3_field(),
                      NumberField::create(upoly({-2, 0, 0, 1})),      // t^3 - 2
                      NumberField::create(upoly({1, 1, 1, 1, 1})),    // 5th cyclotomic
                      NumberField::create(upoly({1, 1, 0, 0, 1})),    // t^4 + t + 1
                  };
                  for (const auto& K : fields) add_vieta_cases(K); // 2*(2+2+3+4+4) = 30
                  // minimal-polynomial relations in one slot, plus shifted variants
                  for (const auto& K : fields) {
                      const int d = K->degree();
                      for (int h = 0; h < d && cases.size() < 50; ++h) {
                          CondExpr e(K, 1);
                          std::vector<int> exps(2, 0);
                          for (int k = 0; k <= d; ++k) {
                              exps[1] = k;
                              if (!K->min_poly().coeff(k).is_zero())
                                  e.add_monomial(exps, K->min_poly().coeff(k));
                          }
                          cases.push_back({e, EmbeddingTuple{{h}}, true});
                          CondExpr shifted = e;
                          shifted.add_monomial({0, 0}, Rational(Int(h) + 1, Int(7)));
                          cases.push_back({shifted, EmbeddingTuple{{h}}, false});
                      }
                  }
                  if (cases.size() < 50) {
                      detail = "only " + std::to_string(cases.size()) + " cases built";
                      return false;
                  }
                  cases.erase(cases.begin() + 50, cases.end());
                  int zeros = 0;
                  for (size_t i = 0; i < cases.size(); ++i) {
                      const bool got =
                          is_zero_at_tuple(cases[i].expr, 0, cases[i].tuple, PrecisionPolicy{});
                      if (got != cases[i].expect_zero) {
                          detail = "case " + std::to_string(i) + " misclassified";
                          return false;
                      }
                      if (got) ++zeros;
                  }
                  if (zeros < 24 || zeros > 26) {
                      detail = "zero/nonzero balance off: " + std::to_string(zeros);
                      return false;
                  }
                  return true;
              });

    const auto t1 = std::chrono::steady_clock::now();
    const double seconds = std::chrono::duration<double>(t1 - t0).count();
    std::cout << (failures == 0 ? "all criteria passed" : "criteria FAILED") << " ("
              << seconds << " s)" << std::endl;
    return failures;
}
