#include "feq/solver.hpp"

#include "feq/bipoly.hpp"

namespace feq {

SolutionBasis build_basis(const EquationSpec& spec, const AnalysisReport& report) {
    if (report.fingerprint != spec_fingerprint(spec))
        throw PreconditionFailed("report does not belong to this equation");
    SolutionBasis basis{coeff_sum(spec), {}, {}};
    for (const DegreeReport& r : report.degrees) {
        if (r.classification == Classification::UniqueMonomial ||
            r.classification == Classification::MonomialPlusKernel)
            basis.terms.push_back({r.p, *r.c_tilde, *r.c_tilde});
        if (r.classification == Classification::MonomialPlusKernel ||
            r.classification == Classification::SynthesisRequired)
            basis.incomplete.push_back({r.p, r.classification, r.kernel_witnesses});
    }
    return basis;
}

bool verify_identity(const EquationSpec& spec, const std::vector<FieldElement>& f,
                     const std::vector<FieldElement>& F) {
    using FB = BiPoly<FieldElement>;
    FB lhs;
    for (size_t k = 0; k < F.size(); ++k) {
        lhs.add_term(0, static_cast<int>(k), F[k]);                 // F(y)
        lhs.add_term(static_cast<int>(k), 0, F[k] * Rational(-1));  // -F(x)
    }
    FB sum;
    for (int i = 0; i < spec.n; ++i) {
        const FB expanded =
            expand_composite(f, spec.alpha[static_cast<size_t>(i)], spec.beta[static_cast<size_t>(i)]);
        FB weighted;
        for (const auto& [key, c] : expanded.terms())
            weighted.add_term(key.first, key.second, c * spec.a[static_cast<size_t>(i)]);
        sum += weighted;
    }
    FB factor; // y - x
    factor.add_term(0, 1, FieldElement::one(spec.field));
    factor.add_term(1, 0, -FieldElement::one(spec.field));
    return (lhs - factor * sum).is_zero();
}

std::vector<FieldElement> reconstruct_F(const EquationSpec& spec,
                                        const std::vector<FieldElement>& f) {
    std::vector<FieldElement> F;
    F.reserve(f.size() + 1);
    F.push_back(FieldElement::zero(spec.field));
    for (size_t q = 0; q < f.size(); ++q) {
        FieldElement s = FieldElement::zero(spec.field);
        for (int i = 0; i < spec.n; ++i) {
            FieldElement term = spec.a[static_cast<size_t>(i)];
            if (q > 0) term = term * spec.alpha[static_cast<size_t>(i)].pow(q);
            s = s + term;
        }
        F.push_back(f[q] * s);
    }
    while (!F.empty() && F.back().is_zero()) F.pop_back();
    return F;
}

} // namespace feq
