#pragma once

#include <vector>

#include "feq/analysis.hpp"

namespace feq {

/// One admissible degree: f-part gamma * x^p (gamma free), F-part
/// gamma * F_coeff * x^(p+1), and h(x) = gamma * h_coeff * x^p.
/// Both stored coefficients equal c~_p for the degree.
struct SolutionTerm {
    int p = 0;
    FieldElement F_coeff;
    FieldElement h_coeff;
};

/// Degrees whose homogeneous part the analysis could not rule out; the
/// basis monomial (when present) is a particular solution only.
struct KernelAnnotation {
    int p = 0;
    Classification classification = Classification::None;
    std::vector<EmbeddingTuple> witnesses;
};

/// Basis of certified solutions: the free constant term k (with F-part
/// (sum a_i) * k * x), one monomial per admissible degree, and a free
/// additive constant in F (normalized away by F(0) = 0).
struct SolutionBasis {
    FieldElement constant_F_coeff; // sum a_i
    std::vector<SolutionTerm> terms;
    std::vector<KernelAnnotation> incomplete;
};

/// Pre: the report was computed from this spec (fingerprint check).
SolutionBasis build_basis(const EquationSpec& spec, const AnalysisReport& report);

/// Exact check of F(y) - F(x) = (y-x) * sum_i a_i f(alpha_i x + beta_i y)
/// as a bivariate polynomial identity. Coefficient lists are lowest degree
/// first over the spec's field. This is the brute-force oracle every
/// emitted basis term is certified against.
bool verify_identity(const EquationSpec& spec, const std::vector<FieldElement>& f,
                     const std::vector<FieldElement>& F);

/// F(x) = x * h(x) with h(x) = sum_i a_i f(alpha_i x); the additive
/// constant is normalized to 0. Uses the x-axis substitution only, so
/// verify_identity remains an independent check of the cross terms.
std::vector<FieldElement> reconstruct_F(const EquationSpec& spec,
                                        const std::vector<FieldElement>& f);

} // namespace feq
