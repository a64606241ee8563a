#include "feq/analysis.hpp"

#include <algorithm>
#include <sstream>

namespace feq {

const char* classification_name(Classification c) {
    switch (c) {
        case Classification::UniqueMonomial: return "UNIQUE_MONOMIAL";
        case Classification::MonomialPlusKernel: return "MONOMIAL_PLUS_KERNEL";
        case Classification::None: return "NONE";
        case Classification::SynthesisRequired: return "SYNTHESIS_REQUIRED";
    }
    return "?";
}

std::vector<FieldElement> condition_sums(const EquationSpec& spec, int p) {
    if (!validate(spec).ok) throw PreconditionFailed("condition sums on an invalid equation");
    if (p < 1 || p > degree_bound(spec))
        throw PreconditionFailed("degree outside 1..2n-1");
    std::vector<FieldElement> T;
    T.reserve(static_cast<size_t>(p) + 1);
    for (int l = 0; l <= p; ++l) {
        FieldElement sum = FieldElement::zero(spec.field);
        for (int i = 0; i < spec.n; ++i) {
            FieldElement term = spec.a[static_cast<size_t>(i)] * binomial(p, l);
            if (l > 0) term = term * spec.alpha[static_cast<size_t>(i)].pow(static_cast<unsigned long>(l));
            if (p - l > 0)
                term = term * spec.beta[static_cast<size_t>(i)].pow(static_cast<unsigned long>(p - l));
            sum = sum + term;
        }
        T.push_back(std::move(sum));
    }
    return T;
}

DegreeReport classify_degree(const EquationSpec& spec, int p, const PrecisionPolicy& pp) {
    DegreeReport rep;
    rep.p = p;
    rep.T = condition_sums(spec, p);

    bool all_equal = true, all_zero = true;
    for (const FieldElement& t : rep.T) {
        if (t != rep.T[0]) all_equal = false;
        if (!t.is_zero()) all_zero = false;
    }
    rep.identity_admissible = all_equal && !all_zero;
    if (rep.identity_admissible)
        rep.c_tilde = rep.T[0];
    else if (all_zero)
        rep.c_tilde = FieldElement::zero(spec.field); // kernel case, not admissible

    rep.kernel_witnesses = kernel_search(spec, p, pp);

    const bool kernel_empty = rep.kernel_witnesses.empty();
    if (rep.identity_admissible)
        rep.classification =
            kernel_empty ? Classification::UniqueMonomial : Classification::MonomialPlusKernel;
    else
        rep.classification = kernel_empty ? Classification::None : Classification::SynthesisRequired;
    return rep;
}

AnalysisReport analyze(const EquationSpec& spec, std::optional<int> max_degree,
                       const PrecisionPolicy& pp) {
    AnalysisReport report;
    report.validation = validate(spec);
    if (!report.validation.ok) {
        std::ostringstream msg;
        msg << "equation fails the validation hypotheses:";
        for (const Violation& v : report.validation.violations) {
            msg << " " << violation_kind_name(v.kind) << "(";
            for (size_t i = 0; i < v.indices.size(); ++i)
                msg << (i ? "," : "") << v.indices[i];
            msg << ")";
        }
        throw PreconditionFailed(msg.str());
    }
    report.flags = detect_structure(spec);
    report.fingerprint = spec_fingerprint(spec);
    int top = degree_bound(spec);
    if (max_degree) top = std::min(top, std::max(1, *max_degree));
    report.degrees.reserve(static_cast<size_t>(top));
    for (int p = 1; p <= top; ++p) report.degrees.push_back(classify_degree(spec, p, pp));
    return report;
}

std::vector<DescendingRelation> descending_check(const EquationSpec& spec,
                                                 const AnalysisReport& report) {
    const StructureFlags flags = detect_structure(spec);
    if (!flags.beta_is_one_minus_alpha)
        throw StructureMismatch("descending check needs beta_i = 1 - alpha_i");
    if (!flags.coeff_sum_nonzero)
        throw StructureMismatch("descending check needs a nonzero coefficient sum");

    auto admissible = [&](int p) -> const DegreeReport* {
        for (const DegreeReport& r : report.degrees)
            if (r.p == p) return r.identity_admissible ? &r : nullptr;
        return nullptr;
    };

    std::vector<DescendingRelation> out;
    for (const DegreeReport& high : report.degrees) {
        const int p = high.p;
        if (p < 2 || !high.identity_admissible) continue;
        const DegreeReport* low = admissible(p - 1);
        if (!low) continue;
        const Rational ratio(Int(p + 1), Int(p));
        const FieldElement expect_low = *high.c_tilde * ratio;
        {
            DescendingRelation rel;
            rel.p = p;
            std::ostringstream s;
            s << "c~" << (p - 1) << " = ((" << p << "+1)/" << p << ")*c~" << p;
            rel.relation = s.str();
            rel.holds = (*low->c_tilde == expect_low);
            out.push_back(std::move(rel));
        }
        {
            // sum_i a_i alpha_i^(p-2) = ((p+1)/(p-1)) * c~_p
            FieldElement sum = FieldElement::zero(spec.field);
            for (int i = 0; i < spec.n; ++i) {
                FieldElement term = spec.a[static_cast<size_t>(i)];
                if (p - 2 > 0)
                    term = term * spec.alpha[static_cast<size_t>(i)].pow(static_cast<unsigned long>(p - 2));
                sum = sum + term;
            }
            DescendingRelation rel;
            rel.p = p;
            std::ostringstream s;
            s << "sum a*alpha^" << (p - 2) << " = ((" << p << "+1)/(" << p << "-1))*c~" << p;
            rel.relation = s.str();
            rel.holds = (sum == *high.c_tilde * Rational(Int(p + 1), Int(p - 1)));
            out.push_back(std::move(rel));
        }
    }
    return out;
}

bool universal_constant_check(const EquationSpec& spec, const AnalysisReport& report) {
    const StructureFlags flags = detect_structure(spec);
    if (!flags.alpha_all_one) throw StructureMismatch("universal constant check needs alpha_i = 1");
    const FieldElement target = coeff_sum(spec);
    for (const DegreeReport& r : report.degrees)
        if (r.identity_admissible && *r.c_tilde != target) return false;
    return true;
}

} // namespace feq
