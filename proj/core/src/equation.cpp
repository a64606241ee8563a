#include "feq/equation.hpp"

#include <sstream>

namespace feq {

EquationSpec make_spec(NumberField::Ptr field, std::vector<FieldElement> a,
                       std::vector<FieldElement> alpha, std::vector<FieldElement> beta) {
    if (a.empty() || a.size() != alpha.size() || a.size() != beta.size())
        throw PreconditionFailed("parameter lists must be nonempty and of equal length");
    EquationSpec spec;
    spec.field = std::move(field);
    spec.n = static_cast<int>(a.size());
    spec.a = std::move(a);
    spec.alpha = std::move(alpha);
    spec.beta = std::move(beta);
    for (const auto* list : {&spec.a, &spec.alpha, &spec.beta})
        for (const FieldElement& e : *list)
            if (!e.field()->same_field(*spec.field))
                throw FieldMismatch("parameters live in a different field");
    return spec;
}

const char* violation_kind_name(ViolationKind k) {
    switch (k) {
        case ViolationKind::DegenerateRow: return "DegenerateRow";
        case ViolationKind::CollinearPair: return "CollinearPair";
        case ViolationKind::ZeroCoefficient: return "ZeroCoefficient";
    }
    return "?";
}

ValidationReport validate(const EquationSpec& spec) {
    ValidationReport rep;
    for (int i = 0; i < spec.n; ++i) {
        const auto& alpha = spec.alpha[static_cast<size_t>(i)];
        const auto& beta = spec.beta[static_cast<size_t>(i)];
        if ((alpha + beta).is_zero())
            rep.violations.push_back({ViolationKind::DegenerateRow, {i + 1}});
    }
    for (int i = 0; i < spec.n; ++i)
        for (int j = i + 1; j < spec.n; ++j) {
            const auto det = spec.alpha[static_cast<size_t>(i)] * spec.beta[static_cast<size_t>(j)] -
                             spec.alpha[static_cast<size_t>(j)] * spec.beta[static_cast<size_t>(i)];
            if (det.is_zero())
                rep.violations.push_back({ViolationKind::CollinearPair, {i + 1, j + 1}});
        }
    for (int i = 0; i < spec.n; ++i)
        if (spec.a[static_cast<size_t>(i)].is_zero())
            rep.violations.push_back({ViolationKind::ZeroCoefficient, {i + 1}});
    rep.ok = rep.violations.empty();
    return rep;
}

int degree_bound(const EquationSpec& spec) { return 2 * spec.n - 1; }

StructureFlags detect_structure(const EquationSpec& spec) {
    StructureFlags flags;
    const FieldElement one = FieldElement::one(spec.field);

    flags.beta_is_one_minus_alpha = true;
    for (int i = 0; i < spec.n && flags.beta_is_one_minus_alpha; ++i)
        if (spec.beta[static_cast<size_t>(i)] != one - spec.alpha[static_cast<size_t>(i)])
            flags.beta_is_one_minus_alpha = false;

    flags.alpha_all_one = true;
    for (int i = 0; i < spec.n && flags.alpha_all_one; ++i)
        if (spec.alpha[static_cast<size_t>(i)] != one) flags.alpha_all_one = false;

    // multiset of rows (a, alpha, beta) invariant under swapping alpha <-> beta
    std::vector<bool> used(static_cast<size_t>(spec.n), false);
    flags.symmetric_swap = true;
    for (int i = 0; i < spec.n && flags.symmetric_swap; ++i) {
        bool matched = false;
        for (int j = 0; j < spec.n && !matched; ++j) {
            if (used[static_cast<size_t>(j)]) continue;
            if (spec.a[static_cast<size_t>(i)] == spec.a[static_cast<size_t>(j)] &&
                spec.alpha[static_cast<size_t>(i)] == spec.beta[static_cast<size_t>(j)] &&
                spec.beta[static_cast<size_t>(i)] == spec.alpha[static_cast<size_t>(j)]) {
                used[static_cast<size_t>(j)] = true;
                matched = true;
            }
        }
        if (!matched) flags.symmetric_swap = false;
    }

    flags.coeff_sum_nonzero = !coeff_sum(spec).is_zero();
    return flags;
}

FieldElement coeff_sum(const EquationSpec& spec) {
    FieldElement s = FieldElement::zero(spec.field);
    for (const FieldElement& ai : spec.a) s = s + ai;
    return s;
}

std::uint64_t spec_fingerprint(const EquationSpec& spec) {
    std::ostringstream canon;
    canon << spec.field->min_poly().str() << "|" << spec.field->distinguished_index() << "|"
          << spec.n;
    for (const auto* list : {&spec.a, &spec.alpha, &spec.beta}) {
        canon << "|";
        for (const FieldElement& e : *list) canon << e.str() << ";";
    }
    // FNV-1a
    std::uint64_t h = 1469598103934665603ULL;
    for (const char c : canon.str()) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    return h;
}

} // namespace feq
