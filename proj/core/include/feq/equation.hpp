#pragma once

#include <cstdint>
#include <vector>

#include "feq/number_field.hpp"

namespace feq {

/// Data of the equation F(y) - F(x) = (y-x) * sum_i a_i f(alpha_i x + beta_i y)
/// with all parameters exact elements of one number field.
struct EquationSpec {
    NumberField::Ptr field;
    int n = 0;
    std::vector<FieldElement> a;
    std::vector<FieldElement> alpha;
    std::vector<FieldElement> beta;
};

EquationSpec make_spec(NumberField::Ptr field, std::vector<FieldElement> a,
                       std::vector<FieldElement> alpha, std::vector<FieldElement> beta);

enum class ViolationKind { DegenerateRow, CollinearPair, ZeroCoefficient };
const char* violation_kind_name(ViolationKind k);

struct Violation {
    ViolationKind kind;
    std::vector<int> indices; // 1-based row indices
};

struct ValidationReport {
    bool ok = true;
    std::vector<Violation> violations;
};

struct StructureFlags {
    bool beta_is_one_minus_alpha = false;
    bool alpha_all_one = false;
    bool symmetric_swap = false;
    bool coeff_sum_nonzero = false;
};

/// Exact hypothesis checks: alpha_i + beta_i != 0 (DegenerateRow),
/// alpha_i*beta_j - alpha_j*beta_i != 0 for i < j (CollinearPair),
/// a_i != 0 (ZeroCoefficient). Violations are data, not errors.
ValidationReport validate(const EquationSpec& spec);

/// Solutions are generalized polynomials of degree at most 2n-1.
int degree_bound(const EquationSpec& spec);

StructureFlags detect_structure(const EquationSpec& spec);

FieldElement coeff_sum(const EquationSpec& spec);

/// Stable fingerprint of the canonical serialization; pairs reports with
/// the spec they were computed from.
std::uint64_t spec_fingerprint(const EquationSpec& spec);

} // namespace feq
