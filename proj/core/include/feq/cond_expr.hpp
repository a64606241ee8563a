#pragma once

#include <map>
#include <vector>

#include "feq/number_field.hpp"

namespace feq {

/// Polynomial with rational coefficients in variables x_0 .. x_p, each
/// variable standing for a conjugate root of the field's minimal polynomial.
/// x_0 is the identity slot (it carries the equation coefficients a_i),
/// x_1 .. x_p are the embedding slots. Canonical form keeps every exponent
/// below the field degree by reducing modulo the minimal polynomial
/// variable by variable.
class CondExpr {
public:
    CondExpr(NumberField::Ptr field, int embedding_vars);

    /// The element e placed at variable slot `var` (as a polynomial in that
    /// variable's root).
    static CondExpr from_element(NumberField::Ptr field, int embedding_vars,
                                 const FieldElement& e, int var);
    static CondExpr constant(NumberField::Ptr field, int embedding_vars, const Rational& c);

    int embedding_vars() const { return total_vars_ - 1; }
    int total_vars() const { return total_vars_; }
    const NumberField::Ptr& field() const { return field_; }
    const std::map<std::vector<int>, Rational>& terms() const { return terms_; }
    bool identically_zero() const { return terms_.empty(); }

    /// Adds c * prod_j x_j^exps[j], reducing exponents >= deg(field).
    void add_monomial(const std::vector<int>& exps, const Rational& c);

    CondExpr& operator+=(const CondExpr& o);
    friend CondExpr operator+(CondExpr a, const CondExpr& b) { a += b; return a; }
    friend CondExpr operator*(const CondExpr& a, const CondExpr& b);
    CondExpr scaled(const Rational& s) const;

    /// Bits of a positive floor: whenever the expression is nonzero at any
    /// root tuple, its absolute value is at least 2^-zero_floor_bits().
    /// Liouville-style bound from coefficient heights with the total degree
    /// budget d^(p+1).
    long zero_floor_bits() const;

private:
    NumberField::Ptr field_;
    int total_vars_;
    std::map<std::vector<int>, Rational> terms_;
};

/// Decides exactly whether the expression vanishes at the point
/// (s_identity, s_{h_1}, ..., s_{h_p}). Ball evaluation at escalating
/// precision: nonzero as soon as the enclosure excludes 0, zero once the
/// enclosure drops below the zero floor. Throws PrecisionExhausted only if
/// the floor lies below the configured maximum precision window.
bool is_zero_at_tuple(const CondExpr& e, int identity_index, const EmbeddingTuple& tuple,
                      const PrecisionPolicy& pp = {});

/// Highest working precision any zero decision has escalated to since the
/// last reset (diagnostics).
long precision_high_water();
void reset_precision_high_water();

} // namespace feq
