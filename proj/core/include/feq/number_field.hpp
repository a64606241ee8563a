#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "feq/ball.hpp"
#include "feq/unipoly.hpp"

namespace feq {

struct Reducible : Error {
    Reducible(const std::string& what, UniPoly factor_witness)
        : Error(what), witness(std::move(factor_witness)) {}
    UniPoly witness;
};

/// Precision window for sound zero decisions: evaluation starts at
/// `start_bits` and escalates by doubling, never past `max_bits`.
struct PrecisionPolicy {
    int start_bits = 128;
    int max_bits = 65536;
};

/// The field Q(u) for u a distinguished complex root of a monic irreducible
/// polynomial. Owns certified enclosures of all deg(m) conjugate roots;
/// embedding index h realizes u -> s_h. Index order is fixed at creation
/// (descending real midpoint, then descending imaginary midpoint) and is
/// preserved across precision refinement.
class NumberField {
public:
    using Ptr = std::shared_ptr<const NumberField>;

    /// Q itself, represented as degree 1 with min_poly t (u = 0).
    static Ptr rationals();

    /// Verifies irreducibility (throws Reducible with a witness factor,
    /// UnsupportedDegree above degree 8), isolates the conjugates and picks
    /// the distinguished root: nearest to the hint when one is given
    /// (AmbiguousHint when no single root is strictly nearest), otherwise
    /// index 0.
    static Ptr create(const UniPoly& min_poly,
                      std::optional<std::pair<Rational, Rational>> root_hint = {});

    const UniPoly& min_poly() const { return min_poly_; }
    int degree() const { return degree_; }
    int distinguished_index() const { return distinguished_; }
    bool is_rational() const { return degree_ == 1; }

    /// Enclosure of conjugate s_index with radius <= 2^-precision_bits.
    Ball root_ball(int index, int precision_bits) const;
    std::vector<Ball> roots(int precision_bits) const;

    /// Structural identity: same minimal polynomial and distinguished root.
    bool same_field(const NumberField& other) const;

private:
    NumberField(UniPoly m, int distinguished, std::vector<Ball> initial_roots, int initial_bits);
    void refine_locked(int bits) const;

    UniPoly min_poly_;
    int degree_;
    int distinguished_;

    mutable std::mutex mu_;
    mutable int cached_bits_;
    mutable std::vector<Ball> cache_;
};

/// Element of Q(u), stored as a polynomial in u of degree < deg(field).
class FieldElement {
public:
    FieldElement(NumberField::Ptr field, std::vector<Rational> coeffs);
    static FieldElement from_rational(NumberField::Ptr field, const Rational& q);
    static FieldElement zero(NumberField::Ptr field);
    static FieldElement one(NumberField::Ptr field);
    static FieldElement generator(NumberField::Ptr field);

    const NumberField::Ptr& field() const { return field_; }
    const std::vector<Rational>& coeffs() const { return coeffs_; }

    bool is_zero() const;
    bool is_rational() const;
    /// Pre: is_rational().
    Rational as_rational() const;

    FieldElement operator-() const;
    friend FieldElement operator+(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator-(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const FieldElement& b);
    friend FieldElement operator*(const FieldElement& a, const Rational& s);
    friend FieldElement operator/(const FieldElement& a, const FieldElement& b);
    FieldElement inverse() const;
    FieldElement pow(unsigned long k) const;

    friend bool operator==(const FieldElement& a, const FieldElement& b);
    friend bool operator!=(const FieldElement& a, const FieldElement& b) { return !(a == b); }

    /// Enclosure of the image of this element under u -> s_root_index,
    /// radius <= 2^-precision_bits.
    Ball embed(int root_index, int precision_bits) const;

    /// Canonical rendering, e.g. "(1/6)*u + 1/2"; parses back identically.
    std::string str() const;

private:
    static void check_same_field(const FieldElement& a, const FieldElement& b);
    NumberField::Ptr field_;
    std::vector<Rational> coeffs_; // length deg(field), lowest power first
};

/// Indices (h_1, ..., h_p) of conjugate roots, one automorphism per slot.
struct EmbeddingTuple {
    std::vector<int> indices;
    friend bool operator==(const EmbeddingTuple& a, const EmbeddingTuple& b) {
        return a.indices == b.indices;
    }
};

} // namespace feq
