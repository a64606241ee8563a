#pragma once

#include <optional>
#include <string>
#include <vector>

#include "feq/equation.hpp"
#include "feq/kernel.hpp"

namespace feq {

enum class Classification { UniqueMonomial, MonomialPlusKernel, None, SynthesisRequired };
const char* classification_name(Classification c); // "UNIQUE_MONOMIAL", ...

/// Per-degree verdict. T holds the condition sums
/// T_l = sum_i a_i * C(p,l) * alpha_i^l * beta_i^(p-l) for l = 0..p;
/// the degree admits the monomial x^p exactly when all T_l agree and are
/// nonzero, with the common value c~_p.
struct DegreeReport {
    int p = 0;
    std::vector<FieldElement> T;
    bool identity_admissible = false;
    /// Common value when admissible; zero when every T_l vanishes; absent
    /// when the sums disagree.
    std::optional<FieldElement> c_tilde;
    std::vector<EmbeddingTuple> kernel_witnesses;
    Classification classification = Classification::None;
};

struct AnalysisReport {
    ValidationReport validation;
    StructureFlags flags;
    std::vector<DegreeReport> degrees; // p = 1 .. min(max_degree, 2n-1)
    bool constant_term_admissible = true; // constants always solve, F = (sum a_i) k x + C
    std::uint64_t fingerprint = 0;
};

/// [T_0, ..., T_p], exact. Pre: spec valid and 1 <= p <= 2n-1.
std::vector<FieldElement> condition_sums(const EquationSpec& spec, int p);

/// Verdict for one degree:
///   admissible & kernel empty        -> UNIQUE_MONOMIAL
///   admissible & kernel nonempty     -> MONOMIAL_PLUS_KERNEL
///   not admissible & kernel empty    -> NONE
///   not admissible & kernel nonempty -> SYNTHESIS_REQUIRED
DegreeReport classify_degree(const EquationSpec& spec, int p, const PrecisionPolicy& pp = {});

/// Degree reports for p = 1..min(max_degree, 2n-1).
/// Pre: spec valid (PreconditionFailed otherwise).
AnalysisReport analyze(const EquationSpec& spec, std::optional<int> max_degree = {},
                       const PrecisionPolicy& pp = {});

struct DescendingRelation {
    int p = 0;            // higher degree of the adjacent pair
    std::string relation; // rendered identity
    bool holds = false;
};

/// For beta_i = 1 - alpha_i with nonzero coefficient sum, every adjacent
/// admissible pair must satisfy c~_{p-1} = ((p+1)/p) c~_p, and for p >= 2
/// also sum_i a_i alpha_i^(p-2) = ((p+1)/(p-1)) c~_p. Returns the list of
/// checked identities; a violated one (holds = false) signals an internal
/// inconsistency. Throws StructureMismatch when the shape does not apply.
std::vector<DescendingRelation> descending_check(const EquationSpec& spec,
                                                 const AnalysisReport& report);

/// For alpha_i = 1: true iff every admissible degree has c~_p = sum_i a_i.
/// Throws StructureMismatch when some alpha_i != 1.
bool universal_constant_check(const EquationSpec& spec, const AnalysisReport& report);

} // namespace feq
