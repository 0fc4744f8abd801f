#ifndef FILIPPOV_STRUCTURE_ANALYSIS_HPP
#define FILIPPOV_STRUCTURE_ANALYSIS_HPP

#include "filippov/lie_algebra.hpp"

#include <optional>
#include <string>

namespace filippov {

/// A named verdict with its evidence: for true claims, what to re-check; for
/// false ones, a counterexample.
struct Claim {
    std::string name;
    bool verdict = false;
    std::string witness;
    friend bool operator==(const Claim&, const Claim&) = default;
};

struct StructureReport {
    std::string subject;
    std::vector<Claim> claims;
    std::string verdict;

    bool all_hold() const;
    const Claim* find(const std::string& name) const;
    friend bool operator==(const StructureReport&, const StructureReport&) = default;
};

/// Claims: i0 subalgebra, i1 ideal, i1 abelian.
StructureReport semidirect_report_fa(const NLieAlgebra& alg, const Splitting& s);

/// Some [b, e_j] with b in the basis of s that leaves s, as text.
std::optional<std::string> lie_ideal_witness(const LieAlgebra& lie, const Subspace& s);

/// Structure constants on the coordinates that are not pivots of `ideal`,
/// in ascending order. Throws NotAnIdeal or DimensionMismatch.
LieAlgebra quotient_lie(const LieAlgebra& lie, const Subspace& ideal);

/// Indices (1-based) of the quotient basis, as chosen by quotient_lie.
std::vector<int> quotient_basis(const Subspace& ideal);

bool is_central_subspace(const LieAlgebra& lie, const Subspace& s);

struct MatchResult {
    bool matches = false;
    std::string mismatch;
};

/// Whether change_basis_lie(a, basis_map) has exactly the constants of b.
MatchResult match_structure_constants(const LieAlgebra& a, const LieAlgebra& b, const Matrix& basis_map);

/// basis_map carries the quotient big/ideal onto target. Throws
/// DimensionMismatch if the ideal or the map has the wrong shape.
StructureReport certify_central_extension(const LieAlgebra& big, const Subspace& ideal, const LieAlgebra& target,
                                          const Matrix& basis_map);

inline constexpr const char* kFingerprintDistinct = "fingerprint-distinct";
inline constexpr const char* kFingerprintEqual = "fingerprint-equal (isomorphism not decided)";

StructureReport compare_report(const LieAlgebra& a, const LieAlgebra& b);

/// Aligned plain-text rendering.
std::string render_report(const StructureReport& r);

} // namespace filippov

#endif
