#ifndef FILIPPOV_CONTRACTION_HPP
#define FILIPPOV_CONTRACTION_HPP

#include "filippov/induced_lie.hpp"

namespace filippov {

/// One nonnegative weight per Lie basis element.
struct Grading {
    std::vector<int> weights;
    friend bool operator==(const Grading&, const Grading&) = default;
};

/// Contraction of an n-Lie algebra with respect to the subalgebra spanned by
/// s.i0. Keeps brackets of i0 elements landing in i0 and brackets of n-1 i0
/// elements with one i1 element landing in i1; everything else is dropped.
/// Throws UnverifiedAlgebra or NotASubalgebra.
NLieAlgebra contract_fa(const NLieAlgebra& alg, const Splitting& s);

/// Weight of each induced basis word = number of its indices in s.i1.
Grading grading_from_splitting(const NLieAlgebra& alg, const Splitting& s, const InducedLie& il);

/// 0 on the given indices, 1 elsewhere.
Grading two_level_grading(int dim, const IndexTuple& low);

struct WeightViolation {
    int i = 0;
    int j = 0;
    int k = 0;
    Rational value;
};

struct GradingCheck {
    std::vector<WeightViolation> violations;
    bool holds() const { return violations.empty(); }
};

/// Every nonzero c_{ij}^k must satisfy w(k) <= w(i) + w(j).
GradingCheck check_ww_grading(const LieAlgebra& lie, const Grading& g);

/// Keeps c_{ij}^k exactly when w(k) = w(i) + w(j). Throws GradingViolation
/// or DimensionMismatch.
LieAlgebra ww_contract_lie(const LieAlgebra& lie, const Grading& g);

/// Contraction with respect to the coordinate subalgebra on `subalgebra`,
/// via the 0/1 grading. Throws NotASubalgebra.
LieAlgebra iw_contract_lie(const LieAlgebra& lie, const IndexTuple& subalgebra);

} // namespace filippov

#endif
