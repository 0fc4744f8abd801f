#ifndef FILIPPOV_INDUCED_LIE_HPP
#define FILIPPOV_INDUCED_LIE_HPP

#include "filippov/fundamental_object.hpp"
#include "filippov/lie_algebra.hpp"

namespace filippov {

/// Lie algebra of inner derivations ad_X of an n-Lie algebra.
///
/// Basis element i is ad of basis_words[i]; ad_map[w] gives ad of the w-th
/// wedge word (lexicographic order) in that basis.
struct InducedLie {
    LieAlgebra lie;
    int source_arity = 0;
    int source_dim = 0;
    std::vector<IndexTuple> basis_words;
    std::vector<Vector> ad_map;
    Subspace kernel;
};

/// Throws UnverifiedAlgebra, or InternalSpanError if a commutator of ad
/// matrices falls outside their span.
InducedLie induce(const NLieAlgebra& alg);

/// Flattened row-major ad matrix of a wedge word.
Vector flat_ad(const NLieAlgebra& alg, const IndexTuple& word);

} // namespace filippov

#endif
