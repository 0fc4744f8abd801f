#ifndef FILIPPOV_LIE_ALGEBRA_HPP
#define FILIPPOV_LIE_ALGEBRA_HPP

#include "filippov/linalg.hpp"
#include "filippov/nlie_algebra.hpp"

#include <string>
#include <vector>

namespace filippov {

/// Ordinary Lie algebra: structure constants c_{ij}^k in an arity-2 tensor.
class LieAlgebra {
public:
    LieAlgebra() = default;

    static LieAlgebra new_unchecked(int dim, const std::vector<Entry>& entries);
    static LieAlgebra from_tensor(AntisymTensor c, Status status = Status::Unverified);

    int dim() const { return c_.dim(); }
    const AntisymTensor& tensor() const { return c_; }
    Status status() const { return status_; }
    bool verified() const { return status_ == Status::Verified; }

    /// Copy marked Verified after an explicit Jacobi check; throws
    /// UnverifiedAlgebra otherwise.
    LieAlgebra checked() const;

    NLieAlgebra as_nlie() const { return NLieAlgebra::from_tensor(c_, status_); }

    friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.c_ == b.c_; }

private:
    AntisymTensor c_{2, 0};
    Status status_ = Status::Unverified;
};

/// Jacobi identity over increasing triples (i, j, k) and every component,
/// in cyclic form. Violations carry the triple in `outer`.
FIReport verify_ji(const LieAlgebra& lie);

Vector lie_bracket(const LieAlgebra& lie, const Vector& x, const Vector& y);

/// ad(e_i) for a 1-based basis index; column j holds [e_i, e_j].
Matrix adjoint(const LieAlgebra& lie, int i);

Subspace center(const LieAlgebra& lie);

/// Span of all [a, b] with a in `a`, b in `b`.
Subspace bracket_span(const LieAlgebra& lie, const Subspace& a, const Subspace& b);

/// Dimensions of the derived (or lower central) series. The list stops at 0,
/// or repeats a stable nonzero dimension once: so(4) gives [6, 6], an abelian
/// algebra of dim 3 gives [3, 0], the zero algebra gives [0].
std::vector<std::size_t> derived_series(const LieAlgebra& lie);
std::vector<std::size_t> lower_central_series(const LieAlgebra& lie);

Matrix killing_form(const LieAlgebra& lie);
std::size_t killing_rank(const LieAlgebra& lie);

struct Fingerprint {
    std::size_t dim = 0;
    std::vector<std::size_t> derived;
    std::vector<std::size_t> lower_central;
    std::size_t center_dim = 0;
    std::size_t killing_rank = 0;

    std::string to_string() const;
    friend bool operator==(const Fingerprint&, const Fingerprint&) = default;
};

Fingerprint fingerprint(const LieAlgebra& lie);

/// Columns of p are the new basis vectors in old coordinates.
LieAlgebra change_basis_lie(const LieAlgebra& lie, const Matrix& p);

/// a on indices 1..a.dim, b shifted after it.
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

LieAlgebra abelian_lie(int dim);

std::string format_series(const std::vector<std::size_t>& s);

} // namespace filippov

#endif
