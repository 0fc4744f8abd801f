#ifndef FILIPPOV_NLIE_ALGEBRA_HPP
#define FILIPPOV_NLIE_ALGEBRA_HPP

#include "filippov/antisym_tensor.hpp"
#include "filippov/matrix.hpp"

#include <optional>
#include <vector>

namespace filippov {

enum class Status { Unverified, Verified };

/// Partition of the basis indices 1..dim into i0 (subalgebra) and i1 (coset).
struct Splitting {
    int dim = 0;
    IndexTuple i0;
    IndexTuple i1;

    /// i1 is the complement of i0. Throws IndexOutOfRange or RepeatedIndex.
    static Splitting from_i0(int dim, IndexTuple i0);
    /// Both halves given explicitly; they must partition 1..dim.
    static Splitting from_parts(int dim, IndexTuple i0, IndexTuple i1);

    friend bool operator==(const Splitting&, const Splitting&) = default;
};

/// One failing equation of the identity check. For the derivation form,
/// `outer` is the n-tuple acted on and `inner` the (n-1)-tuple acting; for
/// the antisymmetrized form they are the (n+1)-tuple and the (n-2)-tuple.
struct FIViolation {
    IndexTuple outer;
    IndexTuple inner;
    int free_index = 0;
    Rational residual;
};

struct FIReport {
    std::vector<FIViolation> violations;
    bool holds() const { return violations.empty(); }
};

/// n-ary algebra given by its structure constants. Immutable.
class NLieAlgebra {
public:
    NLieAlgebra() = default;

    static NLieAlgebra new_unchecked(int arity, int dim, const std::vector<Entry>& entries);
    static NLieAlgebra from_tensor(AntisymTensor f, Status status = Status::Unverified);

    int arity() const { return f_.arity(); }
    int dim() const { return f_.dim(); }
    const AntisymTensor& tensor() const { return f_; }
    Status status() const { return status_; }
    bool verified() const { return status_ == Status::Verified; }

    /// Copy marked Verified, after running verify_fi. Throws UnverifiedAlgebra
    /// naming the first violation when the identity fails.
    NLieAlgebra checked() const;

    /// Equal structure constants; the status is not compared.
    friend bool operator==(const NLieAlgebra& a, const NLieAlgebra& b) { return a.f_ == b.f_; }

private:
    AntisymTensor f_;
    Status status_ = Status::Unverified;
};

/// Multilinear bracket of n coordinate vectors. Throws ArityMismatch or
/// DimensionMismatch.
Vector bracket(const NLieAlgebra& alg, const std::vector<Vector>& args);

/// Derivation form of the Filippov identity over all increasing tuples;
/// violations come out in lexicographic (outer, inner, free index) order.
FIReport verify_fi(const NLieAlgebra& alg);

/// The identity antisymmetrized over n+1 lower indices. A consequence of the
/// derivation form; for n = 2 the two coincide with the Jacobi identity.
FIReport verify_fi_antisymmetrized(const NLieAlgebra& alg);

/// The simple Euclidean n-Lie algebra of dimension n+1.
NLieAlgebra simple_a(int n);

NLieAlgebra abelian(int arity, int dim);

/// Columns of p are the new basis vectors written in the old basis.
/// Throws SingularMatrix or DimensionMismatch.
NLieAlgebra change_basis_fa(const NLieAlgebra& alg, const Matrix& p);

/// First entry with all lower indices in i0 and upper index in i1.
std::optional<Entry> subalgebra_witness(const NLieAlgebra& alg, const Splitting& s);
bool is_subalgebra(const NLieAlgebra& alg, const Splitting& s);

/// First entry with a lower index in i1 and upper index in i0.
std::optional<Entry> ideal_witness(const NLieAlgebra& alg, const Splitting& s);
/// Whether span{e_u : u in i1} is an ideal.
bool is_ideal(const NLieAlgebra& alg, const Splitting& s);

/// First entry with at least two lower indices in i1.
std::optional<Entry> abelian_witness(const NLieAlgebra& alg, const Splitting& s);

bool is_abelian_fa(const NLieAlgebra& alg);

/// True when FILIPPOV_DEBUG_RECHECK=1.
bool debug_recheck_enabled();

std::string format_violation(const FIViolation& v);

} // namespace filippov

#endif
