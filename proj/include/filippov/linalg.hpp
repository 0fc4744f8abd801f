#ifndef FILIPPOV_LINALG_HPP
#define FILIPPOV_LINALG_HPP

#include "filippov/matrix.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace filippov {

struct RrefResult {
    std::size_t rank = 0;
    Matrix reduced;
    std::vector<std::size_t> pivot_cols;
};

/// Reduced row-echelon form over Q. The result is unique, so it doubles as
/// a canonical form for the row space.
RrefResult rref(const Matrix& m);

std::size_t rank(const Matrix& m);

/// A linear subspace of Q^ambient_dim held as the nonzero rows of its RREF.
/// Equal subspaces have identical stored bases, so operator== is subspace
/// equality.
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(std::size_t ambient_dim) : ambient_dim_(ambient_dim) {}

    static Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);
    static Subspace full(std::size_t ambient_dim);
    static Subspace coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices);

    std::size_t ambient_dim() const { return ambient_dim_; }
    std::size_t dim() const { return basis_.size(); }
    const std::vector<Vector>& basis() const { return basis_; }
    const std::vector<std::size_t>& pivots() const { return pivots_; }

    bool contains(const Vector& v) const;
    /// v minus its components along the pivots; zero iff v lies in the subspace.
    Vector reduce(Vector v) const;
    bool contains(const Subspace& other) const;

    friend bool operator==(const Subspace& a, const Subspace& b) = default;

private:
    friend std::pair<Subspace, bool> echelon_extend(const Subspace& current, const Vector& candidate);

    std::size_t ambient_dim_ = 0;
    std::vector<Vector> basis_;
    std::vector<std::size_t> pivots_;
};

Subspace kernel(const Matrix& m);

/// Coefficients c with sum c_i * basis_i == target, or nullopt when target is
/// outside the span. Throws LinearlyDependent if the basis is not independent.
std::optional<Vector> solve_in_span(const std::vector<Vector>& basis_vectors, const Vector& target);

/// Returns (span(current + candidate), candidate was outside current).
std::pair<Subspace, bool> echelon_extend(const Subspace& current, const Vector& candidate);

/// Throws SingularMatrix.
Matrix inverse(const Matrix& m);

Rational determinant(const Matrix& m);

} // namespace filippov

#endif
