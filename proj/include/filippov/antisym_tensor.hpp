#ifndef FILIPPOV_ANTISYM_TENSOR_HPP
#define FILIPPOV_ANTISYM_TENSOR_HPP

#include "filippov/combinatorics.hpp"
#include "filippov/matrix.hpp"
#include "filippov/rational.hpp"

#include <map>
#include <vector>

namespace filippov {

/// One structure constant f_{lower}^{upper}.
struct Entry {
    IndexTuple lower;
    int upper = 0;
    Rational value;

    friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sparse tensor f_{l1...ln}^k, fully antisymmetric in the lower indices.
///
/// Only strictly increasing lower tuples are stored and no stored value is
/// zero. Lookups with a permuted tuple pick up the permutation sign; tuples
/// with a repeated index read as zero. Indices are 1-based.
class AntisymTensor {
public:
    using Row = std::map<int, Rational>;

    AntisymTensor() = default;
    AntisymTensor(int arity, int dim);

    /// Builds from entries in any index order. Zero values are dropped, but a
    /// key given twice with different values is a DuplicateEntry error.
    static AntisymTensor from_entries(int arity, int dim, const std::vector<Entry>& entries);

    int arity() const { return arity_; }
    int dim() const { return dim_; }
    bool empty() const { return rows_.empty(); }
    std::size_t entry_count() const;

    /// f_{lower}^{upper}, any order of lower indices.
    Rational get(const IndexTuple& lower, int upper) const;

    /// Image of the basis tuple as a 0-based dense vector.
    Vector bracket_basis(const IndexTuple& lower) const;

    /// Stored rows keyed by strictly increasing lower tuples.
    const std::map<IndexTuple, Row>& rows() const { return rows_; }

    /// Canonical entries, sorted lexicographically by (lower, upper).
    std::vector<Entry> entries() const;

    /// Records a value given in any index order. A second insertion of the
    /// same canonical key must agree with the first (DuplicateEntry).
    void insert(const IndexTuple& lower, int upper, const Rational& value);

    /// Adds to the value at a key, dropping it if it becomes zero.
    void accumulate(const IndexTuple& lower, int upper, const Rational& value);

    friend bool operator==(const AntisymTensor&, const AntisymTensor&) = default;

private:
    void check_indices(const IndexTuple& lower, int upper) const;

    int arity_ = 0;
    int dim_ = 0;
    std::map<IndexTuple, Row> rows_;
};

} // namespace filippov

#endif
