#include "filippov/linalg.hpp"

#include "filippov/error.hpp"

#include <algorithm>

namespace filippov {

RrefResult rref(const Matrix& m) {
    RrefResult out;
    out.reduced = m;
    Matrix& a = out.reduced;
    std::size_t lead = 0;
    for (std::size_t c = 0; c < a.cols() && lead < a.rows(); ++c) {
        std::size_t p = lead;
        while (p < a.rows() && a(p, c).is_zero())
            ++p;
        if (p == a.rows())
            continue;
        if (p != lead)
            for (std::size_t j = 0; j < a.cols(); ++j)
                std::swap(a(p, j), a(lead, j));
        Rational inv = Rational(1) / a(lead, c);
        for (std::size_t j = c; j < a.cols(); ++j)
            a(lead, j) *= inv;
        for (std::size_t r = 0; r < a.rows(); ++r) {
            if (r == lead || a(r, c).is_zero())
                continue;
            Rational factor = a(r, c);
            for (std::size_t j = c; j < a.cols(); ++j)
                if (!a(lead, j).is_zero())
                    a(r, j) -= factor * a(lead, j);
        }
        out.pivot_cols.push_back(c);
        ++lead;
    }
    out.rank = lead;
    return out;
}

std::size_t rank(const Matrix& m) { return rref(m).rank; }

Subspace Subspace::span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    if (vectors.empty())
        return s;
    auto r = rref(Matrix::from_rows(vectors, ambient_dim));
    for (std::size_t i = 0; i < r.rank; ++i) {
        auto row = r.reduced.row(i);
        s.basis_.emplace_back(row.begin(), row.end());
    }
    s.pivots_ = std::move(r.pivot_cols);
    return s;
}

Subspace Subspace::full(std::size_t ambient_dim) {
    Subspace s(ambient_dim);
    for (std::size_t i = 0; i < ambient_dim; ++i) {
        s.basis_.push_back(unit_vector(ambient_dim, i));
        s.pivots_.push_back(i);
    }
    return s;
}

Subspace Subspace::coordinate(std::size_t ambient_dim, const std::vector<std::size_t>& indices) {
    std::vector<Vector> vs;
    for (auto i : indices)
        vs.push_back(unit_vector(ambient_dim, i));
    return span(vs, ambient_dim);
}

Vector Subspace::reduce(Vector v) const {
    if (v.size() != ambient_dim_)
        throw Error(ErrorKind::DimensionMismatch, "vector length differs from ambient dimension");
    for (std::size_t i = 0; i < basis_.size(); ++i) {
        Rational coeff = v[pivots_[i]];
        if (coeff.is_zero())
            continue;
        for (std::size_t j = 0; j < ambient_dim_; ++j)
            if (!basis_[i][j].is_zero())
                v[j] -= coeff * basis_[i][j];
    }
    return v;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
    return std::all_of(other.basis_.begin(), other.basis_.end(),
                       [&](const Vector& v) { return contains(v); });
}

Subspace kernel(const Matrix& m) {
    auto r = rref(m);
    std::vector<bool> is_pivot(m.cols(), false);
    for (auto p : r.pivot_cols)
        is_pivot[p] = true;
    std::vector<Vector> vs;
    for (std::size_t f = 0; f < m.cols(); ++f) {
        if (is_pivot[f])
            continue;
        Vector v(m.cols());
        v[f] = 1;
        for (std::size_t i = 0; i < r.rank; ++i)
            v[r.pivot_cols[i]] = -r.reduced(i, f);
        vs.push_back(std::move(v));
    }
    return Subspace::span(vs, m.cols());
}

std::optional<Vector> solve_in_span(const std::vector<Vector>& basis_vectors, const Vector& target) {
    const std::size_t k = basis_vectors.size();
    const std::size_t n = target.size();
    Matrix aug(n, k + 1);
    for (std::size_t c = 0; c < k; ++c) {
        if (basis_vectors[c].size() != n)
            throw Error(ErrorKind::DimensionMismatch, "basis vector length differs from target");
        for (std::size_t r = 0; r < n; ++r)
            aug(r, c) = basis_vectors[c][r];
    }
    for (std::size_t r = 0; r < n; ++r)
        aug(r, k) = target[r];
    auto red = rref(aug);
    const bool target_pivot = red.rank > 0 && red.pivot_cols.back() == k;
    const std::size_t basis_rank = red.rank - (target_pivot ? 1 : 0);
    if (basis_rank != k)
        throw Error(ErrorKind::LinearlyDependent, "span basis is not linearly independent");
    if (target_pivot)
        return std::nullopt;
    Vector coeffs(k);
    for (std::size_t i = 0; i < k; ++i)
        coeffs[i] = red.reduced(i, k);
    return coeffs;
}

std::pair<Subspace, bool> echelon_extend(const Subspace& current, const Vector& candidate) {
    Vector rem = current.reduce(candidate);
    auto lead = std::find_if(rem.begin(), rem.end(), [](const Rational& x) { return !x.is_zero(); });
    if (lead == rem.end())
        return {current, false};
    const std::size_t p = static_cast<std::size_t>(lead - rem.begin());
    Rational inv = Rational(1) / rem[p];
    for (auto& x : rem)
        x *= inv;
    Subspace out(current.ambient_dim());
    out.basis_ = current.basis_;
    out.pivots_ = current.pivots_;
    for (auto& b : out.basis_) {
        Rational coeff = b[p];
        if (coeff.is_zero())
            continue;
        for (std::size_t j = 0; j < b.size(); ++j)
            if (!rem[j].is_zero())
                b[j] -= coeff * rem[j];
    }
    auto pos = std::lower_bound(out.pivots_.begin(), out.pivots_.end(), p) - out.pivots_.begin();
    out.pivots_.insert(out.pivots_.begin() + pos, p);
    out.basis_.insert(out.basis_.begin() + pos, std::move(rem));
    return {std::move(out), true};
}

Matrix inverse(const Matrix& m) {
    if (!m.square())
        throw Error(ErrorKind::SingularMatrix, "non-square matrix has no inverse");
    const std::size_t n = m.rows();
    Matrix aug(n, 2 * n);
    for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < n; ++c)
            aug(r, c) = m(r, c);
        aug(r, n + r) = 1;
    }
    auto red = rref(aug);
    if (red.rank < n || (n > 0 && red.pivot_cols[n - 1] != n - 1))
        throw Error(ErrorKind::SingularMatrix, "matrix is not invertible");
    Matrix inv(n, n);
    for (std::size_t r = 0; r < n; ++r)
        for (std::size_t c = 0; c < n; ++c)
            inv(r, c) = red.reduced(r, n + c);
    return inv;
}

Rational determinant(const Matrix& m) {
    if (!m.square())
        throw Error(ErrorKind::DimensionMismatch, "determinant of a non-square matrix");
    Matrix a = m;
    const std::size_t n = a.rows();
    Rational det = 1;
    for (std::size_t c = 0; c < n; ++c) {
        std::size_t p = c;
        while (p < n && a(p, c).is_zero())
            ++p;
        if (p == n)
            return 0;
        if (p != c) {
            for (std::size_t j = 0; j < n; ++j)
                std::swap(a(p, j), a(c, j));
            det = -det;
        }
        det *= a(c, c);
        Rational inv = Rational(1) / a(c, c);
        for (std::size_t r = c + 1; r < n; ++r) {
            if (a(r, c).is_zero())
                continue;
            Rational factor = a(r, c) * inv;
            for (std::size_t j = c; j < n; ++j)
                a(r, j) -= factor * a(c, j);
        }
    }
    return det;
}

} // namespace filippov
