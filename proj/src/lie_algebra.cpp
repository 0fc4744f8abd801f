#include "filippov/lie_algebra.hpp"

#include "filippov/error.hpp"

namespace filippov {

LieAlgebra LieAlgebra::new_unchecked(int dim, const std::vector<Entry>& entries) {
    return from_tensor(AntisymTensor::from_entries(2, dim, entries));
}

LieAlgebra LieAlgebra::from_tensor(AntisymTensor c, Status status) {
    if (c.arity() != 2)
        throw Error(ErrorKind::ArityMismatch, "Lie algebra needs arity 2");
    LieAlgebra l;
    l.c_ = std::move(c);
    l.status_ = status;
    return l;
}

LieAlgebra LieAlgebra::checked() const {
    if (verified() && !debug_recheck_enabled())
        return *this;
    auto report = verify_ji(*this);
    if (!report.holds())
        throw Error(ErrorKind::UnverifiedAlgebra, "Jacobi identity fails: " + format_violation(report.violations.front()));
    return from_tensor(c_, Status::Verified);
}

FIReport verify_ji(const LieAlgebra& lie) {
    FIReport report;
    const int d = lie.dim();
    const auto& c = lie.tensor();
    for (const auto& t : combinations(d, 3)) {
        const int i = t[0], j = t[1], k = t[2];
        Vector total(d);
        // [[e_a, e_b], e_c] for the three cyclic rotations
        const int cyc[3][3] = {{i, j, k}, {j, k, i}, {k, i, j}};
        for (const auto& r : cyc) {
            const Vector ab = c.bracket_basis({r[0], r[1]});
            for (int l = 1; l <= d; ++l) {
                if (ab[l - 1].is_zero())
                    continue;
                const Vector term = c.bracket_basis({l, r[2]});
                for (int m = 0; m < d; ++m)
                    if (!term[m].is_zero())
                        total[m] += ab[l - 1] * term[m];
            }
        }
        for (int m = 0; m < d; ++m)
            if (!total[m].is_zero())
                report.violations.push_back({t, {}, m + 1, total[m]});
    }
    return report;
}

Vector lie_bracket(const LieAlgebra& lie, const Vector& x, const Vector& y) {
    return bracket(lie.as_nlie(), {x, y});
}

Matrix adjoint(const LieAlgebra& lie, int i) {
    const int d = lie.dim();
    Matrix a(d, d);
    for (int j = 1; j <= d; ++j) {
        const Vector col = lie.tensor().bracket_basis({i, j});
        for (int k = 0; k < d; ++k)
            a(k, j - 1) = col[k];
    }
    return a;
}

Subspace center(const LieAlgebra& lie) {
    // x is central iff sum_i x_i c_{ij}^k = 0 for all j, k
    const std::size_t d = static_cast<std::size_t>(lie.dim());
    Matrix stacked(d * d, d);
    for (std::size_t i = 0; i < d; ++i) {
        const Matrix a = adjoint(lie, static_cast<int>(i) + 1);
        for (std::size_t r = 0; r < d * d; ++r)
            stacked(r, i) = a.entries()[r];
    }
    return kernel(stacked);
}

Subspace bracket_span(const LieAlgebra& lie, const Subspace& a, const Subspace& b) {
    std::vector<Vector> images;
    for (const auto& x : a.basis())
        for (const auto& y : b.basis())
            images.push_back(lie_bracket(lie, x, y));
    return Subspace::span(images, static_cast<std::size_t>(lie.dim()));
}

namespace {

template <typename Step>
std::vector<std::size_t> series(const LieAlgebra& lie, Step step) {
    Subspace current = Subspace::full(static_cast<std::size_t>(lie.dim()));
    std::vector<std::size_t> dims{current.dim()};
    while (dims.back() != 0) {
        Subspace next = step(current);
        dims.push_back(next.dim());
        if (next.dim() == current.dim())
            break;
        current = std::move(next);
    }
    return dims;
}

} // namespace

std::vector<std::size_t> derived_series(const LieAlgebra& lie) {
    return series(lie, [&](const Subspace& s) { return bracket_span(lie, s, s); });
}

std::vector<std::size_t> lower_central_series(const LieAlgebra& lie) {
    const Subspace whole = Subspace::full(static_cast<std::size_t>(lie.dim()));
    return series(lie, [&](const Subspace& s) { return bracket_span(lie, whole, s); });
}

Matrix killing_form(const LieAlgebra& lie) {
    const int d = lie.dim();
    std::vector<Matrix> ads;
    for (int i = 1; i <= d; ++i)
        ads.push_back(adjoint(lie, i));
    Matrix k(d, d);
    for (int i = 0; i < d; ++i)
        for (int j = i; j < d; ++j) {
            k(i, j) = (ads[i] * ads[j]).trace();
            k(j, i) = k(i, j);
        }
    return k;
}

std::size_t killing_rank(const LieAlgebra& lie) { return rank(killing_form(lie)); }

std::string format_series(const std::vector<std::size_t>& s) {
    std::string out = "[";
    for (std::size_t i = 0; i < s.size(); ++i) {
        if (i)
            out += ",";
        out += std::to_string(s[i]);
    }
    return out + "]";
}

std::string Fingerprint::to_string() const {
    return "(" + std::to_string(dim) + ", " + format_series(derived) + ", " + format_series(lower_central) + ", " +
           std::to_string(center_dim) + ", " + std::to_string(killing_rank) + ")";
}

Fingerprint fingerprint(const LieAlgebra& lie) {
    return {static_cast<std::size_t>(lie.dim()), derived_series(lie), lower_central_series(lie), center(lie).dim(),
            killing_rank(lie)};
}

LieAlgebra change_basis_lie(const LieAlgebra& lie, const Matrix& p) {
    auto changed = change_basis_fa(lie.as_nlie(), p);
    return LieAlgebra::from_tensor(changed.tensor(), lie.status());
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
    const int shift = a.dim();
    AntisymTensor c(2, a.dim() + b.dim());
    for (const auto& e : a.tensor().entries())
        c.insert(e.lower, e.upper, e.value);
    for (const auto& e : b.tensor().entries())
        c.insert({e.lower[0] + shift, e.lower[1] + shift}, e.upper + shift, e.value);
    const bool both = a.verified() && b.verified();
    return LieAlgebra::from_tensor(std::move(c), both ? Status::Verified : Status::Unverified);
}

LieAlgebra abelian_lie(int dim) { return LieAlgebra::from_tensor(AntisymTensor(2, dim), Status::Verified); }

} // namespace filippov
