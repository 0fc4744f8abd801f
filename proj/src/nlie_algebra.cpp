#include "filippov/nlie_algebra.hpp"

#include "filippov/error.hpp"
#include "filippov/linalg.hpp"

#include <algorithm>
#include <cstdlib>
#include <cstring>
#include <string>

namespace filippov {

namespace {

IndexTuple validated_indices(int dim, IndexTuple idx) {
    for (int i : idx)
        if (i < 1 || i > dim)
            throw Error(ErrorKind::IndexOutOfRange, "index " + std::to_string(i) + " outside 1.." + std::to_string(dim));
    std::sort(idx.begin(), idx.end());
    if (std::adjacent_find(idx.begin(), idx.end()) != idx.end())
        throw Error(ErrorKind::RepeatedIndex, "index listed twice in " + format_tuple(idx));
    return idx;
}

int count_in(const IndexTuple& tuple, const IndexTuple& set) {
    return static_cast<int>(std::count_if(tuple.begin(), tuple.end(), [&](int i) { return contains(set, i); }));
}

// ad_L as a dim x dim matrix, column k = [e_L, e_k].
Matrix ad_of_word(const AntisymTensor& f, const IndexTuple& word) {
    const int d = f.dim();
    Matrix a(d, d);
    IndexTuple full = word;
    full.push_back(0);
    for (int k = 1; k <= d; ++k) {
        full.back() = k;
        Vector col = f.bracket_basis(full);
        for (int l = 0; l < d; ++l)
            a(l, k - 1) = col[l];
    }
    return a;
}

} // namespace

Splitting Splitting::from_i0(int dim, IndexTuple i0) {
    Splitting s;
    s.dim = dim;
    s.i0 = validated_indices(dim, std::move(i0));
    for (int i = 1; i <= dim; ++i)
        if (!contains(s.i0, i))
            s.i1.push_back(i);
    return s;
}

Splitting Splitting::from_parts(int dim, IndexTuple i0, IndexTuple i1) {
    Splitting s = from_i0(dim, std::move(i0));
    if (validated_indices(dim, std::move(i1)) != s.i1)
        throw Error(ErrorKind::DimensionMismatch, "i0 and i1 do not partition 1.." + std::to_string(dim));
    return s;
}

NLieAlgebra NLieAlgebra::new_unchecked(int arity, int dim, const std::vector<Entry>& entries) {
    return from_tensor(AntisymTensor::from_entries(arity, dim, entries));
}

NLieAlgebra NLieAlgebra::from_tensor(AntisymTensor f, Status status) {
    NLieAlgebra a;
    a.f_ = std::move(f);
    a.status_ = status;
    return a;
}

NLieAlgebra NLieAlgebra::checked() const {
    if (verified() && !debug_recheck_enabled())
        return *this;
    auto report = verify_fi(*this);
    if (!report.holds())
        throw Error(ErrorKind::UnverifiedAlgebra,
                    "Filippov identity fails: " + format_violation(report.violations.front()));
    return from_tensor(f_, Status::Verified);
}

Vector bracket(const NLieAlgebra& alg, const std::vector<Vector>& args) {
    const int n = alg.arity();
    const int d = alg.dim();
    if (static_cast<int>(args.size()) != n)
        throw Error(ErrorKind::ArityMismatch,
                    "bracket takes " + std::to_string(n) + " arguments, got " + std::to_string(args.size()));
    for (const auto& a : args)
        if (static_cast<int>(a.size()) != d)
            throw Error(ErrorKind::DimensionMismatch, "bracket argument has wrong length");
    Vector out(d);
    Matrix m(n, n);
    for (const auto& [lower, row] : alg.tensor().rows()) {
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                m(i, j) = args[i][lower[j] - 1];
        Rational det = determinant(m);
        if (det.is_zero())
            continue;
        for (const auto& [k, val] : row)
            out[k - 1] += det * val;
    }
    return out;
}

FIReport verify_fi(const NLieAlgebra& alg) {
    FIReport report;
    const int n = alg.arity();
    const int d = alg.dim();
    const auto& f = alg.tensor();
    const auto outers = combinations(d, n);
    const auto inners = combinations(d, n - 1);
    std::vector<Matrix> ads;
    ads.reserve(inners.size());
    for (const auto& l : inners)
        ads.push_back(ad_of_word(f, l));

    for (const auto& k : outers) {
        const Vector fk = f.bracket_basis(k);
        for (std::size_t li = 0; li < inners.size(); ++li) {
            const Matrix& a = ads[li];
            Vector residual = a * fk;
            for (int i = 0; i < n; ++i) {
                IndexTuple replaced = k;
                for (int l = 1; l <= d; ++l) {
                    const Rational& coeff = a(l - 1, k[i] - 1);
                    if (coeff.is_zero())
                        continue;
                    replaced[i] = l;
                    Vector term = f.bracket_basis(replaced);
                    for (int m = 0; m < d; ++m)
                        if (!term[m].is_zero())
                            residual[m] -= coeff * term[m];
                }
            }
            for (int m = 0; m < d; ++m)
                if (!residual[m].is_zero())
                    report.violations.push_back({k, inners[li], m + 1, residual[m]});
        }
    }
    return report;
}

FIReport verify_fi_antisymmetrized(const NLieAlgebra& alg) {
    FIReport report;
    const int n = alg.arity();
    const int d = alg.dim();
    const auto& f = alg.tensor();
    for (const auto& s : combinations(d, n + 1)) {
        for (const auto& r : combinations(d, n - 2)) {
            Vector total(d);
            for (int j = 0; j <= n; ++j) {
                IndexTuple rest;
                for (int i = 0; i <= n; ++i)
                    if (i != j)
                        rest.push_back(s[i]);
                const Vector head = f.bracket_basis(rest);
                IndexTuple tail{s[j]};
                tail.insert(tail.end(), r.begin(), r.end());
                tail.push_back(0);
                for (int l = 1; l <= d; ++l) {
                    if (head[l - 1].is_zero())
                        continue;
                    tail.back() = l;
                    const Vector term = f.bracket_basis(tail);
                    const Rational coeff = j % 2 == 0 ? head[l - 1] : -head[l - 1];
                    for (int m = 0; m < d; ++m)
                        if (!term[m].is_zero())
                            total[m] += coeff * term[m];
                }
            }
            for (int m = 0; m < d; ++m)
                if (!total[m].is_zero())
                    report.violations.push_back({s, r, m + 1, total[m]});
        }
    }
    return report;
}

NLieAlgebra simple_a(int n) {
    if (n < 2)
        throw Error(ErrorKind::ArityMismatch, "simple algebra needs n >= 2");
    AntisymTensor f(n, n + 1);
    for (int k = 1; k <= n + 1; ++k) {
        IndexTuple lower;
        for (int i = 1; i <= n + 1; ++i)
            if (i != k)
                lower.push_back(i);
        // epsilon_{lower, k} with k moved from the end to its sorted slot
        f.insert(lower, k, (n + 1 - k) % 2 == 0 ? 1 : -1);
    }
    return NLieAlgebra::from_tensor(std::move(f), Status::Verified);
}

NLieAlgebra abelian(int arity, int dim) {
    return NLieAlgebra::from_tensor(AntisymTensor(arity, dim), Status::Verified);
}

NLieAlgebra change_basis_fa(const NLieAlgebra& alg, const Matrix& p) {
    const int n = alg.arity();
    const int d = alg.dim();
    if (static_cast<int>(p.rows()) != d || static_cast<int>(p.cols()) != d)
        throw Error(ErrorKind::DimensionMismatch, "basis matrix must be " + std::to_string(d) + "x" + std::to_string(d));
    const Matrix pinv = inverse(p);
    AntisymTensor f(n, d);
    for (const auto& word : combinations(d, n)) {
        std::vector<Vector> args;
        for (int j : word)
            args.push_back(p.column(j - 1));
        const Vector image = pinv * bracket(alg, args);
        for (int m = 0; m < d; ++m)
            if (!image[m].is_zero())
                f.insert(word, m + 1, image[m]);
    }
    auto out = NLieAlgebra::from_tensor(std::move(f), alg.status());
    if (alg.verified() && debug_recheck_enabled() && !verify_fi(out).holds())
        throw Error(ErrorKind::RecheckFailed, "basis change broke the Filippov identity");
    return out;
}

std::optional<Entry> subalgebra_witness(const NLieAlgebra& alg, const Splitting& s) {
    for (const auto& e : alg.tensor().entries())
        if (count_in(e.lower, s.i0) == alg.arity() && contains(s.i1, e.upper))
            return e;
    return std::nullopt;
}

bool is_subalgebra(const NLieAlgebra& alg, const Splitting& s) { return !subalgebra_witness(alg, s); }

std::optional<Entry> ideal_witness(const NLieAlgebra& alg, const Splitting& s) {
    for (const auto& e : alg.tensor().entries())
        if (count_in(e.lower, s.i1) > 0 && contains(s.i0, e.upper))
            return e;
    return std::nullopt;
}

bool is_ideal(const NLieAlgebra& alg, const Splitting& s) { return !ideal_witness(alg, s); }

std::optional<Entry> abelian_witness(const NLieAlgebra& alg, const Splitting& s) {
    for (const auto& e : alg.tensor().entries())
        if (count_in(e.lower, s.i1) >= 2)
            return e;
    return std::nullopt;
}

bool is_abelian_fa(const NLieAlgebra& alg) { return alg.tensor().empty(); }

bool debug_recheck_enabled() {
    const char* v = std::getenv("FILIPPOV_DEBUG_RECHECK");
    return v != nullptr && std::strcmp(v, "1") == 0;
}

std::string format_violation(const FIViolation& v) {
    return "outer " + format_tuple(v.outer) + ", inner " + format_tuple(v.inner) + ", component " +
           std::to_string(v.free_index) + ": residual " + v.residual.to_string();
}

} // namespace filippov
