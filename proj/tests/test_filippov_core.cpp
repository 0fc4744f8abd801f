#include "corpus.hpp"
#include "filippov/lie_algebra.hpp"
#include "filippov/linalg.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace filippov;

namespace {

ErrorKind kind_of(const std::function<void()>& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    FAIL("no exception");
    return ErrorKind::ParseError;
}

Matrix random_basis(std::mt19937& rng, int d) {
    auto m = oracle::random_invertible(d, rng);
    Matrix p(d, d);
    for (int r = 0; r < d; ++r)
        for (int c = 0; c < d; ++c)
            p(r, c) = Rational(m[r][c]);
    return p;
}

} // namespace

TEST_CASE("new_unchecked canonicalizes") {
    auto a4 = NLieAlgebra::new_unchecked(3, 4, {{{1, 2, 3}, 4, 1}, {{1, 2, 4}, 3, -1}, {{1, 3, 4}, 2, 1}, {{2, 3, 4}, 1, -1}});
    CHECK(a4 == simple_a(3));
    CHECK(a4.status() == Status::Unverified);

    auto so3 = NLieAlgebra::new_unchecked(2, 3, {{{1, 2}, 3, 1}, {{2, 3}, 1, 1}, {{3, 1}, 2, 1}});
    CHECK(so3 == simple_a(2));

    auto flipped = NLieAlgebra::new_unchecked(3, 4, {{{2, 1, 3}, 4, 1}});
    REQUIRE(flipped.tensor().entries().size() == 1);
    CHECK(flipped.tensor().entries()[0] == Entry{{1, 2, 3}, 4, -1});
}

TEST_CASE("antisymmetric lookup") {
    const auto a4 = simple_a(3);
    const auto& f = a4.tensor();
    std::vector<int> p{1, 2, 3};
    do {
        CHECK(f.get(p, 4) == Rational(oracle::inversion_sign(p)));
    } while (std::next_permutation(p.begin(), p.end()));
    CHECK(f.get({1, 1, 2}, 4) == 0);
    CHECK(f.get({1, 2, 3}, 1) == 0);
}

TEST_CASE("new_unchecked errors") {
    CHECK(kind_of([] { NLieAlgebra::new_unchecked(3, 4, {{{1, 2, 5}, 4, 1}}); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([] { NLieAlgebra::new_unchecked(3, 4, {{{1, 2, 3}, 0, 1}}); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([] { NLieAlgebra::new_unchecked(3, 4, {{{1, 2, 3}, 4, 1}, {{2, 1, 3}, 4, 1}}); }) ==
          ErrorKind::DuplicateEntry);
    CHECK(kind_of([] { NLieAlgebra::new_unchecked(3, 4, {{{1, 2, 3}, 4, 0}, {{1, 2, 3}, 4, 2}}); }) ==
          ErrorKind::DuplicateEntry);
    CHECK(kind_of([] { NLieAlgebra::new_unchecked(3, 4, {{{1, 1, 3}, 4, 1}}); }) == ErrorKind::RepeatedIndex);
    CHECK(kind_of([] { NLieAlgebra::new_unchecked(3, 4, {{{1, 2}, 4, 1}}); }) == ErrorKind::ArityMismatch);
    // consistent repeats are accepted
    auto ok = NLieAlgebra::new_unchecked(3, 4, {{{1, 2, 3}, 4, 1}, {{2, 1, 3}, 4, -1}});
    CHECK(ok.tensor().entry_count() == 1);
}

TEST_CASE("bracket examples") {
    const auto a4 = simple_a(3);
    auto e = [](int i) { return unit_vector(4, static_cast<std::size_t>(i - 1)); };
    CHECK(bracket(a4, {e(1), e(2), e(3)}) == e(4));
    Vector minus_e3(4);
    minus_e3[2] = -1;
    CHECK(bracket(a4, {e(1), e(2), e(4)}) == minus_e3);
    CHECK(is_zero(bracket(a4, {e(1), e(1), e(2)})));
    CHECK(kind_of([&] { bracket(a4, {e(1), e(2)}); }) == ErrorKind::ArityMismatch);
}

TEST_CASE("bracket is multilinear and matches the dense oracle") {
    std::mt19937 rng(5);
    std::uniform_int_distribution<int> num(-3, 3);
    for (int n = 2; n <= 4; ++n) {
        const auto alg = simple_a(n);
        const auto dense = oracle::dense(alg);
        const int d = n + 1;
        for (int trial = 0; trial < 10; ++trial) {
            std::vector<Vector> args(n, Vector(d));
            for (auto& a : args)
                for (auto& x : a)
                    x = num(rng);
            oracle::Vec expect(d, 0);
            oracle::each_tuple(d, n, [&](const oracle::Tuple& t) {
                oracle::Q coeff = 1;
                for (int i = 0; i < n; ++i)
                    coeff *= args[i][t[i] - 1].raw();
                if (coeff == 0)
                    return;
                for (int m = 1; m <= d; ++m)
                    expect[m - 1] += coeff * dense.at(t, m);
            });
            const Vector got = bracket(alg, args);
            for (int m = 0; m < d; ++m)
                CHECK(got[m].raw() == expect[m]);
        }
    }
}

TEST_CASE("simple algebras satisfy the identity") {
    for (int n = 2; n <= 6; ++n) {
        const auto a = simple_a(n);
        CHECK(a.dim() == n + 1);
        CHECK(a.verified());
        CHECK(verify_fi(a).holds());
        CHECK(verify_fi_antisymmetrized(a).holds());
    }
    CHECK(simple_a(4).tensor().get({1, 2, 3, 4}, 5) == 1);
    CHECK(simple_a(3).tensor().get({1, 2, 3}, 4) == 1);
}

TEST_CASE("simple algebras agree with the brute-force oracle") {
    for (int n = 2; n <= 4; ++n)
        CHECK(oracle::fi_failures(oracle::dense(simple_a(n))) == 0);
}

TEST_CASE("abelian algebra satisfies the identity") {
    CHECK(verify_fi(abelian(3, 5)).holds());
    CHECK(verify_fi(abelian(2, 7)).holds());
}

TEST_CASE("corrupted A4 is rejected") {
    const auto bad = corpus::a4_corrupted();
    const auto report = verify_fi(bad);
    CHECK_FALSE(report.holds());
    CHECK(oracle::fi_failures(oracle::dense(bad)) > 0);
    // first violation is the lexicographically least (outer, inner, component)
    const auto& first = report.violations.front();
    const auto t = oracle::dense(bad);
    bool found = false;
    for (const auto& k : oracle::sorted_words(4, 3))
        for (const auto& l : oracle::sorted_words(4, 2))
            for (int m = 1; m <= 4 && !found; ++m) {
                oracle::Q lhs = 0, rhs = 0;
                for (int s = 1; s <= 4; ++s)
                    lhs += t.at(k, s) * t.at({l[0], l[1], s}, m);
                for (int i = 0; i < 3; ++i)
                    for (int s = 1; s <= 4; ++s) {
                        auto ks = k;
                        ks[i] = s;
                        rhs += t.at({l[0], l[1], k[i]}, s) * t.at(ks, m);
                    }
                if (lhs != rhs && !found) {
                    found = true;
                    CHECK(first.outer == k);
                    CHECK(first.inner == l);
                    CHECK(first.free_index == m);
                }
            }
    CHECK(found);
    for (std::size_t i = 1; i < report.violations.size(); ++i) {
        const auto& a = report.violations[i - 1];
        const auto& b = report.violations[i];
        CHECK(std::tie(a.outer, a.inner, a.free_index) < std::tie(b.outer, b.inner, b.free_index));
    }
    CHECK_FALSE(verify_fi_antisymmetrized(bad).holds());
    CHECK_THROWS_AS(bad.checked(), Error);
}

TEST_CASE("violations reproduce the oracle residuals") {
    const auto bad = corpus::a4_corrupted();
    const auto t = oracle::dense(bad);
    for (const auto& v : verify_fi(bad).violations) {
        oracle::Q lhs = 0, rhs = 0;
        for (int s = 1; s <= 4; ++s) {
            auto ls = v.inner;
            ls.push_back(s);
            lhs += t.at(v.outer, s) * t.at(ls, v.free_index);
        }
        for (std::size_t i = 0; i < v.outer.size(); ++i)
            for (int s = 1; s <= 4; ++s) {
                auto lk = v.inner;
                lk.push_back(v.outer[i]);
                auto ks = v.outer;
                ks[i] = s;
                rhs += t.at(lk, s) * t.at(ks, v.free_index);
            }
        CHECK(v.residual.raw() == lhs - rhs);
    }
}

TEST_CASE("sign-flipped A4 is the indefinite-metric simple algebra") {
    const auto flipped = corpus::a4_sign_flipped();
    CHECK(oracle::fi_failures(oracle::dense(flipped)) == 0);
    CHECK(verify_fi(flipped).holds());
    CHECK(verify_fi_antisymmetrized(flipped).holds());
}

TEST_CASE("n = 2 identity is the Jacobi identity") {
    const auto so3 = simple_a(2);
    CHECK(verify_fi(so3).holds());
    CHECK(oracle::ji_failures(oracle::dense(so3)) == 0);
    // one sign flipped gives so(2,1), still a Lie algebra
    auto so21 = NLieAlgebra::new_unchecked(2, 3, {{{1, 2}, 3, 1}, {{2, 3}, 1, 1}, {{3, 1}, 2, -1}});
    CHECK(verify_fi(so21).holds());
    CHECK(oracle::ji_failures(oracle::dense(so21)) == 0);
    auto bad = NLieAlgebra::new_unchecked(2, 3, {{{1, 2}, 3, 1}, {{2, 3}, 1, 1}, {{3, 1}, 2, 1}, {{1, 2}, 1, 1}});
    CHECK_FALSE(verify_fi(bad).holds());
    CHECK(oracle::ji_failures(oracle::dense(bad)) > 0);
    CHECK_FALSE(verify_ji(LieAlgebra::from_tensor(bad.tensor())).holds());
    CHECK(verify_ji(LieAlgebra::from_tensor(so21.tensor())).holds());
}

TEST_CASE("both identity forms agree on the corpus") {
    for (const auto& [name, alg] : corpus::fi_corpus()) {
        INFO(name);
        CHECK(verify_fi(alg).holds());
        CHECK(verify_fi_antisymmetrized(alg).holds());
    }
    CHECK(verify_fi(corpus::a4_corrupted()).holds() == verify_fi_antisymmetrized(corpus::a4_corrupted()).holds());
}

TEST_CASE("change of basis examples") {
    const auto a4 = simple_a(3);
    CHECK(change_basis_fa(a4, Matrix::identity(4)) == a4);

    Matrix swap = Matrix::identity(4);
    swap(2, 2) = 0;
    swap(3, 3) = 0;
    swap(2, 3) = 1;
    swap(3, 2) = 1;
    CHECK(change_basis_fa(a4, swap).tensor().get({1, 2, 4}, 3) == 1);

    Matrix scale = Matrix::identity(4);
    scale(3, 3) = 2;
    const auto scaled = change_basis_fa(a4, scale);
    CHECK(scaled.tensor().get({1, 2, 3}, 4) == Rational(1, 2));
    CHECK(scaled.tensor().get({1, 2, 4}, 3) == -2);

    Matrix singular = Matrix::identity(4);
    singular(3, 3) = 0;
    CHECK(kind_of([&] { change_basis_fa(a4, singular); }) == ErrorKind::SingularMatrix);
}

TEST_CASE("identity is basis independent") {
    std::mt19937 rng(2024);
    for (const auto& [name, alg] : corpus::fi_corpus()) {
        if (alg.dim() > 5)
            continue;
        INFO(name);
        for (int trial = 0; trial < 3; ++trial) {
            const Matrix p = random_basis(rng, alg.dim());
            const auto moved = change_basis_fa(alg, p);
            CHECK(verify_fi(moved).holds());
            // back again
            CHECK(change_basis_fa(moved, inverse(p)) == alg);
        }
    }
    for (int trial = 0; trial < 3; ++trial) {
        const auto moved = change_basis_fa(corpus::a4_corrupted(), random_basis(rng, 4));
        CHECK_FALSE(verify_fi(moved).holds());
    }
}

TEST_CASE("subalgebra predicate") {
    const auto a4 = simple_a(3);
    CHECK(is_subalgebra(a4, Splitting::from_i0(4, {4})));
    CHECK(is_subalgebra(a4, Splitting::from_i0(4, {1, 2})));
    CHECK_FALSE(is_subalgebra(a4, Splitting::from_i0(4, {1, 2, 3})));
}

TEST_CASE("ideal predicate") {
    CHECK(is_ideal(corpus::a4_contracted(), Splitting::from_i0(4, {1, 2})));
    const auto a4 = simple_a(3);
    const auto w = ideal_witness(a4, Splitting::from_i0(4, {1, 2}));
    REQUIRE(w);
    CHECK_FALSE(is_ideal(a4, Splitting::from_i0(4, {1, 2})));
    // [X1,X3,X4] = e2
    CHECK(a4.tensor().get({1, 3, 4}, 2) == 1);
    CHECK(is_ideal(a4, Splitting::from_i0(4, {})));
}

TEST_CASE("abelian predicate") {
    CHECK(is_abelian_fa(contract_fa(simple_a(3), Splitting::from_i0(4, {4}))));
    CHECK_FALSE(is_abelian_fa(simple_a(3)));
    CHECK(is_abelian_fa(abelian(3, 7)));
}

TEST_CASE("splitting validation") {
    const auto s = Splitting::from_i0(5, {4, 2});
    CHECK(s.i0 == IndexTuple{2, 4});
    CHECK(s.i1 == IndexTuple{1, 3, 5});
    CHECK(kind_of([] { Splitting::from_i0(3, {4}); }) == ErrorKind::IndexOutOfRange);
    CHECK(kind_of([] { Splitting::from_i0(3, {1, 1}); }) == ErrorKind::RepeatedIndex);
    CHECK(kind_of([] { Splitting::from_parts(3, {1}, {2}); }) == ErrorKind::DimensionMismatch);
}

TEST_CASE("checked upgrades status") {
    auto a4 = NLieAlgebra::new_unchecked(3, 4, {{{1, 2, 3}, 4, 1}, {{1, 2, 4}, 3, -1}, {{1, 3, 4}, 2, 1}, {{2, 3, 4}, 1, -1}});
    CHECK_FALSE(a4.verified());
    CHECK(a4.checked().verified());
}
