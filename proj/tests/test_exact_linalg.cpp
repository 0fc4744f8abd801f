#include "filippov/error.hpp"
#include "filippov/linalg.hpp"
#include "oracle.hpp"

#include <doctest.h>

#include <random>

using namespace filippov;

namespace {

Matrix to_matrix(const oracle::Mat& m) {
    Matrix out(m.size(), m.empty() ? 0 : m[0].size());
    for (std::size_t r = 0; r < m.size(); ++r)
        for (std::size_t c = 0; c < m[r].size(); ++c)
            out(r, c) = Rational(m[r][c]);
    return out;
}

oracle::Mat random_matrix(std::mt19937& rng, int rows, int cols) {
    std::uniform_int_distribution<int> num(-4, 4), den(1, 3), zero(0, 2);
    oracle::Mat m(rows, oracle::Vec(cols));
    for (auto& r : m)
        for (auto& x : r) {
            x = zero(rng) == 0 ? oracle::Q(0) : oracle::Q(num(rng), den(rng));
            x.canonicalize();
        }
    return m;
}

} // namespace

TEST_CASE("rational canonical form") {
    CHECK(Rational(2, 4).to_string() == "1/2");
    CHECK(Rational(3, -6).to_string() == "-1/2");
    CHECK(Rational(0, 5).to_string() == "0");
    CHECK(Rational::parse("-12/8") == Rational(-3, 2));
    CHECK(Rational::parse("7").is_integer());
    CHECK(Rational(1, 3) + Rational(1, 6) == Rational(1, 2));
    CHECK(Rational(-1, 2) < Rational(1, 3));
}

TEST_CASE("rational errors") {
    CHECK_THROWS_AS(Rational::parse("1/0"), Error);
    CHECK_THROWS_AS(Rational::parse("abc"), Error);
    CHECK_THROWS_AS(Rational::parse("1.5"), Error);
    CHECK_THROWS_AS(Rational::parse(""), Error);
    try {
        Rational(1) / Rational(0);
        FAIL("expected an exception");
    } catch (const Error& e) {
        CHECK(e.kind() == ErrorKind::DivisionByZero);
    }
}

TEST_CASE("rational survives large intermediates") {
    Rational x = 1;
    for (int i = 0; i < 200; ++i)
        x *= Rational(3, 2);
    for (int i = 0; i < 200; ++i)
        x /= Rational(3, 2);
    CHECK(x == 1);
}

TEST_CASE("rref examples") {
    auto id = rref(Matrix::identity(3));
    CHECK(id.rank == 3);
    CHECK(id.pivot_cols == std::vector<std::size_t>{0, 1, 2});

    auto z = rref(Matrix(2, 4));
    CHECK(z.rank == 0);
    CHECK(z.reduced.is_zero());

    auto r = rref(Matrix{{1, 2}, {2, 4}});
    CHECK(r.rank == 1);
    CHECK(r.reduced == Matrix{{1, 2}, {0, 0}});
}

TEST_CASE("kernel examples") {
    CHECK(kernel(Matrix::identity(3)).dim() == 0);
    CHECK(kernel(Matrix(3, 3)).dim() == 3);
    auto k = kernel(Matrix{{1, 1, 0}});
    CHECK(k.dim() == 2);
    CHECK(k.contains(Vector{1, -1, 0}));
    CHECK_FALSE(k.contains(Vector{1, 0, 0}));
}

TEST_CASE("solve_in_span examples") {
    auto a = solve_in_span({{1, 0}, {0, 1}}, {1, 2});
    REQUIRE(a);
    CHECK(*a == Vector{1, 2});
    CHECK_FALSE(solve_in_span({{1, 0}}, {0, 1}));
    auto b = solve_in_span({{1, 1}, {1, -1}}, {3, 1});
    REQUIRE(b);
    CHECK(*b == Vector{2, 1});
    CHECK_THROWS_AS(solve_in_span({{1, 1}, {2, 2}}, {1, 1}), Error);
}

TEST_CASE("echelon_extend examples") {
    const Subspace e1 = Subspace::span({{1, 0}}, 2);
    auto [same, grew] = echelon_extend(e1, {1, 0});
    CHECK_FALSE(grew);
    CHECK(same == e1);
    auto [both, grew2] = echelon_extend(e1, {0, 1});
    CHECK(grew2);
    CHECK(both == Subspace::full(2));
    const Subspace s = Subspace::span({{1, 1, 0}}, 3);
    auto [s2, grew3] = echelon_extend(s, {2, 2, 0});
    CHECK_FALSE(grew3);
    CHECK(s2 == s);
}

TEST_CASE("echelon_extend stays canonical") {
    std::mt19937 rng(7);
    for (int trial = 0; trial < 30; ++trial) {
        auto m = random_matrix(rng, 4, 5);
        Subspace built(5);
        std::vector<Vector> rows;
        for (const auto& r : m) {
            Vector v;
            for (const auto& x : r)
                v.push_back(Rational(x));
            rows.push_back(v);
            built = echelon_extend(built, v).first;
        }
        CHECK(built == Subspace::span(rows, 5));
    }
}

TEST_CASE("rank and kernel agree with the oracle on random matrices") {
    std::mt19937 rng(12345);
    for (int trial = 0; trial < 60; ++trial) {
        const int rows = 1 + trial % 5, cols = 1 + (trial / 5) % 6;
        auto m = random_matrix(rng, rows, cols);
        const Matrix lm = to_matrix(m);
        const auto r = rref(lm);
        CHECK(static_cast<int>(r.rank) == oracle::rank(m));
        // rank + nullity
        const Subspace k = kernel(lm);
        CHECK(r.rank + k.dim() == lm.cols());
        for (const auto& v : k.basis())
            CHECK(is_zero(lm * v));
        // idempotent
        CHECK(rref(r.reduced).reduced == r.reduced);
    }
}

TEST_CASE("solve_in_span reproduces the target") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 40; ++trial) {
        const int d = 2 + trial % 4;
        auto basis_m = oracle::random_invertible(d, rng);
        std::vector<Vector> basis;
        for (int i = 0; i < d - 1; ++i) {
            Vector v;
            for (const auto& x : basis_m[i])
                v.push_back(Rational(x));
            basis.push_back(v);
        }
        Vector target(d);
        for (int i = 0; i < d - 1; ++i)
            for (int j = 0; j < d; ++j)
                target[j] += Rational(i + 1, 2) * basis[i][j];
        auto c = solve_in_span(basis, target);
        REQUIRE(c);
        Vector back(d);
        for (int i = 0; i < d - 1; ++i)
            for (int j = 0; j < d; ++j)
                back[j] += (*c)[i] * basis[i][j];
        CHECK(back == target);
        Vector outside;
        for (const auto& x : basis_m[d - 1])
            outside.push_back(Rational(x));
        CHECK_FALSE(solve_in_span(basis, outside));
    }
}

TEST_CASE("inverse and determinant") {
    std::mt19937 rng(3);
    for (int trial = 0; trial < 20; ++trial) {
        const int d = 1 + trial % 5;
        const Matrix m = to_matrix(oracle::random_invertible(d, rng));
        CHECK(m * inverse(m) == Matrix::identity(d));
        CHECK_FALSE(determinant(m).is_zero());
    }
    CHECK(determinant(Matrix{{1, 2}, {3, 4}}) == -2);
    CHECK(determinant(Matrix{{1, 2}, {2, 4}}) == 0);
    CHECK_THROWS_AS(inverse(Matrix{{1, 2}, {2, 4}}), Error);
}

TEST_CASE("subspace equality is canonical") {
    CHECK(Subspace::span({{1, 1}, {1, -1}}, 2) == Subspace::full(2));
    CHECK(Subspace::span({{2, 4, 0}}, 3) == Subspace::span({{-1, -2, 0}}, 3));
    CHECK(Subspace::coordinate(3, {2}) == Subspace::span({{0, 0, 5}}, 3));
}
