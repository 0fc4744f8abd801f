// Algebras shared by several test files.
#ifndef FILIPPOV_TESTS_CORPUS_HPP
#define FILIPPOV_TESTS_CORPUS_HPP

#include "filippov/contraction.hpp"
#include "filippov/error.hpp"
#include "filippov/structure_analysis.hpp"

#include <functional>
#include <optional>
#include <string>
#include <vector>

namespace corpus {

using namespace filippov;

/// Kind of the Error thrown by f, or nullopt if it returns normally.
inline std::optional<ErrorKind> error_kind(const std::function<void()>& f) {
    try {
        f();
    } catch (const Error& e) {
        return e.kind();
    }
    return std::nullopt;
}

inline NLieAlgebra a4() { return simple_a(3); }

inline LieAlgebra so3() { return LieAlgebra::from_tensor(simple_a(2).tensor(), Status::Verified); }

inline NLieAlgebra a4_contracted() { return contract_fa(a4(), Splitting::from_i0(4, {1, 2})); }

/// simple_a(n) contracted along the first n-1 basis vectors.
inline NLieAlgebra simple_contracted(int n) {
    IndexTuple i0;
    for (int i = 1; i < n; ++i)
        i0.push_back(i);
    return contract_fa(simple_a(n), Splitting::from_i0(n + 1, i0));
}

inline NLieAlgebra e2() { return contract_fa(simple_a(2), Splitting::from_i0(3, {3})); }

/// A4 with the sign of f_124^3 flipped. This is the simple algebra for a
/// metric of signature (3,1), so it still satisfies the identity.
inline NLieAlgebra a4_sign_flipped() {
    return NLieAlgebra::new_unchecked(3, 4, {{{1, 2, 3}, 4, 1}, {{1, 2, 4}, 3, 1}, {{1, 3, 4}, 2, 1}, {{2, 3, 4}, 1, -1}});
}

/// A4 with an extra constant f_123^1 = 1; breaks the identity.
inline NLieAlgebra a4_corrupted() {
    return NLieAlgebra::new_unchecked(
        3, 4, {{{1, 2, 3}, 4, 1}, {{1, 2, 4}, 3, -1}, {{1, 3, 4}, 2, 1}, {{2, 3, 4}, 1, -1}, {{1, 2, 3}, 1, 1}});
}

/// Only [e1,e2,e3] = e3 nonzero. Not simple; its dot product is not
/// antisymmetric.
inline NLieAlgebra scaling_3lie() { return NLieAlgebra::new_unchecked(3, 4, {{{1, 2, 3}, 3, 1}}).checked(); }

struct Named {
    std::string name;
    NLieAlgebra alg;
};

/// Algebras satisfying the identity, checked once here.
inline std::vector<Named> fi_corpus() {
    std::vector<Named> out;
    for (int n = 2; n <= 5; ++n)
        out.push_back({"simple_a(" + std::to_string(n) + ")", simple_a(n)});
    out.push_back({"abelian 3-ary dim 4", abelian(3, 4)});
    out.push_back({"abelian 2-ary dim 3", abelian(2, 3)});
    out.push_back({"A4 contracted on {1,2}", a4_contracted()});
    out.push_back({"A4 contracted on {4}", contract_fa(a4(), Splitting::from_i0(4, {4}))});
    out.push_back({"E2", e2()});
    out.push_back({"[e1,e2,e3] = e3", scaling_3lie()});
    for (int n = 3; n <= 5; ++n)
        out.push_back({"simple_a(" + std::to_string(n) + ") contracted", simple_contracted(n)});
    return out;
}

/// Basis of Lie A4 rearranged to (Y1,Y2,Y3,Z1,Z2,Z3) with Y_i = ad(X4,X_i),
/// Z1 = ad(X2,X3), Z2 = ad(X3,X1), Z3 = ad(X1,X2). The lexicographic induced
/// basis is ad of (1,2),(1,3),(1,4),(2,3),(2,4),(3,4).
inline Matrix yz_map() {
    Matrix p(6, 6);
    p(2, 0) = -1;  // Y1 = -ad(1,4)
    p(4, 1) = -1;  // Y2 = -ad(2,4)
    p(5, 2) = -1;  // Y3 = -ad(3,4)
    p(3, 3) = 1;   // Z1 = ad(2,3)
    p(1, 4) = -1;  // Z2 = -ad(1,3)
    p(0, 5) = 1;   // Z3 = ad(1,2)
    return p;
}

/// yz_map followed by Ytilde = (Y+Z)/2, Ztilde = (Y-Z)/2.
inline Matrix tilde_map(const Rational& orientation = 1) {
    Matrix t(6, 6);
    const Rational h = orientation * Rational(1, 2);
    for (int i = 0; i < 3; ++i) {
        t(i, i) = h;
        t(i + 3, i) = h;
        t(i, i + 3) = h;
        t(i + 3, i + 3) = -h;
    }
    return yz_map() * t;
}

inline LieAlgebra lie_a(int n) { return induce(simple_a(n)).lie; }

} // namespace corpus

#endif
