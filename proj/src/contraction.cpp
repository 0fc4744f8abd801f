#include "filippov/contraction.hpp"

#include "filippov/error.hpp"

#include <algorithm>

namespace filippov {

namespace {

int count_in(const IndexTuple& tuple, const IndexTuple& set) {
    return static_cast<int>(std::count_if(tuple.begin(), tuple.end(), [&](int i) { return contains(set, i); }));
}

void check_splitting(const NLieAlgebra& alg, const Splitting& s) {
    if (s.dim != alg.dim())
        throw Error(ErrorKind::DimensionMismatch, "splitting dimension differs from the algebra");
}

} // namespace

NLieAlgebra contract_fa(const NLieAlgebra& alg, const Splitting& s) {
    check_splitting(alg, s);
    if (!alg.verified())
        throw Error(ErrorKind::UnverifiedAlgebra, "contraction needs a verified algebra");
    if (auto w = subalgebra_witness(alg, s))
        throw Error(ErrorKind::NotASubalgebra, "i0 does not span a subalgebra: bracket " + format_tuple(w->lower) +
                                                   " has component " + std::to_string(w->upper));
    const int n = alg.arity();
    AntisymTensor f(n, alg.dim());
    for (const auto& e : alg.tensor().entries()) {
        const int in0 = count_in(e.lower, s.i0);
        const bool target0 = contains(s.i0, e.upper);
        if ((in0 == n && target0) || (in0 == n - 1 && !target0))
            f.insert(e.lower, e.upper, e.value);
    }
    auto out = NLieAlgebra::from_tensor(std::move(f), Status::Verified);
    if (debug_recheck_enabled() && !verify_fi(out).holds())
        throw Error(ErrorKind::RecheckFailed, "contraction broke the Filippov identity");
    return out;
}

Grading grading_from_splitting(const NLieAlgebra& alg, const Splitting& s, const InducedLie& il) {
    check_splitting(alg, s);
    if (il.source_dim != alg.dim() || il.source_arity != alg.arity())
        throw Error(ErrorKind::DimensionMismatch, "induced algebra does not come from this algebra");
    Grading g;
    for (const auto& w : il.basis_words)
        g.weights.push_back(count_in(w, s.i1));
    return g;
}

Grading two_level_grading(int dim, const IndexTuple& low) {
    Grading g;
    for (int i = 1; i <= dim; ++i)
        g.weights.push_back(std::find(low.begin(), low.end(), i) != low.end() ? 0 : 1);
    return g;
}

GradingCheck check_ww_grading(const LieAlgebra& lie, const Grading& g) {
    if (static_cast<int>(g.weights.size()) != lie.dim())
        throw Error(ErrorKind::DimensionMismatch, "grading has " + std::to_string(g.weights.size()) +
                                                      " weights for an algebra of dim " + std::to_string(lie.dim()));
    GradingCheck out;
    for (const auto& e : lie.tensor().entries()) {
        const int i = e.lower[0], j = e.lower[1];
        if (g.weights[e.upper - 1] > g.weights[i - 1] + g.weights[j - 1])
            out.violations.push_back({i, j, e.upper, e.value});
    }
    return out;
}

LieAlgebra ww_contract_lie(const LieAlgebra& lie, const Grading& g) {
    auto check = check_ww_grading(lie, g);
    if (!check.holds()) {
        const auto& v = check.violations.front();
        throw Error(ErrorKind::GradingViolation, "[e" + std::to_string(v.i) + ",e" + std::to_string(v.j) +
                                                     "] has a component along e" + std::to_string(v.k) +
                                                     " of higher weight");
    }
    AntisymTensor c(2, lie.dim());
    for (const auto& e : lie.tensor().entries())
        if (g.weights[e.upper - 1] == g.weights[e.lower[0] - 1] + g.weights[e.lower[1] - 1])
            c.insert(e.lower, e.upper, e.value);
    auto out = LieAlgebra::from_tensor(std::move(c));
    auto ji = verify_ji(out);
    if (!ji.holds())
        throw Error(ErrorKind::RecheckFailed, "graded contraction violates the Jacobi identity: " +
                                                  format_violation(ji.violations.front()));
    return LieAlgebra::from_tensor(out.tensor(), Status::Verified);
}

LieAlgebra iw_contract_lie(const LieAlgebra& lie, const IndexTuple& subalgebra) {
    const Splitting s = Splitting::from_i0(lie.dim(), subalgebra);
    if (auto w = subalgebra_witness(lie.as_nlie(), s))
        throw Error(ErrorKind::NotASubalgebra, "[e" + std::to_string(w->lower[0]) + ",e" +
                                                   std::to_string(w->lower[1]) + "] leaves the subalgebra");
    return ww_contract_lie(lie, two_level_grading(lie.dim(), s.i0));
}

} // namespace filippov
