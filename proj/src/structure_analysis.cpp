#include "filippov/structure_analysis.hpp"

#include "filippov/error.hpp"

#include <algorithm>
#include <set>

namespace filippov {

namespace {

std::string bracket_text(const IndexTuple& lower) {
    std::string s = "[";
    for (std::size_t i = 0; i < lower.size(); ++i) {
        if (i)
            s += ",";
        s += "e" + std::to_string(lower[i]);
    }
    return s + "]";
}

std::string entry_text(const Entry& e) {
    return bracket_text(e.lower) + " has component " + e.value.to_string() + " along e" + std::to_string(e.upper);
}

std::string vector_text(const Vector& v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i)
            s += ",";
        s += v[i].to_string();
    }
    return s + ")";
}

std::string set_text(const char* name, const IndexTuple& t) { return std::string(name) + "=" + format_tuple(t); }

} // namespace

bool StructureReport::all_hold() const {
    return std::all_of(claims.begin(), claims.end(), [](const Claim& c) { return c.verdict; });
}

const Claim* StructureReport::find(const std::string& name) const {
    for (const auto& c : claims)
        if (c.name == name)
            return &c;
    return nullptr;
}

StructureReport semidirect_report_fa(const NLieAlgebra& alg, const Splitting& s) {
    if (s.dim != alg.dim())
        throw Error(ErrorKind::DimensionMismatch, "splitting dimension differs from the algebra");
    StructureReport r;
    r.subject = std::to_string(alg.arity()) + "-Lie algebra of dim " + std::to_string(alg.dim()) + ", " +
                set_text("i0", s.i0) + " " + set_text("i1", s.i1);
    auto sub = subalgebra_witness(alg, s);
    r.claims.push_back({"i0 subalgebra", !sub, sub ? entry_text(*sub) : set_text("i0", s.i0)});
    auto ideal = ideal_witness(alg, s);
    r.claims.push_back({"i1 ideal", !ideal, ideal ? entry_text(*ideal) : set_text("i1", s.i1)});
    auto ab = abelian_witness(alg, s);
    r.claims.push_back({"i1 abelian", !ab, ab ? entry_text(*ab) : set_text("i1", s.i1)});
    r.verdict = r.all_hold() ? "semidirect" : "not semidirect";
    return r;
}

std::optional<std::string> lie_ideal_witness(const LieAlgebra& lie, const Subspace& s) {
    const int d = lie.dim();
    for (const auto& b : s.basis())
        for (int j = 1; j <= d; ++j) {
            const Vector img = lie_bracket(lie, b, unit_vector(d, j - 1));
            if (!s.contains(img))
                return "[" + vector_text(b) + ",e" + std::to_string(j) + "] = " + vector_text(img);
        }
    return std::nullopt;
}

std::vector<int> quotient_basis(const Subspace& ideal) {
    std::vector<int> out;
    const auto& piv = ideal.pivots();
    for (std::size_t i = 0; i < ideal.ambient_dim(); ++i)
        if (std::find(piv.begin(), piv.end(), i) == piv.end())
            out.push_back(static_cast<int>(i) + 1);
    return out;
}

LieAlgebra quotient_lie(const LieAlgebra& lie, const Subspace& ideal) {
    if (static_cast<int>(ideal.ambient_dim()) != lie.dim())
        throw Error(ErrorKind::DimensionMismatch, "ideal lives in a space of the wrong dimension");
    if (auto w = lie_ideal_witness(lie, ideal))
        throw Error(ErrorKind::NotAnIdeal, "subspace is not an ideal: " + *w);
    const auto comp = quotient_basis(ideal);
    const int q = static_cast<int>(comp.size());
    AntisymTensor c(2, q);
    for (int a = 0; a < q; ++a)
        for (int b = a + 1; b < q; ++b) {
            const Vector r = ideal.reduce(lie.tensor().bracket_basis({comp[a], comp[b]}));
            for (int k = 0; k < q; ++k)
                if (!r[comp[k] - 1].is_zero())
                    c.insert({a + 1, b + 1}, k + 1, r[comp[k] - 1]);
        }
    return LieAlgebra::from_tensor(std::move(c)).checked();
}

bool is_central_subspace(const LieAlgebra& lie, const Subspace& s) {
    if (static_cast<int>(s.ambient_dim()) != lie.dim())
        throw Error(ErrorKind::DimensionMismatch, "subspace lives in a space of the wrong dimension");
    return center(lie).contains(s);
}

MatchResult match_structure_constants(const LieAlgebra& a, const LieAlgebra& b, const Matrix& basis_map) {
    if (a.dim() != b.dim())
        return {false, "dimensions differ: " + std::to_string(a.dim()) + " vs " + std::to_string(b.dim())};
    if (static_cast<int>(basis_map.rows()) != a.dim() || static_cast<int>(basis_map.cols()) != a.dim())
        return {false, "basis map is not " + std::to_string(a.dim()) + "x" + std::to_string(a.dim())};
    if (determinant(basis_map).is_zero())
        return {false, "basis map is singular"};
    const LieAlgebra moved = change_basis_lie(a, basis_map);
    std::set<std::pair<IndexTuple, int>> keys;
    for (const auto& e : moved.tensor().entries())
        keys.insert({e.lower, e.upper});
    for (const auto& e : b.tensor().entries())
        keys.insert({e.lower, e.upper});
    for (const auto& [lower, upper] : keys) {
        const Rational x = moved.tensor().get(lower, upper);
        const Rational y = b.tensor().get(lower, upper);
        if (x != y)
            return {false, bracket_text(lower) + " along e" + std::to_string(upper) + ": " + x.to_string() +
                               " vs " + y.to_string()};
    }
    return {true, ""};
}

StructureReport certify_central_extension(const LieAlgebra& big, const Subspace& ideal, const LieAlgebra& target,
                                          const Matrix& basis_map) {
    if (static_cast<int>(ideal.ambient_dim()) != big.dim())
        throw Error(ErrorKind::DimensionMismatch, "ideal lives in a space of the wrong dimension");
    const std::size_t qdim = big.dim() - ideal.dim();
    if (basis_map.rows() != qdim || basis_map.cols() != qdim)
        throw Error(ErrorKind::DimensionMismatch, "basis map must be " + std::to_string(qdim) + "x" +
                                                      std::to_string(qdim));
    StructureReport r;
    r.subject = "extension of dim " + std::to_string(big.dim()) + " by an ideal of dim " +
                std::to_string(ideal.dim());

    const bool central = is_central_subspace(big, ideal);
    std::string central_witness;
    if (central) {
        central_witness = "ideal basis";
        for (const auto& v : ideal.basis())
            central_witness += " " + vector_text(v);
    } else {
        const Subspace z = center(big);
        for (const auto& v : ideal.basis())
            if (!z.contains(v)) {
                central_witness = vector_text(v) + " is not central";
                break;
            }
    }
    r.claims.push_back({"ideal central", central, central_witness});

    const bool dims = static_cast<int>(qdim) == target.dim();
    r.claims.push_back({"quotient dim equals target dim", dims,
                        std::to_string(qdim) + " vs " + std::to_string(target.dim())});

    const Rational det = determinant(basis_map);
    r.claims.push_back({"basis map invertible", !det.is_zero(), "det = " + det.to_string()});

    MatchResult match{false, "quotient not formed"};
    if (!lie_ideal_witness(big, ideal))
        match = match_structure_constants(quotient_lie(big, ideal), target, basis_map);
    else
        match.mismatch = "subspace is not an ideal: " + *lie_ideal_witness(big, ideal);
    r.claims.push_back(
        {"structure constants match", match.matches, match.matches ? "all constants equal" : match.mismatch});

    r.verdict = r.all_hold() ? "certified" : "not certified";
    return r;
}

StructureReport compare_report(const LieAlgebra& a, const LieAlgebra& b) {
    const Fingerprint fa = fingerprint(a);
    const Fingerprint fb = fingerprint(b);
    StructureReport r;
    r.subject = "fingerprints " + fa.to_string() + " vs " + fb.to_string();
    auto num = [](std::size_t x) { return std::to_string(x); };
    r.claims.push_back({"dim equal", fa.dim == fb.dim, num(fa.dim) + " vs " + num(fb.dim)});
    r.claims.push_back({"derived series equal", fa.derived == fb.derived,
                        format_series(fa.derived) + " vs " + format_series(fb.derived)});
    r.claims.push_back({"lower central series equal", fa.lower_central == fb.lower_central,
                        format_series(fa.lower_central) + " vs " + format_series(fb.lower_central)});
    r.claims.push_back(
        {"center dim equal", fa.center_dim == fb.center_dim, num(fa.center_dim) + " vs " + num(fb.center_dim)});
    r.claims.push_back({"killing rank equal", fa.killing_rank == fb.killing_rank,
                        num(fa.killing_rank) + " vs " + num(fb.killing_rank)});
    r.verdict = fa == fb ? kFingerprintEqual : kFingerprintDistinct;
    return r;
}

std::string render_report(const StructureReport& r) {
    std::size_t width = 0;
    for (const auto& c : r.claims)
        width = std::max(width, c.name.size());
    std::string out = "subject: " + r.subject + "\n";
    for (const auto& c : r.claims) {
        out += "  " + c.name + std::string(width - c.name.size(), ' ') + "  " + (c.verdict ? "true " : "false") +
               "  " + c.witness + "\n";
    }
    out += "verdict: " + r.verdict + "\n";
    return out;
}

} // namespace filippov
