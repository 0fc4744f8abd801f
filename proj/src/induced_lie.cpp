#include "filippov/induced_lie.hpp"

#include "filippov/error.hpp"

namespace filippov {

Vector flat_ad(const NLieAlgebra& alg, const IndexTuple& word) { return ad_matrix(alg, word).entries(); }

InducedLie induce(const NLieAlgebra& alg) {
    if (!alg.verified())
        throw Error(ErrorKind::UnverifiedAlgebra, "induce needs a verified algebra");
    const std::size_t d = static_cast<std::size_t>(alg.dim());
    const auto words = wedge_words(alg);

    InducedLie out;
    out.source_arity = alg.arity();
    out.source_dim = alg.dim();

    std::vector<Vector> flats;
    for (const auto& w : words)
        flats.push_back(flat_ad(alg, w));

    Subspace span(d * d);
    std::vector<Vector> basis;
    std::vector<Matrix> basis_mats;
    for (std::size_t i = 0; i < words.size(); ++i) {
        auto [next, grew] = echelon_extend(span, flats[i]);
        if (!grew)
            continue;
        span = std::move(next);
        out.basis_words.push_back(words[i]);
        basis.push_back(flats[i]);
        basis_mats.push_back(ad_matrix(alg, words[i]));
    }

    for (const auto& f : flats) {
        auto coeffs = solve_in_span(basis, f);
        if (!coeffs)
            throw Error(ErrorKind::InternalSpanError, "ad of a wedge word left the span of the chosen basis");
        out.ad_map.push_back(std::move(*coeffs));
    }

    const int m = static_cast<int>(basis.size());
    AntisymTensor c(2, m);
    for (int i = 0; i < m; ++i)
        for (int j = i + 1; j < m; ++j) {
            const Vector comm = commutator(basis_mats[i], basis_mats[j]).entries();
            auto coeffs = solve_in_span(basis, comm);
            if (!coeffs)
                throw Error(ErrorKind::InternalSpanError,
                            "commutator of ad" + format_tuple(out.basis_words[i]) + " and ad" +
                                format_tuple(out.basis_words[j]) + " is not an inner derivation");
            for (int k = 0; k < m; ++k)
                if (!(*coeffs)[k].is_zero())
                    c.insert({i + 1, j + 1}, k + 1, (*coeffs)[k]);
        }
    LieAlgebra lie = LieAlgebra::from_tensor(std::move(c));
    out.lie = verify_ji(lie).holds() ? LieAlgebra::from_tensor(lie.tensor(), Status::Verified) : lie;
    out.kernel = ker_ad(alg);
    return out;
}

} // namespace filippov
