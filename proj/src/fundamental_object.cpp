#include "filippov/fundamental_object.hpp"

#include "filippov/error.hpp"

namespace filippov {

FundamentalObject FundamentalObject::word(int dim, const IndexTuple& w, const Rational& coeff) {
    FundamentalObject x(static_cast<int>(w.size()), dim);
    x.add(w, coeff);
    return x;
}

Rational FundamentalObject::coefficient(const IndexTuple& w) const {
    auto c = canonicalize(w);
    if (!c)
        return 0;
    auto it = terms_.find(c->first);
    if (it == terms_.end())
        return 0;
    return c->second > 0 ? it->second : -it->second;
}

void FundamentalObject::add(const IndexTuple& w, const Rational& coeff) {
    if (static_cast<int>(w.size()) != word_length_)
        throw Error(ErrorKind::ArityMismatch, "word " + format_tuple(w) + " has the wrong length");
    for (int i : w)
        if (i < 1 || i > dim_)
            throw Error(ErrorKind::IndexOutOfRange, "word index " + std::to_string(i));
    if (coeff.is_zero())
        return;
    auto c = canonicalize(w);
    if (!c)
        return;
    Rational& slot = terms_[c->first];
    slot += c->second > 0 ? coeff : -coeff;
    if (slot.is_zero())
        terms_.erase(c->first);
}

void FundamentalObject::check_compatible(const FundamentalObject& o) const {
    if (o.word_length_ != word_length_ || o.dim_ != dim_)
        throw Error(ErrorKind::ArityMismatch, "fundamental objects of different shapes");
}

FundamentalObject& FundamentalObject::operator+=(const FundamentalObject& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_)
        add(w, c);
    return *this;
}

FundamentalObject& FundamentalObject::operator-=(const FundamentalObject& o) {
    check_compatible(o);
    for (const auto& [w, c] : o.terms_)
        add(w, -c);
    return *this;
}

Vector FundamentalObject::coordinates() const {
    const auto words = combinations(dim_, word_length_);
    Vector v(words.size());
    for (std::size_t i = 0; i < words.size(); ++i) {
        auto it = terms_.find(words[i]);
        if (it != terms_.end())
            v[i] = it->second;
    }
    return v;
}

FundamentalObject FundamentalObject::from_coordinates(int word_length, int dim, const Vector& coords) {
    const auto words = combinations(dim, word_length);
    if (coords.size() != words.size())
        throw Error(ErrorKind::DimensionMismatch, "coordinate vector has the wrong length");
    FundamentalObject x(word_length, dim);
    for (std::size_t i = 0; i < words.size(); ++i)
        x.add(words[i], coords[i]);
    return x;
}

std::string FundamentalObject::to_string() const {
    if (terms_.empty())
        return "0";
    std::string s;
    for (const auto& [w, c] : terms_) {
        if (!s.empty())
            s += ' ';
        s += c.sign() > 0 ? "+" : "";
        s += c.to_string() + "·(";
        for (std::size_t i = 0; i < w.size(); ++i) {
            if (i)
                s += "∧";
            s += std::to_string(w[i]);
        }
        s += ")";
    }
    return s;
}

std::vector<IndexTuple> wedge_words(const NLieAlgebra& alg) { return combinations(alg.dim(), alg.arity() - 1); }

Matrix ad_matrix(const NLieAlgebra& alg, const IndexTuple& word) {
    return ad_matrix(alg, FundamentalObject::word(alg.dim(), word));
}

Matrix ad_matrix(const NLieAlgebra& alg, const FundamentalObject& x) {
    if (x.word_length() != alg.arity() - 1 || x.dim() != alg.dim())
        throw Error(ErrorKind::ArityMismatch, "fundamental object does not match the algebra");
    const int d = alg.dim();
    Matrix a(d, d);
    for (const auto& [w, c] : x.terms()) {
        IndexTuple full = w;
        full.push_back(0);
        for (int k = 1; k <= d; ++k) {
            full.back() = k;
            const Vector col = alg.tensor().bracket_basis(full);
            for (int l = 0; l < d; ++l)
                if (!col[l].is_zero())
                    a(l, k - 1) += c * col[l];
        }
    }
    return a;
}

FundamentalObject dot(const NLieAlgebra& alg, const FundamentalObject& x, const FundamentalObject& y) {
    if (y.word_length() != alg.arity() - 1 || y.dim() != alg.dim())
        throw Error(ErrorKind::ArityMismatch, "fundamental object does not match the algebra");
    const Matrix a = ad_matrix(alg, x);
    const int d = alg.dim();
    FundamentalObject out(y.word_length(), d);
    for (const auto& [w, c] : y.terms()) {
        for (std::size_t i = 0; i < w.size(); ++i) {
            IndexTuple replaced = w;
            for (int l = 1; l <= d; ++l) {
                const Rational& coeff = a(l - 1, w[i] - 1);
                if (coeff.is_zero())
                    continue;
                replaced[i] = l;
                out.add(replaced, c * coeff);
            }
        }
    }
    return out;
}

bool check_derivation_identity(const NLieAlgebra& alg, const FundamentalObject& x, const FundamentalObject& y) {
    if (!alg.verified())
        throw Error(ErrorKind::UnverifiedAlgebra, "derivation identity needs a verified algebra");
    return commutator(ad_matrix(alg, x), ad_matrix(alg, y)) == ad_matrix(alg, dot(alg, x, y));
}

Subspace ker_ad(const NLieAlgebra& alg) {
    const auto words = wedge_words(alg);
    const std::size_t d = static_cast<std::size_t>(alg.dim());
    Matrix stacked(d * d, words.size());
    for (std::size_t w = 0; w < words.size(); ++w) {
        const Matrix a = ad_matrix(alg, words[w]);
        for (std::size_t i = 0; i < d * d; ++i)
            stacked(i, w) = a.entries()[i];
    }
    return kernel(stacked);
}

} // namespace filippov
