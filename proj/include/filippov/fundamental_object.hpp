#ifndef FILIPPOV_FUNDAMENTAL_OBJECT_HPP
#define FILIPPOV_FUNDAMENTAL_OBJECT_HPP

#include "filippov/linalg.hpp"
#include "filippov/nlie_algebra.hpp"

#include <map>
#include <string>

namespace filippov {

/// Formal rational combination of wedge words e_{i1} ^ ... ^ e_{i(n-1)}.
/// Words are stored sorted; repeated-index words vanish on insertion.
class FundamentalObject {
public:
    FundamentalObject() = default;
    FundamentalObject(int word_length, int dim) : word_length_(word_length), dim_(dim) {}

    static FundamentalObject word(int dim, const IndexTuple& w, const Rational& coeff = 1);

    int word_length() const { return word_length_; }
    int dim() const { return dim_; }
    const std::map<IndexTuple, Rational>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    /// Coefficient of a word given in any order.
    Rational coefficient(const IndexTuple& w) const;

    void add(const IndexTuple& w, const Rational& coeff);
    FundamentalObject& operator+=(const FundamentalObject& o);
    FundamentalObject& operator-=(const FundamentalObject& o);
    friend FundamentalObject operator+(FundamentalObject a, const FundamentalObject& b) { return a += b; }
    friend FundamentalObject operator-(FundamentalObject a, const FundamentalObject& b) { return a -= b; }

    /// Coordinates over the lexicographic wedge-word basis.
    Vector coordinates() const;
    static FundamentalObject from_coordinates(int word_length, int dim, const Vector& coords);

    /// "1·(1∧4) -1/2·(2∧3)", or "0".
    std::string to_string() const;

    friend bool operator==(const FundamentalObject&, const FundamentalObject&) = default;

private:
    void check_compatible(const FundamentalObject& o) const;

    int word_length_ = 0;
    int dim_ = 0;
    std::map<IndexTuple, Rational> terms_;
};

/// Lexicographic basis of wedge words of length n-1.
std::vector<IndexTuple> wedge_words(const NLieAlgebra& alg);

/// Column k is [X_1, ..., X_{n-1}, e_k], summed over the terms of x.
Matrix ad_matrix(const NLieAlgebra& alg, const FundamentalObject& x);
Matrix ad_matrix(const NLieAlgebra& alg, const IndexTuple& word);

/// x acting on y slot by slot.
FundamentalObject dot(const NLieAlgebra& alg, const FundamentalObject& x, const FundamentalObject& y);

/// [ad x, ad y] == ad(x . y). Throws UnverifiedAlgebra.
bool check_derivation_identity(const NLieAlgebra& alg, const FundamentalObject& x, const FundamentalObject& y);

/// Kernel of ad on the wedge space, in wedge-word coordinates.
Subspace ker_ad(const NLieAlgebra& alg);

} // namespace filippov

#endif
