#ifndef FILIPPOV_COMBINATORICS_HPP
#define FILIPPOV_COMBINATORICS_HPP

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace filippov {

/// Tuple of 1-based basis indices.
using IndexTuple = std::vector<int>;

/// Sorted copy of t together with the sign of the sorting permutation, or
/// nullopt if t has a repeated index.
std::optional<std::pair<IndexTuple, int>> canonicalize(IndexTuple t);

/// Sign of the permutation taking t to its sorted order; 0 on repeats.
int permutation_sign(const IndexTuple& t);

/// All strictly increasing k-tuples drawn from 1..n, in lexicographic order.
std::vector<IndexTuple> combinations(int n, int k);

long long binomial(int n, int k);

bool contains(const IndexTuple& sorted, int index);

std::string format_tuple(const IndexTuple& t);

} // namespace filippov

#endif
