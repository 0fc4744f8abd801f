#include "filippov/combinatorics.hpp"

#include <algorithm>

namespace filippov {

std::optional<std::pair<IndexTuple, int>> canonicalize(IndexTuple t) {
    int sign = 1;
    // insertion sort, counting transpositions
    for (std::size_t i = 1; i < t.size(); ++i)
        for (std::size_t j = i; j > 0 && t[j - 1] >= t[j]; --j) {
            if (t[j - 1] == t[j])
                return std::nullopt;
            std::swap(t[j - 1], t[j]);
            sign = -sign;
        }
    return std::make_pair(std::move(t), sign);
}

int permutation_sign(const IndexTuple& t) {
    auto c = canonicalize(t);
    return c ? c->second : 0;
}

std::vector<IndexTuple> combinations(int n, int k) {
    std::vector<IndexTuple> out;
    if (k < 0 || k > n)
        return out;
    IndexTuple cur(k);
    for (int i = 0; i < k; ++i)
        cur[i] = i + 1;
    while (true) {
        out.push_back(cur);
        int i = k - 1;
        while (i >= 0 && cur[i] == n - k + i + 1)
            --i;
        if (i < 0)
            break;
        ++cur[i];
        for (int j = i + 1; j < k; ++j)
            cur[j] = cur[j - 1] + 1;
    }
    return out;
}

long long binomial(int n, int k) {
    if (k < 0 || k > n)
        return 0;
    long long r = 1;
    for (int i = 1; i <= k; ++i)
        r = r * (n - k + i) / i;
    return r;
}

bool contains(const IndexTuple& sorted, int index) {
    return std::binary_search(sorted.begin(), sorted.end(), index);
}

std::string format_tuple(const IndexTuple& t) {
    std::string s = "(";
    for (std::size_t i = 0; i < t.size(); ++i) {
        if (i)
            s += ",";
        s += std::to_string(t[i]);
    }
    return s + ")";
}

} // namespace filippov
