#include "filippov/antisym_tensor.hpp"

#include "filippov/error.hpp"

namespace filippov {

AntisymTensor::AntisymTensor(int arity, int dim) : arity_(arity), dim_(dim) {
    if (arity < 2)
        throw Error(ErrorKind::ArityMismatch, "arity must be at least 2");
    if (dim < 0)
        throw Error(ErrorKind::DimensionMismatch, "negative dimension");
}

std::size_t AntisymTensor::entry_count() const {
    std::size_t n = 0;
    for (const auto& [lower, row] : rows_)
        n += row.size();
    return n;
}

void AntisymTensor::check_indices(const IndexTuple& lower, int upper) const {
    if (static_cast<int>(lower.size()) != arity_)
        throw Error(ErrorKind::ArityMismatch,
                    "expected " + std::to_string(arity_) + " lower indices, got " + format_tuple(lower));
    for (int i : lower)
        if (i < 1 || i > dim_)
            throw Error(ErrorKind::IndexOutOfRange, "lower index " + std::to_string(i) + " in " + format_tuple(lower));
    if (upper < 1 || upper > dim_)
        throw Error(ErrorKind::IndexOutOfRange, "upper index " + std::to_string(upper));
}

Rational AntisymTensor::get(const IndexTuple& lower, int upper) const {
    auto c = canonicalize(lower);
    if (!c)
        return 0;
    auto it = rows_.find(c->first);
    if (it == rows_.end())
        return 0;
    auto jt = it->second.find(upper);
    if (jt == it->second.end())
        return 0;
    return c->second > 0 ? jt->second : -jt->second;
}

Vector AntisymTensor::bracket_basis(const IndexTuple& lower) const {
    Vector v(dim_);
    auto c = canonicalize(lower);
    if (!c)
        return v;
    auto it = rows_.find(c->first);
    if (it == rows_.end())
        return v;
    for (const auto& [k, val] : it->second)
        v[k - 1] = c->second > 0 ? val : -val;
    return v;
}

std::vector<Entry> AntisymTensor::entries() const {
    std::vector<Entry> out;
    for (const auto& [lower, row] : rows_)
        for (const auto& [k, val] : row)
            out.push_back({lower, k, val});
    return out;
}

void AntisymTensor::insert(const IndexTuple& lower, int upper, const Rational& value) {
    check_indices(lower, upper);
    auto c = canonicalize(lower);
    if (!c)
        throw Error(ErrorKind::RepeatedIndex, "lower tuple " + format_tuple(lower) + " repeats an index");
    Rational v = c->second > 0 ? value : -value;
    auto& row = rows_[c->first];
    auto it = row.find(upper);
    if (it != row.end()) {
        if (it->second != v)
            throw Error(ErrorKind::DuplicateEntry,
                        "conflicting values for " + format_tuple(c->first) + "^" + std::to_string(upper));
        return;
    }
    if (v.is_zero()) {
        if (row.empty())
            rows_.erase(c->first);
        return;
    }
    row.emplace(upper, v);
}

AntisymTensor AntisymTensor::from_entries(int arity, int dim, const std::vector<Entry>& entries) {
    AntisymTensor t(arity, dim);
    std::map<std::pair<IndexTuple, int>, Rational> seen;
    for (const auto& e : entries) {
        t.check_indices(e.lower, e.upper);
        auto c = canonicalize(e.lower);
        if (!c)
            throw Error(ErrorKind::RepeatedIndex, "lower tuple " + format_tuple(e.lower) + " repeats an index");
        Rational v = c->second > 0 ? e.value : -e.value;
        auto [it, fresh] = seen.emplace(std::make_pair(c->first, e.upper), v);
        if (!fresh && it->second != v)
            throw Error(ErrorKind::DuplicateEntry,
                        "conflicting values for " + format_tuple(c->first) + "^" + std::to_string(e.upper));
        if (fresh && !v.is_zero())
            t.rows_[c->first].emplace(e.upper, v);
    }
    return t;
}

void AntisymTensor::accumulate(const IndexTuple& lower, int upper, const Rational& value) {
    check_indices(lower, upper);
    if (value.is_zero())
        return;
    auto c = canonicalize(lower);
    if (!c)
        return;
    auto& row = rows_[c->first];
    Rational& slot = row[upper];
    slot += c->second > 0 ? value : -value;
    if (slot.is_zero()) {
        row.erase(upper);
        if (row.empty())
            rows_.erase(c->first);
    }
}

} // namespace filippov
