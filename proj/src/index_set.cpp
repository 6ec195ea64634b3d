#include "kerrho/index_set.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace kerrho {

IndexSet::IndexSet(std::initializer_list<long> values) : IndexSet(std::vector<long>(values)) {}

IndexSet::IndexSet(std::vector<long> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
    values_.erase(std::unique(values_.begin(), values_.end()), values_.end());
    if (!values_.empty() && values_.front() < 0) {
        throw std::invalid_argument("IndexSet: negative index " + std::to_string(values_.front()));
    }
}

IndexSet IndexSet::interval(long lo, long hi) {
    std::vector<long> v;
    for (long i = lo; i <= hi; ++i) v.push_back(i);
    return IndexSet(std::move(v));
}

IndexSet IndexSet::unite(const IndexSet& other) const {
    std::vector<long> v;
    std::set_union(values_.begin(), values_.end(), other.values_.begin(), other.values_.end(),
                   std::back_inserter(v));
    return IndexSet(std::move(v));
}

IndexSet IndexSet::intersect(const IndexSet& other) const {
    std::vector<long> v;
    std::set_intersection(values_.begin(), values_.end(), other.values_.begin(), other.values_.end(),
                          std::back_inserter(v));
    return IndexSet(std::move(v));
}

IndexSet IndexSet::without(long value) const {
    std::vector<long> v;
    for (long e : values_)
        if (e != value) v.push_back(e);
    return IndexSet(std::move(v));
}

bool IndexSet::contains(long value) const {
    return std::binary_search(values_.begin(), values_.end(), value);
}

bool IndexSet::subset_of(const IndexSet& other) const {
    return std::includes(other.values_.begin(), other.values_.end(), values_.begin(), values_.end());
}

std::string IndexSet::to_string() const {
    std::ostringstream out;
    out << '{';
    for (std::size_t i = 0; i < values_.size(); ++i) out << (i ? "," : "") << values_[i];
    out << '}';
    return out.str();
}

}  // namespace kerrho
