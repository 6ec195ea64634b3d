#pragma once

#include <initializer_list>
#include <string>
#include <vector>

namespace kerrho {

// Strictly increasing finite set of non-negative integers.
class IndexSet {
public:
    IndexSet() = default;
    IndexSet(std::initializer_list<long> values);
    explicit IndexSet(std::vector<long> values);

    // [lo, hi], empty when lo > hi.
    static IndexSet interval(long lo, long hi);

    IndexSet unite(const IndexSet& other) const;
    IndexSet intersect(const IndexSet& other) const;
    IndexSet without(long value) const;

    bool contains(long value) const;
    bool subset_of(const IndexSet& other) const;
    bool empty() const { return values_.empty(); }
    std::size_t size() const { return values_.size(); }
    long operator[](std::size_t i) const { return values_[i]; }
    long front() const { return values_.front(); }
    long back() const { return values_.back(); }
    const std::vector<long>& values() const { return values_; }
    auto begin() const { return values_.begin(); }
    auto end() const { return values_.end(); }

    bool operator==(const IndexSet& other) const = default;

    std::string to_string() const;

private:
    std::vector<long> values_;
};

}  // namespace kerrho
