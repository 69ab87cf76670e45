#pragma once

#include <algorithm>
#include <cstdint>
#include <vector>

namespace gridfill {

using Value = std::int64_t;
using Col = std::int64_t;

// A finite set of values, stored sorted ascending without duplicates.
using ValueSet = std::vector<Value>;

// Marks "every column past the materialized horizon" in reports and errors.
inline constexpr Col kTailCol = -1;

inline bool contains(const ValueSet& s, Value v) {
    return std::binary_search(s.begin(), s.end(), v);
}

inline bool is_canonical_set(const ValueSet& s) {
    return std::is_sorted(s.begin(), s.end()) &&
           std::adjacent_find(s.begin(), s.end()) == s.end();
}

inline void canonicalize(ValueSet& s) {
    std::sort(s.begin(), s.end());
    s.erase(std::unique(s.begin(), s.end()), s.end());
}

}  // namespace gridfill
