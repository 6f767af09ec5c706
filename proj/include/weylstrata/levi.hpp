#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "weylstrata/perm_group.hpp"

namespace weylstrata {

// W-orbit of subsets of simple roots, represented by its lexicographically
// least member.
struct LeviClass {
    std::vector<int> subset; // 0-based simple-root indices, sorted
    CartanType type;
    int tag = 1;       // ordinal among classes of the same type
    int same_type = 1; // number of classes sharing the type
    int orbit_size = 1; // number of subsets of simple roots in the orbit

    // "A5", "A5#2" when the type alone is ambiguous, "T" for the torus
    std::string name() const;
    bool is_full(int rank) const { return static_cast<int>(subset.size()) == rank; }
};

// Sorted by subset size, then lexicographically.
std::vector<LeviClass> levi_representatives(const GroupContext& ctx);

// Looks a class up by name: "A1", "A5#2", the full type, or "T"/"0"/"torus".
const LeviClass& find_levi(const std::vector<LeviClass>& levis, std::string_view name);

} // namespace weylstrata
