#pragma once

// Brute-force reference computations used to check the library. They share
// no code with it beyond the character tables handed in by the caller.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "weylstrata/character_table.hpp"
#include "weylstrata/root_system.hpp"

namespace oracle {

using Vec = std::vector<int>;
using Perm = std::vector<uint16_t>;

// Whole Weyl group of a small type, enumerated element by element. Types are
// sums of A_n, D_n, E_n, G2 written like "A2+A1"; simple roots are numbered
// as in Bourbaki, components in the order written.
class BruteGroup {
public:
    // With enumerate unset only the roots are generated (closure of the
    // simple roots under the simple reflections).
    explicit BruteGroup(const std::string& type, bool enumerate = true);

    int rank() const { return rank_; }
    const std::vector<Vec>& roots() const { return roots_; }
    size_t order() const { return elements_.size(); }
    const std::vector<Perm>& elements() const { return elements_; }
    int num_classes() const { return num_classes_; }
    int class_of(const Perm& p) const { return class_of_[element_index_.at(p)]; }
    size_t class_size(int c) const;

    Perm of_word(const std::vector<int>& word) const; // 0-based letters
    // Translates a permutation of the library's root indexing.
    Perm from_library(const weylstrata::RootSystem& rs, const std::vector<uint16_t>& p) const;
    // Conjugates a by w: w a w^-1.
    Perm conjugate(const Perm& w, const Perm& a) const;

    // Orbit id for each subset of simple roots (bitmask), from the action
    // of every element on the simple roots.
    std::vector<int> levi_orbits() const;

private:
    int rank_ = 0;
    std::vector<std::vector<int>> gram_;
    std::vector<Vec> roots_;
    std::map<Vec, int> root_index_;
    std::vector<Perm> reflections_;
    std::vector<Perm> elements_;
    std::map<Perm, size_t> element_index_;
    std::vector<int> class_of_;
    int num_classes_ = 0;
};

// Type A_n through S_{n+1} acting on points: every subset of simple roots
// gives a Young subgroup, irreps of the factors come from the supplied
// symmetric-group tables, and induced multiplicities are computed by summing
// over the subgroup's elements directly.
struct TypeAJ {
    // key: subset bitmask and the factor labels of blocks of size >= 2,
    // left to right; value: label of the truncated induction.
    std::map<std::pair<unsigned, std::vector<std::string>>, std::string> j;
    std::set<std::string> rigid;
    std::vector<std::string> errors; // violated truncation conditions
};

TypeAJ type_a_j_enumeration(int n);

// Fake degrees of the irreps of S_m from the q-analogue of the hook formula:
// q^{n(lambda)} prod_i (1 - q^i) / prod_hooks (1 - q^h).
struct FakeDegreeEntry {
    std::vector<int> partition;
    int64_t dim = 0;
    int b = 0;
    std::vector<int64_t> poly;
};
std::vector<FakeDegreeEntry> type_a_fake_degrees(int m);

} // namespace oracle
