#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "weylstrata/cartan_type.hpp"

namespace weylstrata {

using Root = std::vector<int>; // coordinates in the simple-root basis

// Root system of a Cartan type. Roots are indexed 0..2N-1: positive roots
// first, ordered by height and then lexicographically descending (so the
// simple roots are 0..rank-1 in order), then root N+k = -(root k).
class RootSystem {
public:
    explicit RootSystem(CartanType type);

    const CartanType& type() const { return type_; }
    int rank() const { return rank_; }
    int num_roots() const { return static_cast<int>(roots_.size()); }
    int num_positive() const { return num_positive_; }

    const Root& root(int k) const { return roots_[k]; }
    const std::vector<Root>& roots() const { return roots_; }
    int index_of(const Root& r) const; // -1 if r is not a root
    bool is_positive(int k) const { return k < num_positive_; }
    int negative(int k) const { return k < num_positive_ ? k + num_positive_ : k - num_positive_; }
    int height(int k) const;

    const std::vector<std::vector<int>>& cartan_matrix() const { return cartan_; }
    // (alpha_i, alpha_i)/2 for each simple root
    const std::vector<int>& length_halves() const { return halves_; }
    // invariant symmetric form between two roots
    int inner(int j, int k) const { return gram_[static_cast<size_t>(j) * roots_.size() + k]; }

    // simple reflection s_i as a permutation of root indices
    const std::vector<int>& reflection(int i) const { return reflections_[i]; }
    Root reflect(int i, const Root& beta) const;

    // component index of each simple root and the offset of each component
    int component_of(int i) const { return component_of_[i]; }
    const std::vector<int>& component_offsets() const { return offsets_; }

private:
    CartanType type_;
    int rank_ = 0;
    int num_positive_ = 0;
    std::vector<std::vector<int>> cartan_;
    std::vector<int> halves_;
    std::vector<Root> roots_;
    std::map<Root, int> index_;
    std::vector<int8_t> gram_;
    std::vector<std::vector<int>> reflections_;
    std::vector<int> component_of_;
    std::vector<int> offsets_;
};

// Fundamental degrees per component, concatenated in component order.
std::vector<int> degrees(const RootSystem& rs);

// A subsystem spanned by simple roots, split into irreducible components.
// Components appear in canonical order; the indices of each component are
// listed in Bourbaki order of that component.
struct SubsystemLayout {
    CartanType type;
    std::vector<std::vector<int>> components;

    std::vector<int> flat() const; // concatenated indices (local numbering)
};

// subset: 0-based simple-root indices
SubsystemLayout subsystem_layout(const RootSystem& rs, const std::vector<int>& subset);
CartanType subsystem_type(const RootSystem& rs, const std::vector<int>& subset);

} // namespace weylstrata
