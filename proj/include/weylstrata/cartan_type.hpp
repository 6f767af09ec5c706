#pragma once

#include <string>
#include <string_view>
#include <vector>

namespace weylstrata {

struct Component {
    char family = 'A'; // one of A..G
    int rank = 1;

    std::string str() const { return family + std::to_string(rank); }
    friend bool operator==(const Component&, const Component&) = default;
};

// Canonical component order: exceptional and larger families first, then
// rank descending (E6+A1, D5+A2, A4+A3).
bool canonical_before(const Component& a, const Component& b);

// Cartan type as an ordered list of simple components. The empty list is the
// torus. Component order fixes the numbering of the simple roots.
class CartanType {
public:
    CartanType() = default;
    explicit CartanType(std::vector<Component> components);

    // Case-insensitive, '+'-separated; "T", "0", "torus" or "" give the torus.
    // Result is canonical: low-rank aliases folded (B1, C1 -> A1, D2 -> 2A1,
    // D3 -> A3) and components sorted.
    static CartanType parse(std::string_view text);

    const std::vector<Component>& components() const { return components_; }
    int rank() const;
    bool is_torus() const { return components_.empty(); }
    bool is_canonical() const;
    CartanType canonical() const;

    std::string str() const; // "E6+A1", "T" for the torus

    friend bool operator==(const CartanType&, const CartanType&) = default;

private:
    std::vector<Component> components_;
};

// Throws InputError if the family/rank pair does not exist.
void check_component(const Component& c);

// Cartan matrix entries a(i,j) = <alpha_i^vee, alpha_j>, Bourbaki numbering.
std::vector<std::vector<int>> cartan_matrix(const Component& c);

// Squared root lengths halved, (alpha_i, alpha_i)/2, per simple root.
std::vector<int> root_length_halves(const Component& c);

// Fundamental degrees in increasing order.
std::vector<int> component_degrees(const Component& c);

} // namespace weylstrata
