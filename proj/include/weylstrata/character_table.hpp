#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "weylstrata/bigint.hpp"
#include "weylstrata/cartan_type.hpp"

namespace weylstrata {

class GroupContext;

// One factor of a label: dim_b followed by `marks` primes.
struct LabelPart {
    int64_t dim = 1;
    int b = 0;
    int marks = 0;

    friend bool operator==(const LabelPart&, const LabelPart&) = default;
    friend auto operator<=>(const LabelPart&, const LabelPart&) = default;
};

// Irreducible character label such as 15_16 or 3_6''. Labels of product
// groups join the factor labels with "⊗" ("*" is accepted when parsing).
class IrrepLabel {
public:
    IrrepLabel() : parts_{LabelPart{}} {}
    IrrepLabel(int64_t dim, int b, int marks = 0) : parts_{LabelPart{dim, b, marks}} {}

    static IrrepLabel parse(std::string_view text);
    static IrrepLabel product(const std::vector<IrrepLabel>& factors);

    const std::vector<LabelPart>& parts() const { return parts_; }
    int64_t dim() const;
    int b() const;
    std::string str() const;

    friend bool operator==(const IrrepLabel&, const IrrepLabel&) = default;
    friend auto operator<=>(const IrrepLabel&, const IrrepLabel&) = default;

private:
    std::vector<LabelPart> parts_;
};

// Listing order used for output: b descending, dim ascending, then marks.
bool listing_before(const IrrepLabel& a, const IrrepLabel& b);

struct ClassRecord {
    std::string name;
    BigInt size;
    std::vector<int> word; // 0-based simple-reflection indices
    int order = 1;
};

struct Irrep {
    IrrepLabel label;
    std::vector<int64_t> values;
};

class CharacterTable {
public:
    CharacterTable() = default;
    CharacterTable(CartanType type, BigInt order, std::vector<ClassRecord> classes, std::vector<Irrep> irreps);

    const CartanType& cartan_type() const { return type_; }
    const BigInt& order() const { return order_; }
    int64_t order64() const { return order64_; }
    const std::vector<ClassRecord>& classes() const { return classes_; }
    const std::vector<Irrep>& irreps() const { return irreps_; }
    int num_classes() const { return static_cast<int>(classes_.size()); }
    int64_t class_size(int c) const { return sizes_[c]; }
    int64_t value(int chi, int c) const { return irreps_[chi].values[c]; }
    const IrrepLabel& label(int chi) const { return irreps_[chi].label; }
    int identity_class() const { return identity_; }
    int64_t dim(int chi) const { return irreps_[chi].values[identity_]; }

    // row index of the label; InputError listing nearby labels otherwise
    int lookup(const IrrepLabel& label) const;
    int find(const IrrepLabel& label) const; // -1 when absent
    int trivial() const;
    int sign() const;

private:
    CartanType type_;
    BigInt order_;
    int64_t order64_ = 1;
    std::vector<ClassRecord> classes_;
    std::vector<Irrep> irreps_;
    std::vector<int64_t> sizes_;
    int identity_ = 0;
};

// Parses the WCT 1 format. The table is not validated.
CharacterTable load_character_table(std::string_view text);
std::string write_character_table(const CharacterTable& t);

struct ValidationReport {
    std::vector<std::string> failures;
    std::vector<std::pair<int, int>> key_collisions; // class pairs with equal invariant keys

    bool ok() const { return failures.empty(); }
};

ValidationReport validate_table(const CharacterTable& t, const GroupContext& ctx);

// Character table of the symmetric group S_n (type A_{n-1}), 1 <= n <= 9.
CharacterTable symmetric_table(int n);

// Table of a direct product; classes and irreps in lexicographic order with
// the first factor varying slowest.
CharacterTable product_table(const std::vector<const CharacterTable*>& factors);
CharacterTable product_table(const std::vector<CharacterTable>& factors);

int lookup_irrep(const CharacterTable& t, const IrrepLabel& label);

} // namespace weylstrata
