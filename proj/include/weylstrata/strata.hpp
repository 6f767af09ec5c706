#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "weylstrata/workspace.hpp"

namespace weylstrata {

using LabelSet = std::set<IrrepLabel>;

// Labels sorted for output: b descending, dim ascending, marks.
std::vector<IrrepLabel> listing_order(const LabelSet& s);

struct SpringerImage {
    CartanType type;
    int characteristic = 0;
    LabelSet labels;
    std::map<IrrepLabel, std::string> class_names; // when the data names the classes
};

struct StrataLabelSet {
    CartanType type;
    std::map<IrrepLabel, std::set<int>> provenance; // label -> characteristics contributing it

    LabelSet labels() const;
    size_t size() const { return provenance.size(); }
};

// Product types combine componentwise (labels joined, b adds).
SpringerImage springer_image(Workspace& ws, const CartanType& type, int r);

// Union of the Springer images over the bundled characteristics.
StrataLabelSet strata_labels(Workspace& ws, const CartanType& type);

// Strata labels of the Levi subgroup given by a subset of simple roots of `ambient`.
StrataLabelSet levi_strata_labels(Workspace& ws, const CartanType& ambient, const LeviClass& levi);

// Strata labels not obtained by j-induction from any proper Levi.
LabelSet rigid_strata(Workspace& ws, const CartanType& type);

// Springer labels in characteristic r not obtained by j-induction from the
// Springer image of a proper Levi in the same characteristic.
LabelSet rigid_unipotent(Workspace& ws, const CartanType& type, int r);

struct UnionCheck {
    LabelSet rigid;
    std::map<int, LabelSet> per_char; // every bundled characteristic, 0 included
    LabelSet prime_union;             // union over the prime characteristics
    bool holds = false;
};

UnionCheck rigid_union_check(Workspace& ws, const CartanType& type);

// Strata labels that are missing from the Springer image in characteristic
// `base`. For E8 and base 2 this is expected to be a single label that no
// proper Levi produces by j-induction from its characteristic-2 image.
struct ExtraLabelCheck {
    int base = 2;
    LabelSet extra;
    bool single = false;
    bool never_induced = false;
    std::vector<std::string> offenders; // "L: E' -> E" for each violation

    bool holds() const { return single && never_induced; }
};

ExtraLabelCheck extra_label_check(Workspace& ws, const CartanType& type, int base = 2);

// j_{W_L}^W(label), asserted to be a stratum label of the ambient type.
IrrepLabel induce_stratum(Workspace& ws, const CartanType& ambient, const LeviClass& levi, const IrrepLabel& label);

// Carter names of the labels, in the order of the shipped map.
std::vector<std::string> strata_to_classes(Workspace& ws, const CartanType& type, const LabelSet& labels);

} // namespace weylstrata
