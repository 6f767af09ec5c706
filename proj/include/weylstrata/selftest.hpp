#pragma once

#include <string>
#include <vector>

#include "weylstrata/workspace.hpp"

namespace weylstrata {

struct CheckResult {
    std::string name;
    bool pass = false;
    std::string detail;
};

// Ambient types with full data: A1..A8, D4..D7, G2, E6, E7, E8.
std::vector<CartanType> supported_types(Workspace& ws);

// Invariant suite behind `selftest`. With deep set, every E8 irrep is
// b-certified instead of a sample.
std::vector<CheckResult> run_selftest(Workspace& ws, bool deep);

// Individual suites, usable on their own.
CheckResult check_tables(Workspace& ws);
CheckResult check_type_a_tables(Workspace& ws);
CheckResult check_mass_identity(Workspace& ws, const std::vector<std::string>& types);
CheckResult check_b_labels(Workspace& ws, const CartanType& type, int sample_at_least);
CheckResult check_transitivity_triples(Workspace& ws);
CheckResult check_frobenius(Workspace& ws, const CartanType& type);
CheckResult check_sign_rigid(Workspace& ws);

} // namespace weylstrata
