#pragma once

#include <vector>

#include "weylstrata/fusion.hpp"
#include "weylstrata/polynomial.hpp"

namespace weylstrata {

// Fake degrees R_chi(q) of all irreps of a table, from the class formula
//   R_chi(q) = prod_i (1 - q^{d_i}) * (1/|W|) sum_C |C| chi(C) / det(I - q M_C).
// 1/det(I - q M_C) has integer coefficients, so the series stay integral and
// the only division is the final exact one by |W|.
class FakeDegrees {
public:
    FakeDegrees(const GroupContext& ctx, const CharacterTable& t);

    // Raises DataError if the result is not a polynomial of degree <= N
    // with non-negative coefficients and value dim(chi) at q = 1.
    IntPoly fake_degree(int chi) const;
    int num_positive() const { return n_; }

private:
    const CharacterTable* table_;
    int n_ = 0;     // number of positive roots
    int depth_ = 0; // series computed to q^depth_
    std::vector<std::vector<__int128>> series_; // per class
    std::vector<__int128> prod_;                // prod (1 - q^{d_i}), truncated
};

IntPoly fake_degree(const CharacterTable& t, const GroupContext& ctx, int chi);
int lowest_power(const IntPoly& p);

// b as carried by the label.
int b_invariant(const CharacterTable& t, int chi);
// Checks the label b against the fake degree; DataError naming the irrep otherwise.
void certify_b(const CharacterTable& t, const FakeDegrees& fd, int chi);

// Ambient irrep index of j_{W_L}^W(chi).
int j_induce(const LeviEmbedding& emb, const FusionMap& fus, const CharacterTable& t_G, int chi);

} // namespace weylstrata
