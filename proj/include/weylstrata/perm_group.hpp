#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <vector>

#include "weylstrata/bigint.hpp"
#include "weylstrata/polynomial.hpp"
#include "weylstrata/root_system.hpp"

namespace weylstrata {

// Permutation of root indices: p[x] is the image of x.
using Perm = std::vector<uint16_t>;

Perm identity_perm(int n);
Perm compose(const Perm& p, const Perm& q); // x -> p[q[x]]
Perm inverse(const Perm& p);
bool is_identity(const Perm& p);
int perm_order(const Perm& p);

// Stabilizer chain built by deterministic Schreier-Sims.
class StabChain {
public:
    struct Level {
        int base = 0;
        std::vector<Perm> gens;         // strong generators fixing earlier base points
        std::vector<int> orbit;         // orbit of base, in discovery order
        std::vector<int> position;      // point -> index in orbit, or -1
        std::vector<Perm> transversal;  // transversal[i] maps base to orbit[i]
    };

    StabChain() = default;
    StabChain(int degree, const std::vector<Perm>& gens, const std::vector<int>& base_prefix);

    int degree() const { return degree_; }
    const std::vector<Level>& levels() const { return levels_; }
    std::vector<int> base() const;
    BigInt order() const;
    bool contains(const Perm& p) const;
    Perm random_element(std::mt19937_64& rng) const;

private:
    // returns residue and the level at which sifting stopped
    std::pair<Perm, size_t> sift(Perm h, size_t from) const;
    void rebuild_orbit(Level& lv) const;

    int degree_ = 0;
    std::vector<Level> levels_;
};

struct GroupElement {
    Perm perm;
    std::vector<int> matrix; // rank x rank, row-major; column j holds w(alpha_j)
    std::optional<std::vector<int>> word;
};

struct InvariantKey {
    int order = 1;
    std::vector<std::pair<int, int>> cycle_type; // (cycle length, count), ascending
    std::vector<IntPoly> charpolys;              // of w^k for each k | order, k ascending

    friend bool operator==(const InvariantKey&, const InvariantKey&) = default;
    friend auto operator<=>(const InvariantKey&, const InvariantKey&) = default;
};

struct ConjugacyResult {
    enum class Status { conjugate, not_conjugate, budget_exceeded };
    Status status = Status::not_conjugate;
    std::optional<GroupElement> witness; // w with w a w^-1 = b
    long nodes = 0;

    bool conjugate() const { return status == Status::conjugate; }
};

inline constexpr long kDefaultBudget = 10'000'000;

// W realized as a permutation group on the roots. Simple-reflection indices
// in words are 0-based.
class GroupContext {
public:
    explicit GroupContext(std::shared_ptr<const RootSystem> rs);

    const RootSystem& root_system() const { return *rs_; }
    std::shared_ptr<const RootSystem> root_system_ptr() const { return rs_; }
    int degree() const { return rs_->num_roots(); }
    const std::vector<GroupElement>& generators() const { return gens_; }
    const StabChain& chain() const { return chain_; }
    const BigInt& order() const { return order_; }

    GroupElement identity() const;
    GroupElement element_of_word(const std::vector<int>& word) const;
    GroupElement element_of_perm(Perm p) const;
    GroupElement multiply(const GroupElement& a, const GroupElement& b) const;
    GroupElement inverse(const GroupElement& a) const;
    GroupElement power(const GroupElement& a, int k) const;
    GroupElement random_element(std::mt19937_64& rng) const;
    std::vector<int> matrix_of(const Perm& p) const;

    InvariantKey invariant_key(const GroupElement& g) const;

    ConjugacyResult are_conjugate(const GroupElement& a, const GroupElement& b,
                                  long budget = kDefaultBudget) const;

    // Element mapping the subsystem spanned by the roots S1 onto the one
    // spanned by S2. Throws BudgetExceeded when the search is cut off.
    std::optional<GroupElement> subset_conjugator(const std::vector<int>& s1,
                                                  const std::vector<int>& s2,
                                                  long budget = kDefaultBudget) const;

    // Stabilizer chain whose base starts with the given root indices.
    StabChain chain_with_base(const std::vector<int>& prefix) const;
    // Same search on a chain from chain_with_base(s1).
    std::optional<GroupElement> subset_conjugator(const StabChain& chain, const std::vector<int>& s1,
                                                  const std::vector<int>& s2,
                                                  long budget = kDefaultBudget) const;

    // Roots of the subsystem generated by reflections in the given roots.
    std::vector<int> subsystem_roots(const std::vector<int>& roots) const;

private:
    std::shared_ptr<const RootSystem> rs_;
    std::vector<GroupElement> gens_;
    StabChain chain_;
    BigInt order_;
};

} // namespace weylstrata
