#pragma once

#include <map>
#include <vector>

#include "weylstrata/character_table.hpp"
#include "weylstrata/levi.hpp"

namespace weylstrata {

struct LeviEmbedding {
    LeviClass levi;
    SubsystemLayout layout;     // components with ambient indices, Bourbaki order within each
    std::vector<int> index_map; // local simple reflection -> ambient simple reflection
    CharacterTable table_L;     // product of the factor tables, in layout order
    BigInt index;               // [W : W_L]

    std::vector<int> translate(const std::vector<int>& local_word) const;
};

// Factor tables must match the components of the layout, in order.
LeviEmbedding embed_levi(const GroupContext& ctx_G, const LeviClass& levi,
                         const std::vector<const CharacterTable*>& factor_tables);
LeviEmbedding embed_levi(const GroupContext& ctx_G, const LeviClass& levi, const SubsystemLayout& layout,
                         const std::vector<const CharacterTable*>& factor_tables);

// Assigns elements of W to classes of an ambient table: invariant keys first,
// conjugacy backtrack when several classes share a key.
class ClassIdentifier {
public:
    ClassIdentifier(const GroupContext& ctx, const CharacterTable& t);

    int identify(const GroupElement& g) const;
    const InvariantKey& key(int c) const { return keys_[c]; }

private:
    const GroupContext* ctx_;
    const CharacterTable* table_;
    std::vector<GroupElement> reps_;
    std::vector<InvariantKey> keys_;
    std::map<InvariantKey, std::vector<int>> buckets_;
};

struct FusionMap {
    std::vector<int> to_ambient; // per W_L class
};

FusionMap class_fusion(const LeviEmbedding& emb, const CharacterTable& t_G, const GroupContext& ctx_G);
FusionMap class_fusion(const LeviEmbedding& emb, const ClassIdentifier& ident, const GroupContext& ctx_G);

std::vector<int64_t> restrict_character(const LeviEmbedding& emb, const FusionMap& fus, int psi,
                                        const CharacterTable& t_G);

// Multiplicity of every ambient irrep in Ind_{W_L}^W(chi). Any inexact
// division or bookkeeping mismatch raises DataError.
std::vector<int64_t> induce_decomposition(const LeviEmbedding& emb, const FusionMap& fus, int chi,
                                          const CharacterTable& t_G);

} // namespace weylstrata
