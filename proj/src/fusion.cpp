#include "weylstrata/fusion.hpp"

#include "weylstrata/error.hpp"

namespace weylstrata {

std::vector<int> LeviEmbedding::translate(const std::vector<int>& local_word) const
{
    std::vector<int> w;
    w.reserve(local_word.size());
    for (int g : local_word)
        w.push_back(index_map.at(g));
    return w;
}

LeviEmbedding embed_levi(const GroupContext& ctx_G, const LeviClass& levi,
                         const std::vector<const CharacterTable*>& factor_tables)
{
    return embed_levi(ctx_G, levi, subsystem_layout(ctx_G.root_system(), levi.subset), factor_tables);
}

LeviEmbedding embed_levi(const GroupContext& ctx_G, const LeviClass& levi, const SubsystemLayout& layout,
                         const std::vector<const CharacterTable*>& factor_tables)
{
    const auto& comps = layout.type.components();
    if (factor_tables.size() != comps.size())
        throw DataError("Levi " + layout.type.str() + " needs " + std::to_string(comps.size()) + " factor tables, got " +
                        std::to_string(factor_tables.size()));
    for (size_t i = 0; i < comps.size(); ++i) {
        const auto& ft = factor_tables[i]->cartan_type();
        if (ft.components().size() != 1 || !(ft.components()[0] == comps[i]))
            throw DataError("factor table of type " + ft.str() + " does not match Levi component " + comps[i].str());
    }
    LeviEmbedding emb;
    emb.levi = levi;
    emb.layout = layout;
    emb.index_map = layout.flat();
    if (factor_tables.empty()) {
        emb.table_L = product_table(std::vector<const CharacterTable*>{});
    } else {
        emb.table_L = product_table(factor_tables);
    }
    if (ctx_G.order() % emb.table_L.order() != 0)
        throw DataError("|W_L| does not divide |W| for Levi " + layout.type.str());
    emb.index = ctx_G.order() / emb.table_L.order();
    return emb;
}

ClassIdentifier::ClassIdentifier(const GroupContext& ctx, const CharacterTable& t) : ctx_(&ctx), table_(&t)
{
    for (int c = 0; c < t.num_classes(); ++c) {
        reps_.push_back(ctx.element_of_word(t.classes()[c].word));
        keys_.push_back(ctx.invariant_key(reps_.back()));
        buckets_[keys_.back()].push_back(c);
    }
}

int ClassIdentifier::identify(const GroupElement& g) const
{
    auto key = ctx_->invariant_key(g);
    auto it = buckets_.find(key);
    if (it == buckets_.end())
        throw DataError("element matches no class of " + table_->cartan_type().str() + " (invariant key unknown)");
    if (it->second.size() == 1)
        return it->second.front();
    for (int c : it->second) {
        auto r = ctx_->are_conjugate(g, reps_[c]);
        if (r.status == ConjugacyResult::Status::budget_exceeded)
            throw BudgetExceeded("conjugacy test against class " + table_->classes()[c].name + " exceeded its budget");
        if (r.conjugate())
            return c;
    }
    throw DataError("element is conjugate to no class representative of " + table_->cartan_type().str());
}

FusionMap class_fusion(const LeviEmbedding& emb, const CharacterTable& t_G, const GroupContext& ctx_G)
{
    ClassIdentifier ident(ctx_G, t_G);
    return class_fusion(emb, ident, ctx_G);
}

FusionMap class_fusion(const LeviEmbedding& emb, const ClassIdentifier& ident, const GroupContext& ctx_G)
{
    FusionMap f;
    for (const auto& c : emb.table_L.classes()) {
        auto g = ctx_G.element_of_word(emb.translate(c.word));
        f.to_ambient.push_back(ident.identify(g));
    }
    return f;
}

std::vector<int64_t> restrict_character(const LeviEmbedding& emb, const FusionMap& fus, int psi,
                                        const CharacterTable& t_G)
{
    std::vector<int64_t> out;
    for (int c = 0; c < emb.table_L.num_classes(); ++c)
        out.push_back(t_G.value(psi, fus.to_ambient[c]));
    return out;
}

namespace {

__int128 add_checked(__int128 a, __int128 b)
{
    __int128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw DataError("overflow in character inner product");
    return r;
}

} // namespace

std::vector<int64_t> induce_decomposition(const LeviEmbedding& emb, const FusionMap& fus, int chi,
                                          const CharacterTable& t_G)
{
    const CharacterTable& tl = emb.table_L;
    const int k = tl.num_classes();
    std::vector<__int128> weight(k);
    for (int c = 0; c < k; ++c)
        weight[c] = static_cast<__int128>(tl.class_size(c)) * tl.value(chi, c);

    std::vector<int64_t> m(t_G.irreps().size());
    __int128 dim_total = 0;
    for (size_t psi = 0; psi < m.size(); ++psi) {
        __int128 s = 0;
        for (int c = 0; c < k; ++c)
            s = add_checked(s, weight[c] * t_G.value(static_cast<int>(psi), fus.to_ambient[c]));
        if (s % tl.order64() != 0)
            throw DataError("non-integral multiplicity of " + t_G.label(static_cast<int>(psi)).str() + " in Ind(" +
                            tl.label(chi).str() + ")");
        __int128 q = s / tl.order64();
        if (q < 0)
            throw DataError("negative multiplicity of " + t_G.label(static_cast<int>(psi)).str() + " in Ind(" +
                            tl.label(chi).str() + ")");
        m[psi] = static_cast<int64_t>(q);
        dim_total = add_checked(dim_total, q * t_G.dim(static_cast<int>(psi)));
    }
    if (BigInt(static_cast<int64_t>(dim_total)) != emb.index * tl.dim(chi))
        throw DataError("dimension bookkeeping fails for Ind(" + tl.label(chi).str() + ")");
    return m;
}

} // namespace weylstrata
