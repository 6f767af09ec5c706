#include "weylstrata/strata.hpp"

#include <algorithm>

#include "weylstrata/error.hpp"

namespace weylstrata {

std::vector<IrrepLabel> listing_order(const LabelSet& s)
{
    std::vector<IrrepLabel> v(s.begin(), s.end());
    std::sort(v.begin(), v.end(), listing_before);
    return v;
}

LabelSet StrataLabelSet::labels() const
{
    LabelSet out;
    for (const auto& [l, chars] : provenance)
        out.insert(l);
    return out;
}

SpringerImage springer_image(Workspace& ws, const CartanType& type, int r)
{
    SpringerImage img{type, r, {IrrepLabel()}, {}};
    bool first = true;
    for (const auto& c : type.components()) {
        const auto& entries = ws.component_springer(c, r);
        LabelSet next;
        std::map<IrrepLabel, std::string> names;
        for (const auto& a : img.labels)
            for (const auto& [label, cls] : entries) {
                IrrepLabel l = first ? label : IrrepLabel::product({a, label});
                next.insert(l);
                if (first && !cls.empty())
                    names[l] = cls;
            }
        img.labels = std::move(next);
        img.class_names = type.components().size() == 1 ? names : std::map<IrrepLabel, std::string>{};
        first = false;
    }
    return img;
}

StrataLabelSet strata_labels(Workspace& ws, const CartanType& type)
{
    StrataLabelSet s{type, {}};
    for (int r : ws.characteristics(type))
        for (const auto& l : springer_image(ws, type, r).labels)
            s.provenance[l].insert(r);
    return s;
}

StrataLabelSet levi_strata_labels(Workspace& ws, const CartanType& ambient, const LeviClass& levi)
{
    const auto& ctx = ws.context(ambient);
    return strata_labels(ws, subsystem_type(ctx.root_system(), levi.subset));
}

namespace {

// j-images of the given labels of W_L (subset of simple roots of ctx).
LabelSet j_images(const TypeContext& ctx, const std::vector<int>& subset, const LabelSet& labels)
{
    const auto& d = ctx.levi_data(subset);
    LabelSet out;
    for (const auto& l : labels) {
        int chi = d.emb.table_L.find(l);
        if (chi < 0)
            throw DataError("label " + l.str() + " is not an irrep of the Levi " + d.emb.layout.type.str());
        out.insert(ctx.table().label(j_induce(d.emb, d.fusion, ctx.table(), chi)));
    }
    return out;
}

} // namespace

LabelSet rigid_strata(Workspace& ws, const CartanType& type)
{
    const auto& ctx = ws.context(type);
    LabelSet all = strata_labels(ws, type).labels();
    LabelSet induced;
    for (const auto& levi : ctx.levis()) {
        if (levi.is_full(ctx.root_system().rank()))
            continue;
        auto lab = strata_labels(ws, levi.type).labels();
        for (const auto& e : j_images(ctx, levi.subset, lab)) {
            if (!all.count(e))
                throw DataError("j-induction from " + levi.name() + " gives " + e.str() + ", which is not a stratum label of " +
                                type.str());
            induced.insert(e);
        }
    }
    LabelSet rigid;
    std::set_difference(all.begin(), all.end(), induced.begin(), induced.end(), std::inserter(rigid, rigid.end()));
    return rigid;
}

LabelSet rigid_unipotent(Workspace& ws, const CartanType& type, int r)
{
    const auto& ctx = ws.context(type);
    LabelSet image = springer_image(ws, type, r).labels;
    LabelSet induced;
    for (const auto& levi : ctx.levis()) {
        if (levi.is_full(ctx.root_system().rank()))
            continue;
        auto lab = springer_image(ws, levi.type, r).labels;
        for (const auto& e : j_images(ctx, levi.subset, lab)) {
            if (!image.count(e))
                throw DataError("j-induction from " + levi.name() + " in characteristic " + std::to_string(r) + " gives " +
                                e.str() + ", which is not in the Springer image of " + type.str());
            induced.insert(e);
        }
    }
    LabelSet rigid;
    std::set_difference(image.begin(), image.end(), induced.begin(), induced.end(), std::inserter(rigid, rigid.end()));
    return rigid;
}

UnionCheck rigid_union_check(Workspace& ws, const CartanType& type)
{
    UnionCheck u;
    u.rigid = rigid_strata(ws, type);
    for (int r : ws.characteristics(type)) {
        u.per_char[r] = rigid_unipotent(ws, type, r);
        if (r != 0)
            u.prime_union.insert(u.per_char[r].begin(), u.per_char[r].end());
    }
    u.holds = u.prime_union == u.rigid;
    return u;
}

ExtraLabelCheck extra_label_check(Workspace& ws, const CartanType& type, int base)
{
    ExtraLabelCheck chk;
    chk.base = base;
    const auto& ctx = ws.context(type);
    LabelSet all = strata_labels(ws, type).labels();
    LabelSet img = springer_image(ws, type, base).labels;
    std::set_difference(all.begin(), all.end(), img.begin(), img.end(), std::inserter(chk.extra, chk.extra.end()));
    chk.single = chk.extra.size() == 1 && std::includes(all.begin(), all.end(), img.begin(), img.end());
    chk.never_induced = true;
    for (const auto& levi : ctx.levis()) {
        if (levi.is_full(ctx.root_system().rank()))
            continue;
        const auto& d = ctx.levi_data(levi.subset);
        for (const auto& l : springer_image(ws, levi.type, base).labels) {
            int chi = d.emb.table_L.find(l);
            if (chi < 0)
                throw DataError("label " + l.str() + " is not an irrep of the Levi " + levi.name());
            const auto& e = ctx.table().label(j_induce(d.emb, d.fusion, ctx.table(), chi));
            if (chk.extra.count(e)) {
                chk.never_induced = false;
                chk.offenders.push_back(levi.name() + ": " + l.str() + " -> " + e.str());
            }
        }
    }
    return chk;
}

IrrepLabel induce_stratum(Workspace& ws, const CartanType& ambient, const LeviClass& levi, const IrrepLabel& label)
{
    const auto& ctx = ws.context(ambient);
    auto lab = strata_labels(ws, levi.type).labels();
    if (!lab.count(label))
        throw InputError(label.str() + " is not a stratum label of the Levi " + levi.name());
    const auto& d = ctx.levi_data(levi.subset);
    int chi = d.emb.table_L.lookup(label);
    IrrepLabel e = ctx.table().label(j_induce(d.emb, d.fusion, ctx.table(), chi));
    if (!strata_labels(ws, ambient).labels().count(e))
        throw DataError("j-induction of " + label.str() + " from " + levi.name() + " gives " + e.str() +
                        ", which is not a stratum label of " + ambient.str());
    return e;
}

std::vector<std::string> strata_to_classes(Workspace& ws, const CartanType& type, const LabelSet& labels)
{
    const auto& m = ws.class_map(type);
    for (const auto& l : labels)
        if (!m.find(l))
            throw DataError("label " + l.str() + " has no entry in the strata-to-class map of " + type.str());
    std::vector<std::string> out;
    for (const auto& [l, name] : m.entries)
        if (labels.count(l))
            out.push_back(name);
    return out;
}

} // namespace weylstrata
