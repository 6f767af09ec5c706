#include "weylstrata/selftest.hpp"

#include <algorithm>
#include <filesystem>
#include <random>

#include "weylstrata/error.hpp"
#include "weylstrata/strata.hpp"

namespace weylstrata {

namespace {

template <class F>
CheckResult guarded(std::string name, F&& body)
{
    CheckResult r{std::move(name), false, {}};
    try {
        r.detail = body(r.pass);
    } catch (const std::exception& e) {
        r.pass = false;
        r.detail = e.what();
    }
    return r;
}

} // namespace

std::vector<CartanType> supported_types(Workspace& ws)
{
    std::vector<CartanType> out;
    for (int n = 1; n <= 8; ++n)
        out.push_back(CartanType({Component{'A', n}}));
    for (const char* t : {"D4", "D5", "D6", "D7", "G2", "E6", "E7", "E8"})
        if (std::filesystem::exists(ws.data_dir() / "tables" / (std::string(t) + ".wct")))
            out.push_back(CartanType::parse(t));
    return out;
}

CheckResult check_tables(Workspace& ws)
{
    return guarded("character tables: orthogonality, class sizes, orders", [&](bool& pass) {
        int n = 0;
        for (const auto& t : supported_types(ws)) {
            const auto& c = t.components().front();
            const auto& tab = ws.component_table(c); // validated on load
            auto rs = std::make_shared<RootSystem>(t);
            GroupContext g(rs);
            auto rep = validate_table(tab, g);
            if (!rep.ok())
                throw DataError(t.str() + ": " + rep.failures.front());
            ++n;
        }
        pass = true;
        return std::to_string(n) + " tables";
    });
}

CheckResult check_type_a_tables(Workspace& ws)
{
    return guarded("computed S_n tables agree with bundled type-A files", [&](bool& pass) {
        int n = 0;
        for (int r = 1; r <= 8; ++r) {
            auto path = ws.data_dir() / "tables" / ("A" + std::to_string(r) + ".wct");
            if (!std::filesystem::exists(path))
                continue;
            auto bundled = load_character_table(read_file(path.string()));
            auto computed = symmetric_table(r + 1);
            if (bundled.num_classes() != computed.num_classes())
                throw DataError("A" + std::to_string(r) + ": class counts differ");
            // match classes through the bundled representative words
            auto rs = std::make_shared<RootSystem>(bundled.cartan_type());
            GroupContext g(rs);
            ClassIdentifier ident(g, computed);
            std::vector<int> cmap;
            for (const auto& c : bundled.classes())
                cmap.push_back(ident.identify(g.element_of_word(c.word)));
            for (const auto& ir : bundled.irreps()) {
                int k = computed.find(ir.label);
                if (k < 0)
                    throw DataError("A" + std::to_string(r) + ": no computed irrep " + ir.label.str());
                for (int c = 0; c < bundled.num_classes(); ++c)
                    if (ir.values[c] != computed.value(k, cmap[c]))
                        throw DataError("A" + std::to_string(r) + ": values of " + ir.label.str() + " differ");
            }
            ++n;
        }
        pass = n > 0;
        return std::to_string(n) + " bundled type-A tables compared";
    });
}

CheckResult check_mass_identity(Workspace& ws, const std::vector<std::string>& types)
{
    return guarded("fake-degree mass identity", [&](bool& pass) {
        std::string done;
        for (const auto& name : types) {
            auto t = CartanType::parse(name);
            const auto& ctx = ws.context(t);
            FakeDegrees fd(ctx.group(), ctx.table());
            const int n = ctx.root_system().num_positive();
            std::vector<int64_t> lhs(n + 1, 0);
            for (int chi = 0; chi < static_cast<int>(ctx.table().irreps().size()); ++chi) {
                auto r = fd.fake_degree(chi);
                for (size_t k = 0; k < r.size(); ++k)
                    lhs[k] += r[k] * ctx.table().dim(chi);
            }
            // prod (q^{d_i} - 1)/(q - 1) = prod (1 + q + ... + q^{d_i - 1})
            std::vector<int64_t> rhs{1};
            for (int d : degrees(ctx.root_system())) {
                std::vector<int64_t> next(rhs.size() + d - 1, 0);
                for (size_t i = 0; i < rhs.size(); ++i)
                    for (int j = 0; j < d; ++j)
                        next[i + j] += rhs[i];
                rhs = next;
            }
            rhs.resize(n + 1, 0);
            if (lhs != rhs)
                throw DataError("mass identity fails for " + name);
            done += (done.empty() ? "" : " ") + name;
        }
        pass = true;
        return done;
    });
}

CheckResult check_b_labels(Workspace& ws, const CartanType& type, int sample_at_least)
{
    return guarded("label b equals fake-degree b for " + type.str(), [&](bool& pass) {
        const auto& ctx = ws.context(type);
        FakeDegrees fd(ctx.group(), ctx.table());
        const int n = static_cast<int>(ctx.table().irreps().size());
        int step = 1;
        if (sample_at_least > 0 && sample_at_least < n)
            step = std::max(1, n / sample_at_least);
        int checked = 0;
        for (int chi = 0; chi < n; chi += step) {
            certify_b(ctx.table(), fd, chi);
            ++checked;
        }
        pass = true;
        return std::to_string(checked) + " of " + std::to_string(n) + " irreps";
    });
}

CheckResult check_transitivity_triples(Workspace& ws)
{
    return guarded("j-induction transitivity on nested Levi triples", [&](bool& pass) {
        std::mt19937_64 rng(20240601);
        int total = 0;
        for (auto [name, count] : {std::pair{"A5", 6}, std::pair{"D5", 7}, std::pair{"E6", 7}}) {
            auto g = CartanType::parse(name);
            const int r = g.rank();
            for (int i = 0; i < count; ++i) {
                // M: random nonempty subset, L: random subset of M (both may be proper)
                std::vector<int> m, l;
                while (m.empty())
                    for (int x = 0; x < r; ++x)
                        if (rng() % 3 != 0)
                            m.push_back(x);
                for (int x : m)
                    if (rng() % 2)
                        l.push_back(x);
                const auto& dl = ws.context(g).levi_data(l);
                int chi = static_cast<int>(rng() % dl.emb.table_L.irreps().size());
                auto res = check_transitivity(ws, g, m, l, chi);
                if (!res.agree())
                    throw DataError(std::string(name) + ": routes disagree for " + dl.emb.table_L.label(chi).str() +
                                    " (" + res.direct.str() + " vs " + res.via.str() + ")");
                ++total;
            }
        }
        pass = total >= 20;
        return std::to_string(total) + " triples";
    });
}

CheckResult check_frobenius(Workspace& ws, const CartanType& type)
{
    return guarded("Frobenius reciprocity and dimension bookkeeping on every Levi of " + type.str(), [&](bool& pass) {
        const auto& ctx = ws.context(type);
        const auto& tg = ctx.table();
        long pairs = 0;
        for (const auto& levi : ctx.levis()) {
            const auto& d = ctx.levi_data(levi.subset);
            const auto& tl = d.emb.table_L;
            for (int chi = 0; chi < static_cast<int>(tl.irreps().size()); ++chi) {
                auto m = induce_decomposition(d.emb, d.fusion, chi, tg); // checks bookkeeping
                BigInt dims = 0;
                for (size_t psi = 0; psi < m.size(); ++psi) {
                    auto res = restrict_character(d.emb, d.fusion, static_cast<int>(psi), tg);
                    __int128 s = 0;
                    for (int c = 0; c < tl.num_classes(); ++c)
                        s += static_cast<__int128>(tl.class_size(c)) * tl.value(chi, c) * res[c];
                    if (s % tl.order64() != 0 || s / tl.order64() != m[psi])
                        throw DataError(levi.name() + ": reciprocity fails for " + tl.label(chi).str() + ", " +
                                        tg.label(static_cast<int>(psi)).str());
                    dims += BigInt(m[psi]) * tg.dim(static_cast<int>(psi));
                    ++pairs;
                }
                if (dims != d.emb.index * tl.dim(chi))
                    throw DataError(levi.name() + ": dimension bookkeeping fails for " + tl.label(chi).str());
            }
        }
        pass = true;
        return std::to_string(ctx.levis().size()) + " Levi classes, " + std::to_string(pairs) + " pairs";
    });
}

CheckResult check_sign_rigid(Workspace& ws)
{
    return guarded("sign label is rigid for every supported type", [&](bool& pass) {
        std::string done;
        auto types = supported_types(ws);
        types.push_back(CartanType()); // torus
        for (const auto& t : types) {
            const auto& ctx = ws.context(t);
            auto rig = rigid_strata(ws, t);
            if (!rig.count(ctx.table().label(ctx.table().sign())))
                throw DataError("sign of " + t.str() + " is not rigid");
            done += (done.empty() ? "" : " ") + t.str();
        }
        pass = true;
        return done;
    });
}

std::vector<CheckResult> run_selftest(Workspace& ws, bool deep)
{
    std::vector<CheckResult> out;
    out.push_back(check_tables(ws));
    out.push_back(check_type_a_tables(ws));
    out.push_back(check_mass_identity(ws, {"A1", "A2", "A3", "A4", "A5", "D4", "E6"}));
    out.push_back(check_b_labels(ws, CartanType::parse("E6"), 0));
    out.push_back(check_b_labels(ws, CartanType::parse("E7"), 0));
    out.push_back(check_b_labels(ws, CartanType::parse("E8"), deep ? 0 : 25));
    out.push_back(check_transitivity_triples(ws));
    out.push_back(check_frobenius(ws, CartanType::parse("E6")));
    out.push_back(check_sign_rigid(ws));
    return out;
}

} // namespace weylstrata
