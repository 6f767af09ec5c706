#include "weylstrata/workspace.hpp"

#include <algorithm>
#include <cstdlib>
#include <regex>

#include "weylstrata/error.hpp"

#ifndef WEYLSTRATA_DEFAULT_DATA
#define WEYLSTRATA_DEFAULT_DATA "data"
#endif

namespace weylstrata {

// ------------------------------------------------------------- TypeContext

TypeContext::TypeContext(Workspace& ws, CartanType type) : ws_(&ws), type_(std::move(type))
{
    rs_ = std::make_shared<RootSystem>(type_);
    group_ = std::make_unique<GroupContext>(rs_);
    table_ = ws.table(type_);
    ident_ = std::make_unique<ClassIdentifier>(*group_, table_);
}

const std::vector<LeviClass>& TypeContext::levis() const
{
    std::lock_guard lock(mu_);
    if (!levis_)
        levis_ = std::make_unique<std::vector<LeviClass>>(levi_representatives(*group_));
    return *levis_;
}

TypeContext::LeviData TypeContext::make_levi_data(const LeviClass& levi, const SubsystemLayout& layout) const
{
    std::vector<const CharacterTable*> factors;
    for (const auto& c : layout.type.components())
        factors.push_back(&ws_->component_table(c));
    LeviData d{embed_levi(*group_, levi, layout, factors), {}};
    d.fusion = class_fusion(d.emb, *ident_, *group_);
    return d;
}

const TypeContext::LeviData& TypeContext::levi_data(const std::vector<int>& subset) const
{
    std::vector<int> key(subset);
    std::sort(key.begin(), key.end());
    {
        std::lock_guard lock(mu_);
        auto it = levi_cache_.find(key);
        if (it != levi_cache_.end())
            return *it->second;
    }
    auto layout = subsystem_layout(*rs_, key);
    LeviClass l{key, layout.type};
    auto data = std::make_unique<LeviData>(make_levi_data(l, layout));
    std::lock_guard lock(mu_);
    auto [it, inserted] = levi_cache_.emplace(key, std::move(data));
    return *it->second;
}

int TypeContext::j_induce(const std::vector<int>& subset, int chi) const
{
    const auto& d = levi_data(subset);
    return weylstrata::j_induce(d.emb, d.fusion, table_, chi);
}

// --------------------------------------------------------------- Workspace

Workspace::Workspace(std::filesystem::path data_dir) : dir_(std::move(data_dir))
{
    if (!std::filesystem::is_directory(dir_))
        throw Unsupported("data directory " + dir_.string() + " does not exist");
}

std::filesystem::path Workspace::default_data_dir()
{
    if (const char* env = std::getenv("WEYLSTRATA_DATA"); env && *env)
        return env;
    return WEYLSTRATA_DEFAULT_DATA;
}

const CharacterTable& Workspace::component_table(const Component& c)
{
    std::lock_guard lock(mu_);
    const std::string name = c.str();
    if (auto it = tables_.find(name); it != tables_.end())
        return *it->second;

    CharacterTable t;
    if (c.family == 'A') {
        if (c.rank > 8)
            throw Unsupported("type " + name + " is beyond the supported range (A1..A8)");
        t = symmetric_table(c.rank + 1);
    } else {
        auto path = dir_ / "tables" / (name + ".wct");
        if (!std::filesystem::exists(path))
            throw Unsupported("no character table shipped for " + name);
        try {
            t = load_character_table(read_file(path.string()));
        } catch (const ParseError& e) {
            throw DataError(path.string() + ": " + e.what());
        }
        if (t.cartan_type() != CartanType({c}))
            throw DataError(path.string() + ": table is for " + t.cartan_type().str());
    }
    auto rs = std::make_shared<RootSystem>(CartanType({c}));
    GroupContext g(rs);
    auto report = validate_table(t, g);
    if (!report.ok())
        throw DataError("character table of " + name + " fails validation: " + report.failures.front());
    FakeDegrees fd(g, t);
    for (int chi = 0; chi < static_cast<int>(t.irreps().size()); ++chi)
        certify_b(t, fd, chi);
    auto [it, ok] = tables_.emplace(name, std::make_unique<CharacterTable>(std::move(t)));
    return *it->second;
}

CharacterTable Workspace::table(const CartanType& t)
{
    std::vector<const CharacterTable*> f;
    for (const auto& c : t.components())
        f.push_back(&component_table(c));
    return product_table(f);
}

const TypeContext& Workspace::context(const CartanType& t)
{
    std::lock_guard lock(mu_);
    const std::string name = t.str();
    if (auto it = contexts_.find(name); it != contexts_.end())
        return *it->second;
    auto ctx = std::make_unique<TypeContext>(*this, t);
    auto [it, ok] = contexts_.emplace(name, std::move(ctx));
    return *it->second;
}

std::vector<int> Workspace::characteristics(const CartanType& t)
{
    std::lock_guard lock(mu_);
    if (!all_chars_) {
        all_chars_ = std::make_unique<std::set<int>>();
        std::regex re(R"(([A-G][0-9]+)_([0-9]+)\.spi)");
        auto sdir = dir_ / "springer";
        if (std::filesystem::is_directory(sdir))
            for (const auto& e : std::filesystem::directory_iterator(sdir)) {
                std::smatch m;
                std::string fn = e.path().filename().string();
                if (std::regex_match(fn, m, re))
                    all_chars_->insert(std::stoi(m[2]));
            }
    }
    std::set<int> chars = *all_chars_;
    for (const auto& c : t.components()) {
        if (c.family == 'A')
            continue;
        std::set<int> mine;
        for (int r : *all_chars_)
            if (std::filesystem::exists(dir_ / "springer" / (c.str() + "_" + std::to_string(r) + ".spi")))
                mine.insert(r);
        std::set<int> both;
        std::set_intersection(chars.begin(), chars.end(), mine.begin(), mine.end(), std::inserter(both, both.end()));
        chars = both;
    }
    if (chars.empty())
        throw Unsupported("no Springer data shipped for " + t.str());
    return {chars.begin(), chars.end()};
}

const std::vector<std::pair<IrrepLabel, std::string>>& Workspace::component_springer(const Component& c, int r)
{
    std::lock_guard lock(mu_);
    auto key = std::make_pair(c.str(), r);
    if (auto it = springer_.find(key); it != springer_.end())
        return it->second;

    const CharacterTable& t = component_table(c);
    std::vector<std::pair<IrrepLabel, std::string>> entries;
    auto exact = dir_ / "springer" / (c.str() + "_" + std::to_string(r) + ".spi");
    auto rule = dir_ / "springer" / (std::string(1, c.family) + ".spi");
    if (std::filesystem::exists(exact)) {
        SpringerFile f;
        try {
            f = parse_springer_file(read_file(exact.string()));
        } catch (const ParseError& e) {
            throw DataError(exact.string() + ": " + e.what());
        }
        if (f.type_text != c.str() || f.characteristic != r || f.all)
            throw DataError(exact.string() + ": header does not match " + c.str() + " in characteristic " +
                            std::to_string(r));
        for (const auto& [label, cls] : f.entries)
            if (t.find(label) < 0)
                throw DataError(exact.string() + ": label " + label.str() + " is not an irrep of " + c.str());
        entries = f.entries;
    } else if (std::filesystem::exists(rule)) {
        SpringerFile f;
        try {
            f = parse_springer_file(read_file(rule.string()));
        } catch (const ParseError& e) {
            throw DataError(rule.string() + ": " + e.what());
        }
        if (f.type_text != std::string(1, c.family) || f.characteristic || !f.all)
            throw DataError(rule.string() + ": expected a family-wide 'CHAR any / COUNT all' rule");
        for (const auto& ir : t.irreps())
            entries.emplace_back(ir.label, std::string());
        if (entries.size() != t.irreps().size())
            throw DataError("Springer image of " + c.str() + " must have one label per irrep");
    } else {
        throw Unsupported("unsupported (type, characteristic): no Springer data for (" + c.str() + ", " +
                          std::to_string(r) + ")");
    }
    auto [it, ok] = springer_.emplace(key, std::move(entries));
    return it->second;
}

const StrataClassMap& Workspace::class_map(const CartanType& t)
{
    std::lock_guard lock(mu_);
    const std::string name = t.str();
    if (auto it = class_maps_.find(name); it != class_maps_.end())
        return *it->second;
    auto path = dir_ / "strata" / (name + ".scm");
    if (!std::filesystem::exists(path))
        throw Unsupported("no strata-to-class map shipped for " + name);
    StrataClassMap m;
    try {
        m = parse_class_map(read_file(path.string()));
    } catch (const ParseError& e) {
        throw DataError(path.string() + ": " + e.what());
    }
    if (m.type != t)
        throw DataError(path.string() + ": map is for " + m.type.str());
    // every class name must be a class of W once punctuation is ignored
    const CharacterTable& tab = context(t).table();
    auto norm = [](std::string s) {
        std::string o;
        for (char ch : s)
            if (ch != '(' && ch != ')' && ch != '+')
                o += ch;
        return o;
    };
    std::set<std::string> known;
    for (const auto& c : tab.classes())
        known.insert(norm(c.name));
    for (const auto& [label, cls] : m.entries) {
        if (tab.find(label) < 0)
            throw DataError(path.string() + ": label " + label.str() + " is not an irrep of " + name);
        if (!known.count(norm(cls)))
            throw DataError(path.string() + ": " + cls + " is not a conjugacy class of W(" + name + ")");
    }
    auto [it, ok] = class_maps_.emplace(name, std::make_unique<StrataClassMap>(std::move(m)));
    return *it->second;
}

// ------------------------------------------------------------ transitivity

TransitivityResult check_transitivity(Workspace& ws, const CartanType& g, const std::vector<int>& m,
                                      const std::vector<int>& l, int chi)
{
    const TypeContext& cg = ws.context(g);
    for (int x : l)
        if (std::find(m.begin(), m.end(), x) == m.end())
            throw InputError("check_transitivity: L is not contained in M");

    const auto& dl = cg.levi_data(l);
    TransitivityResult res;
    res.direct = cg.table().label(j_induce(dl.emb, dl.fusion, cg.table(), chi));

    // W_M as an ambient group in its own numbering
    auto mlayout = subsystem_layout(cg.root_system(), m);
    auto mflat = mlayout.flat();
    auto local = [&](int a) {
        return static_cast<int>(std::find(mflat.begin(), mflat.end(), a) - mflat.begin());
    };
    const TypeContext& cm = ws.context(mlayout.type);
    SubsystemLayout llocal;
    llocal.type = dl.emb.layout.type;
    std::vector<int> lsub;
    for (const auto& comp : dl.emb.layout.components) {
        std::vector<int> c;
        for (int a : comp) {
            c.push_back(local(a));
            lsub.push_back(local(a));
        }
        llocal.components.push_back(c);
    }
    std::sort(lsub.begin(), lsub.end());
    auto dlm = cm.make_levi_data(LeviClass{lsub, llocal.type}, llocal);
    int mid = j_induce(dlm.emb, dlm.fusion, cm.table(), chi);
    res.middle = cm.table().label(mid);

    const auto& dm = cg.levi_data(m);
    if (dm.emb.table_L.label(mid) != res.middle)
        throw DataError("check_transitivity: table of W_M does not match its embedding");
    res.via = cg.table().label(j_induce(dm.emb, dm.fusion, cg.table(), mid));
    return res;
}

} // namespace weylstrata
