#include "weylstrata/levi.hpp"

#include <algorithm>

#include "weylstrata/error.hpp"

namespace weylstrata {

std::string LeviClass::name() const
{
    std::string s = type.str();
    if (same_type > 1)
        s += "#" + std::to_string(tag);
    return s;
}

std::vector<LeviClass> levi_representatives(const GroupContext& ctx)
{
    const RootSystem& rs = ctx.root_system();
    const int r = rs.rank();
    std::vector<std::vector<int>> subsets;
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<int> s;
        for (int i = 0; i < r; ++i)
            if (mask & (1u << i))
                s.push_back(i);
        subsets.push_back(s);
    }
    std::sort(subsets.begin(), subsets.end());

    std::vector<LeviClass> reps;
    for (const auto& s : subsets) {
        CartanType t = subsystem_type(rs, s);
        bool placed = false;
        std::optional<StabChain> chain;
        for (auto& rep : reps) {
            if (rep.type != t)
                continue;
            if (!chain)
                chain = ctx.chain_with_base(s);
            if (ctx.subset_conjugator(*chain, s, rep.subset)) {
                ++rep.orbit_size;
                placed = true;
                break;
            }
        }
        if (!placed)
            reps.push_back({s, t, 1, 1, 1});
    }

    // tags follow discovery order, which is lexicographic order of the representatives
    for (size_t i = 0; i < reps.size(); ++i) {
        int tag = 0, count = 0;
        for (size_t j = 0; j < reps.size(); ++j)
            if (reps[j].type == reps[i].type) {
                ++count;
                if (j <= i)
                    ++tag;
            }
        reps[i].tag = tag;
        reps[i].same_type = count;
    }
    std::stable_sort(reps.begin(), reps.end(), [](const LeviClass& a, const LeviClass& b) {
        if (a.subset.size() != b.subset.size())
            return a.subset.size() < b.subset.size();
        return a.subset < b.subset;
    });
    return reps;
}

const LeviClass& find_levi(const std::vector<LeviClass>& levis, std::string_view name)
{
    std::string text(name);
    int tag = 0;
    auto hash = text.find('#');
    if (hash != std::string::npos) {
        try {
            tag = std::stoi(text.substr(hash + 1));
        } catch (const std::exception&) {
            throw InputError("bad Levi tag in '" + text + "'");
        }
        text = text.substr(0, hash);
    }
    CartanType t = CartanType::parse(text);
    std::vector<const LeviClass*> hits;
    for (const auto& l : levis)
        if (l.type == t && (tag == 0 || l.tag == tag))
            hits.push_back(&l);
    if (hits.empty())
        throw InputError("no Levi subsystem named '" + std::string(name) + "'");
    if (hits.size() > 1)
        throw InputError("Levi name '" + std::string(name) + "' is ambiguous; add a tag such as " +
                         hits[0]->type.str() + "#1");
    return *hits.front();
}

} // namespace weylstrata
