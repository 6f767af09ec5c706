// Prints, for each proper Levi class of a type, how its strata labels
// j-induce into the ambient group.
#include <iostream>

#include "weylstrata/strata.hpp"

using namespace weylstrata;

int main(int argc, char** argv)
{
    const std::string name = argc > 1 ? argv[1] : "D4";
    Workspace ws(Workspace::default_data_dir());
    auto type = CartanType::parse(name);
    const auto& ctx = ws.context(type);
    for (const auto& levi : ctx.levis()) {
        if (levi.is_full(type.rank()))
            continue;
        std::cout << levi.name() << '\n';
        for (const auto& e : listing_order(levi_strata_labels(ws, type, levi).labels()))
            std::cout << "  " << e.str() << " -> " << induce_stratum(ws, type, levi, e).str() << '\n';
    }
    auto rig = rigid_strata(ws, type);
    std::cout << "rigid:";
    for (const auto& e : listing_order(rig))
        std::cout << ' ' << e.str();
    std::cout << '\n';
}
