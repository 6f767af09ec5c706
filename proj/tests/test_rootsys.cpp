#include <gtest/gtest.h>

#include <bit>
#include <set>

#include "common.hpp"
#include "oracles.hpp"
#include "weylstrata/error.hpp"
#include "weylstrata/levi.hpp"

using namespace weylstrata;
using testing_support::group;

TEST(CartanType, ParsesCaseInsensitiveAndCanonical)
{
    EXPECT_EQ(CartanType::parse("e8").str(), "E8");
    EXPECT_EQ(CartanType::parse("A3+A4").str(), "A4+A3");
    EXPECT_EQ(CartanType::parse("a2+d5").str(), "D5+A2");
    EXPECT_EQ(CartanType::parse("A1+E6").str(), "E6+A1");
    EXPECT_TRUE(CartanType::parse("T").is_torus());
    EXPECT_TRUE(CartanType::parse("").is_torus());
    EXPECT_TRUE(CartanType::parse("torus").is_torus());
    EXPECT_EQ(CartanType::parse("0").str(), "T");
}

TEST(CartanType, FoldsLowRankAliases)
{
    EXPECT_EQ(CartanType::parse("B1"), CartanType::parse("A1"));
    EXPECT_EQ(CartanType::parse("C1"), CartanType::parse("A1"));
    EXPECT_EQ(CartanType::parse("D2"), CartanType::parse("A1+A1"));
    EXPECT_EQ(CartanType::parse("D3"), CartanType::parse("A3"));
    EXPECT_EQ(CartanType::parse("2A1"), CartanType::parse("A1+A1"));
}

TEST(CartanType, PrintThenParseIsIdentity)
{
    for (const char* t : {"E8", "E7+A1", "D5+A2", "A4+A3", "2A1", "D4+A1+A1", "G2+A1", "T"}) {
        auto a = CartanType::parse(t);
        EXPECT_EQ(CartanType::parse(a.str()), a) << t;
        EXPECT_TRUE(a.is_canonical()) << t;
    }
}

TEST(CartanType, RejectsBadInput)
{
    for (const char* t : {"E9", "E5", "X3", "A0", "G3", "A", "E6++A1", "A-1"})
        EXPECT_THROW(CartanType::parse(t), InputError) << t;
}

TEST(RootSystem, SmallCounts)
{
    RootSystem a2(CartanType::parse("A2"));
    EXPECT_EQ(a2.num_roots(), 6);
    EXPECT_EQ(a2.num_positive(), 3);
    RootSystem a11(CartanType::parse("A1+A1"));
    EXPECT_EQ(a11.num_roots(), 4);
    EXPECT_EQ(a11.component_of(0), 0);
    EXPECT_EQ(a11.component_of(1), 1);
    EXPECT_EQ(a11.inner(0, 1), 0);
}

TEST(RootSystem, MatchesClosureOracle)
{
    for (const char* t : {"A2", "A5", "D4", "D7", "G2", "E6", "E7", "E8", "A2+A1", "D5+A2"}) {
        RootSystem rs(CartanType::parse(t));
        oracle::BruteGroup bg(t, false);
        std::set<Root> mine(rs.roots().begin(), rs.roots().end());
        std::set<Root> theirs(bg.roots().begin(), bg.roots().end());
        EXPECT_EQ(mine, theirs) << t;
    }
    RootSystem e8(CartanType::parse("E8"));
    EXPECT_EQ(e8.num_roots(), 240);
    EXPECT_EQ(e8.num_positive(), 120);
}

TEST(RootSystem, OrderingAndNegatives)
{
    RootSystem rs(CartanType::parse("E7"));
    for (int i = 0; i < rs.rank(); ++i) {
        Root e(rs.rank(), 0);
        e[i] = 1;
        EXPECT_EQ(rs.root(i), e);
    }
    for (int k = 0; k + 1 < rs.num_positive(); ++k)
        EXPECT_LE(rs.height(k), rs.height(k + 1));
    for (int k = 0; k < rs.num_roots(); ++k) {
        Root neg = rs.root(k);
        for (int& x : neg)
            x = -x;
        EXPECT_EQ(rs.index_of(neg), rs.negative(k));
        EXPECT_EQ(rs.is_positive(k), k < rs.num_positive());
    }
}

TEST(RootSystem, Degrees)
{
    EXPECT_EQ(degrees(RootSystem(CartanType::parse("A2"))), (std::vector<int>{2, 3}));
    EXPECT_EQ(degrees(RootSystem(CartanType::parse("A1"))), (std::vector<int>{2}));
    EXPECT_EQ(degrees(RootSystem(CartanType::parse("E8"))), (std::vector<int>{2, 8, 12, 14, 18, 20, 24, 30}));
    // sum of (d_i - 1) counts the positive roots
    for (const char* t : {"A6", "D5", "D7", "G2", "E6", "E7", "E8", "E6+A2"}) {
        RootSystem rs(CartanType::parse(t));
        int s = 0;
        for (int d : degrees(rs))
            s += d - 1;
        EXPECT_EQ(s, rs.num_positive()) << t;
    }
}

TEST(RootSystem, SubsystemTypes)
{
    RootSystem e8(CartanType::parse("E8"));
    EXPECT_EQ(subsystem_type(e8, {1, 2, 3, 4, 5, 6, 7}).str(), "D7");
    EXPECT_EQ(subsystem_type(e8, {0, 1, 2, 3, 4, 5, 6}).str(), "E7");
    EXPECT_EQ(subsystem_type(e8, {0, 2, 3, 4, 5, 6, 7}).str(), "A7");
    EXPECT_EQ(subsystem_type(e8, {0, 1, 2, 3, 4, 6, 7}).str(), "D5+A2");
    EXPECT_EQ(subsystem_type(e8, {0, 1, 2, 3, 4, 5, 7}).str(), "E6+A1");
    EXPECT_TRUE(subsystem_type(e8, {}).is_torus());
    RootSystem a3(CartanType::parse("A3"));
    EXPECT_EQ(subsystem_type(a3, {0, 2}).str(), "A1+A1");
}

TEST(RootSystem, LayoutReproducesCartanMatrix)
{
    // the local Bourbaki numbering must carry the ambient Cartan entries
    RootSystem e8(CartanType::parse("E8"));
    for (unsigned mask = 0; mask < 256; mask += 7) {
        std::vector<int> subset;
        for (int i = 0; i < 8; ++i)
            if (mask >> i & 1)
                subset.push_back(i);
        auto lay = subsystem_layout(e8, subset);
        RootSystem local(lay.type);
        auto flat = lay.flat();
        ASSERT_EQ(static_cast<int>(flat.size()), local.rank());
        for (size_t i = 0; i < flat.size(); ++i)
            for (size_t j = 0; j < flat.size(); ++j)
                EXPECT_EQ(local.cartan_matrix()[i][j], e8.cartan_matrix()[flat[i]][flat[j]]);
    }
}

TEST(Levi, SmallCases)
{
    auto a2 = group("A2");
    auto l = levi_representatives(*a2);
    ASSERT_EQ(l.size(), 3u);
    EXPECT_EQ(l[0].name(), "T");
    EXPECT_EQ(l[1].name(), "A1");
    EXPECT_EQ(l[1].orbit_size, 2);
    EXPECT_EQ(l[2].name(), "A2");

    auto a11 = group("A1+A1");
    EXPECT_EQ(levi_representatives(*a11).size(), 4u);
}

TEST(Levi, E7HasRepeatedTypes)
{
    auto l = levi_representatives(*group("E7"));
    EXPECT_EQ(l.size(), 32u);
    int repeated = 0;
    for (const auto& c : l)
        if (c.same_type > 1)
            ++repeated;
    EXPECT_GT(repeated, 0);
    EXPECT_NO_THROW(find_levi(l, "A5#2"));
    EXPECT_THROW(find_levi(l, "A5"), InputError);
    EXPECT_EQ(levi_representatives(*group("E6")).size(), 17u);
}

TEST(Levi, MatchesBruteForceOrbits)
{
    for (const char* t : {"A3", "A4", "A5", "D4", "D5", "G2", "A2+A1", "A3+A1", "E6"}) {
        oracle::BruteGroup bg(t);
        auto orbits = bg.levi_orbits();
        std::map<int, int> sizes;
        for (int o : orbits)
            ++sizes[o];
        auto reps = levi_representatives(*group(t));
        EXPECT_EQ(reps.size(), sizes.size()) << t;
        std::set<int> hit;
        for (const auto& r : reps) {
            unsigned m = 0;
            for (int i : r.subset)
                m |= 1u << i;
            EXPECT_TRUE(hit.insert(orbits[m]).second) << t << " " << r.name();
            EXPECT_EQ(r.orbit_size, sizes[orbits[m]]) << t << " " << r.name();
            // representative is the least member of its orbit
            for (unsigned k = 0; k < orbits.size(); ++k)
                if (orbits[k] == orbits[m] && std::popcount(k) == std::popcount(m)) {
                    std::vector<int> s;
                    for (int i = 0; i < bg.rank(); ++i)
                        if (k >> i & 1)
                            s.push_back(i);
                    EXPECT_LE(r.subset, s) << t;
                }
        }
    }
}
