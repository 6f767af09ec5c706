#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "common.hpp"
#include "oracles.hpp"
#include "weylstrata/error.hpp"
#include "weylstrata/selftest.hpp"

using namespace weylstrata;
using testing_support::ctx;
using testing_support::workspace;

TEST(FakeDegree, Examples)
{
    const auto& a2 = ctx("A2");
    FakeDegrees fd(a2.group(), a2.table());
    EXPECT_EQ(fd.fake_degree(a2.table().trivial()), (IntPoly{1}));
    EXPECT_EQ(fd.fake_degree(a2.table().sign()), (IntPoly{0, 0, 0, 1}));
    EXPECT_EQ(fd.fake_degree(a2.table().lookup(IrrepLabel::parse("2_1"))), (IntPoly{0, 1, 1}));

    const auto& e7 = ctx("E7");
    FakeDegrees f7(e7.group(), e7.table());
    IntPoly top(64, 0);
    top[63] = 1;
    EXPECT_EQ(f7.fake_degree(e7.table().sign()), top);
}

TEST(FakeDegree, TypeAMatchesHookFormula)
{
    for (int m = 2; m <= 7; ++m) {
        auto g = testing_support::group("A" + std::to_string(m - 1));
        auto t = symmetric_table(m);
        FakeDegrees fd(*g, t);
        std::multiset<std::pair<std::pair<int64_t, int>, IntPoly>> mine, theirs;
        for (int chi = 0; chi < static_cast<int>(t.irreps().size()); ++chi)
            mine.insert({{t.dim(chi), t.label(chi).b()}, fd.fake_degree(chi)});
        for (const auto& e : oracle::type_a_fake_degrees(m))
            theirs.insert({{e.dim, e.b}, IntPoly(e.poly.begin(), e.poly.end())});
        EXPECT_EQ(mine, theirs) << m;
    }
}

TEST(FakeDegree, BInvariants)
{
    EXPECT_EQ(IrrepLabel::parse("1_0").b(), 0);
    const auto& e6 = ctx("E6");
    EXPECT_EQ(b_invariant(e6.table(), e6.table().lookup(IrrepLabel::parse("15_16"))), 16);
    const auto& e8 = ctx("E8");
    int chi = e8.table().lookup(IrrepLabel::parse("1344_38"));
    EXPECT_EQ(b_invariant(e8.table(), chi), 38);
    FakeDegrees fd(e8.group(), e8.table());
    EXPECT_EQ(lowest_power(fd.fake_degree(chi)), 38);
}

TEST(FakeDegree, CertificationCatchesWrongLabel)
{
    auto g = testing_support::group("A2");
    auto t = load_character_table("WCT 1\nTYPE A2\nORDER 6\nCLASSES 3\n"
                                  "C 111 1 1\nC 21 3 2 1\nC 3 2 3 1 2\n"
                                  "I 1_3 1 -1 1\nI 2_2 2 0 -1\nI 1_0 1 1 1\n");
    FakeDegrees fd(*g, t);
    EXPECT_NO_THROW(certify_b(t, fd, 0));
    try {
        certify_b(t, fd, 1);
        FAIL();
    } catch (const DataError& e) {
        EXPECT_NE(std::string(e.what()).find("2_2"), std::string::npos);
    }
}

TEST(FakeDegree, MassIdentity)
{
    auto r = check_mass_identity(workspace(), {"A6", "D5", "D6", "G2", "E7", "D4+A1"});
    EXPECT_TRUE(r.pass) << r.detail;
}

TEST(JInduction, Degenerate)
{
    for (const char* t : {"A2", "D4", "E6"}) {
        const auto& c = ctx(t);
        auto full = c.levis().back();
        ASSERT_TRUE(full.is_full(c.root_system().rank()));
        for (int chi = 0; chi < static_cast<int>(c.table().irreps().size()); ++chi) {
            const auto& d = c.levi_data(full.subset);
            EXPECT_EQ(c.table().label(c.j_induce(full.subset, chi)), d.emb.table_L.label(chi)) << t;
        }
        EXPECT_EQ(c.j_induce({}, 0), c.table().trivial()) << t;
    }
}

TEST(JInduction, A1InA2)
{
    const auto& a2 = ctx("A2");
    const auto& levi = a2.levi("A1");
    int sign = a2.levi_data(levi.subset).emb.table_L.lookup(IrrepLabel::parse("1_1"));
    EXPECT_EQ(a2.table().label(a2.j_induce(levi.subset, sign)).str(), "2_1");
}

TEST(JInduction, Transitivity)
{
    auto a2 = CartanType::parse("A2");
    auto r = check_transitivity(workspace(), a2, {0}, {}, 0);
    EXPECT_EQ(r.direct.str(), "1_0");
    EXPECT_TRUE(r.agree());

    auto a3 = CartanType::parse("A3");
    const auto& l = ctx("A3").levi_data({0}).emb.table_L;
    auto s = check_transitivity(workspace(), a3, {0, 1}, {0}, l.sign());
    EXPECT_EQ(s.middle.str(), "2_1");
    EXPECT_TRUE(s.agree()) << s.direct.str() << " " << s.via.str();

    std::mt19937_64 rng(99);
    for (const char* t : {"E6", "D6", "E7"}) {
        auto g = CartanType::parse(t);
        const int rank = g.rank();
        for (int i = 0; i < 6; ++i) {
            std::vector<int> m, sub;
            for (int x = 0; x < rank; ++x)
                if (rng() % 4 != 0) {
                    m.push_back(x);
                    if (rng() % 2)
                        sub.push_back(x);
                }
            const auto& tl = ctx(t).levi_data(sub).emb.table_L;
            int chi = static_cast<int>(rng() % tl.irreps().size());
            auto res = check_transitivity(workspace(), g, m, sub, chi);
            EXPECT_TRUE(res.agree()) << t << " " << tl.label(chi).str();
        }
    }
}

TEST(JInduction, TypeAMatchesEnumeration)
{
    for (int n = 2; n <= 5; ++n) {
        auto oracle_j = oracle::type_a_j_enumeration(n);
        EXPECT_TRUE(oracle_j.errors.empty()) << n;
        const auto& c = ctx("A" + std::to_string(n));
        for (const auto& levi : c.levis()) {
            const auto& d = c.levi_data(levi.subset);
            unsigned mask = 0;
            for (int i : levi.subset)
                mask |= 1u << i;
            // order the component labels left to right along the diagram
            std::vector<int> order(d.emb.layout.components.size());
            std::iota(order.begin(), order.end(), 0);
            std::sort(order.begin(), order.end(), [&](int a, int b) {
                return *std::min_element(d.emb.layout.components[a].begin(), d.emb.layout.components[a].end()) <
                       *std::min_element(d.emb.layout.components[b].begin(), d.emb.layout.components[b].end());
            });
            for (int chi = 0; chi < static_cast<int>(d.emb.table_L.irreps().size()); ++chi) {
                const auto& parts = d.emb.table_L.label(chi).parts();
                std::vector<std::string> key;
                for (int k : order)
                    key.push_back(IrrepLabel(parts[k].dim, parts[k].b, parts[k].marks).str());
                if (levi.subset.empty())
                    key.clear();
                auto it = oracle_j.j.find({mask, key});
                ASSERT_NE(it, oracle_j.j.end()) << n << " " << levi.name();
                EXPECT_EQ(c.table().label(c.j_induce(levi.subset, chi)).str(), it->second)
                    << n << " " << levi.name() << " " << d.emb.table_L.label(chi).str();
            }
        }
    }
}
