#include <gtest/gtest.h>

#include "common.hpp"
#include "oracles.hpp"
#include "weylstrata/error.hpp"
#include "weylstrata/strata.hpp"

using namespace weylstrata;
using testing_support::ctx;
using testing_support::workspace;

namespace {

CartanType T(const char* s) { return CartanType::parse(s); }

LabelSet labels(std::initializer_list<const char*> names)
{
    LabelSet s;
    for (const char* n : names)
        s.insert(IrrepLabel::parse(n));
    return s;
}

LabelSet image(const char* type, int r) { return springer_image(workspace(), T(type), r).labels; }

const LabelSet kE6Rigid = labels({"1_36", "6_25", "15_16", "10_9"});
const LabelSet kE7Rigid =
    labels({"1_63", "7_46", "27_37", "35_31", "15_28", "189_22", "70_18", "280_17", "84_15"});

} // namespace

TEST(SpiFormat, Parses)
{
    auto f = parse_springer_file("# c\nSPI 1\nTYPE E6\nCHAR 2\nCOUNT 2\n1_0 E6\n1_36 1\n");
    EXPECT_EQ(f.type_text, "E6");
    EXPECT_EQ(f.characteristic, 2);
    ASSERT_EQ(f.entries.size(), 2u);
    EXPECT_EQ(f.entries[1].first.str(), "1_36");
    auto rule = parse_springer_file("SPI 1\nTYPE A\nCHAR any\nCOUNT all\n");
    EXPECT_TRUE(rule.all);
    EXPECT_FALSE(rule.characteristic);
    EXPECT_THROW(parse_springer_file("SPI 1\nTYPE E6\nCHAR 2\nCOUNT 3\n1_0\n"), ParseError);
    EXPECT_THROW(parse_springer_file("SPX 1\n"), ParseError);
    EXPECT_THROW(parse_springer_file("SPI 1\nTYPE E6\nCHAR 4\nCOUNT 0\n"), ParseError);
}

TEST(ScmFormat, Parses)
{
    auto m = parse_class_map("SCM 1\nTYPE E6\nCOUNT 2\n1_36 A_0\n6_25 A_1\n");
    ASSERT_EQ(m.entries.size(), 2u);
    ASSERT_NE(m.find(IrrepLabel::parse("6_25")), nullptr);
    EXPECT_EQ(*m.find(IrrepLabel::parse("6_25")), "A_1");
    EXPECT_EQ(m.find(IrrepLabel::parse("1_0")), nullptr);
    EXPECT_THROW(parse_class_map("SCM 1\nTYPE E6\nCOUNT 2\n1_36 A_0\n1_36 A_1\n"), Error);
}

TEST(SpringerImage, TypeAIsEverything)
{
    for (int n = 1; n <= 8; ++n)
        for (int r : {0, 2, 3, 5}) {
            auto name = "A" + std::to_string(n);
            EXPECT_EQ(springer_image(workspace(), T(name.c_str()), r).labels.size(),
                      ctx(name).table().irreps().size());
        }
}

TEST(SpringerImage, Examples)
{
    EXPECT_TRUE(image("E6", 0).count(IrrepLabel::parse("1_36")));
    LabelSet diff;
    auto c2 = image("E8", 2);
    for (const auto& l : image("E8", 3))
        if (!c2.count(l))
            diff.insert(l);
    EXPECT_EQ(diff.size(), 1u);
    // images never exceed the irreps and always contain trivial and sign
    for (const char* t : {"D4", "D5", "D6", "D7", "G2", "E6", "E7", "E8"})
        for (int r : workspace().characteristics(T(t))) {
            const auto& tab = ctx(t).table();
            auto im = image(t, r);
            EXPECT_TRUE(im.count(tab.label(tab.sign()))) << t << r;
            EXPECT_TRUE(im.count(tab.label(tab.trivial()))) << t << r;
            for (const auto& l : im)
                EXPECT_GE(tab.find(l), 0);
        }
    EXPECT_THROW(springer_image(workspace(), T("F4"), 0), Unsupported);
    EXPECT_THROW(springer_image(workspace(), T("E6"), 7), Unsupported);
}

TEST(StrataLabels, Reductions)
{
    auto e8 = strata_labels(workspace(), T("E8"));
    auto c2 = image("E8", 2);
    EXPECT_EQ(e8.size(), c2.size() + 1);
    for (const auto& l : c2)
        EXPECT_TRUE(e8.provenance.count(l));
    EXPECT_EQ(strata_labels(workspace(), T("E6")).labels(), image("E6", 2));
    EXPECT_EQ(strata_labels(workspace(), T("E7")).labels(), image("E7", 2));
    EXPECT_EQ(strata_labels(workspace(), T("G2")).labels(), image("G2", 3));
    for (const auto& [l, chars] : e8.provenance)
        EXPECT_FALSE(chars.empty()) << l.str();
}

TEST(LeviStrata, Examples)
{
    const auto& e8 = ctx("E8");
    EXPECT_EQ(levi_strata_labels(workspace(), T("E8"), e8.levi("T")).labels(), labels({"1_0"}));
    EXPECT_EQ(levi_strata_labels(workspace(), T("E8"), e8.levi("A4+A3")).size(), 35u);
    EXPECT_EQ(levi_strata_labels(workspace(), T("E8"), e8.levi("E7")).labels(), image("E7", 2));
}

TEST(Rigid, E6AndE7)
{
    EXPECT_EQ(rigid_strata(workspace(), T("E6")), kE6Rigid);
    EXPECT_EQ(rigid_strata(workspace(), T("E7")), kE7Rigid);
}

TEST(Rigid, E8ContainsPublishedLabels)
{
    auto rig = rigid_strata(workspace(), T("E8"));
    for (const char* l : {"1_120", "8_91", "35_74", "84_64", "50_56", "210_52", "560_47", "400_43", "448_39",
                          "1344_38", "175_36", "1050_34", "972_32", "1400_29", "840_26", "168_24", "420_20",
                          "1344_19", "2016_19", "840_14", "175_12"})
        EXPECT_TRUE(rig.count(IrrepLabel::parse(l))) << l;
}

TEST(Rigid, TypeAIsSignOnly)
{
    for (int n = 1; n <= 6; ++n) {
        auto name = "A" + std::to_string(n);
        const auto& tab = ctx(name).table();
        auto rig = rigid_strata(workspace(), T(name.c_str()));
        EXPECT_EQ(rig, LabelSet{tab.label(tab.sign())}) << name;
        EXPECT_EQ(rigid_unipotent(workspace(), T(name.c_str()), 0), rig) << name;
        auto brute = oracle::type_a_j_enumeration(n);
        EXPECT_TRUE(brute.errors.empty());
        EXPECT_EQ(brute.rigid, std::set<std::string>{tab.label(tab.sign()).str()}) << name;
    }
}

TEST(Rigid, SignAndTorus)
{
    EXPECT_EQ(rigid_strata(workspace(), T("T")), labels({"1_0"}));
    for (const char* t : {"A1", "D4", "D5", "G2", "E6", "A2+A1", "D4+A1"}) {
        const auto& tab = ctx(t).table();
        auto rig = rigid_strata(workspace(), T(t));
        EXPECT_TRUE(rig.count(tab.label(tab.sign()))) << t;
        auto all = strata_labels(workspace(), T(t)).labels();
        for (const auto& l : rig)
            EXPECT_TRUE(all.count(l)) << t;
        for (int r : workspace().characteristics(T(t)))
            EXPECT_TRUE(rigid_unipotent(workspace(), T(t), r).count(tab.label(tab.sign()))) << t << r;
    }
}

TEST(Rigid, UnionIdentity)
{
    for (const char* t : {"D4", "D5", "D6", "G2", "E6", "E7"}) {
        auto u = rigid_union_check(workspace(), T(t));
        EXPECT_TRUE(u.holds) << t;
    }
    auto e6 = rigid_union_check(workspace(), T("E6"));
    for (const auto& l : e6.per_char.at(0))
        EXPECT_TRUE(e6.rigid.count(l));
}

TEST(InduceStratum, Examples)
{
    const auto& e6 = ctx("E6");
    auto ambient = T("E6");
    for (const auto& l : strata_labels(workspace(), ambient).labels())
        EXPECT_EQ(induce_stratum(workspace(), ambient, e6.levi("E6"), l), l);
    EXPECT_EQ(induce_stratum(workspace(), ambient, e6.levi("T"), IrrepLabel::parse("1_0")).str(), "1_0");
    for (const auto& levi : e6.levis()) {
        if (levi.is_full(6))
            continue;
        for (const auto& l : levi_strata_labels(workspace(), ambient, levi).labels())
            EXPECT_NE(induce_stratum(workspace(), ambient, levi, l).str(), "15_16") << levi.name();
    }
    EXPECT_THROW(induce_stratum(workspace(), ambient, e6.levi("A1"), IrrepLabel::parse("2_1")), InputError);
}

TEST(StrataToClasses, Examples)
{
    EXPECT_EQ(strata_to_classes(workspace(), T("E6"), kE6Rigid),
              (std::vector<std::string>{"A_0", "A_1", "3A_1", "2A_2A_1"}));
    auto e7 = strata_to_classes(workspace(), T("E7"), kE7Rigid);
    EXPECT_EQ(e7.size(), 9u);
    EXPECT_NE(std::find(e7.begin(), e7.end(), "(A_3+A_1)''"), e7.end());
    EXPECT_THROW(strata_to_classes(workspace(), T("E6"), labels({"20_2"})), DataError);
    EXPECT_THROW(strata_to_classes(workspace(), T("D5"), labels({"1_20"})), Unsupported);
}
