#include <gtest/gtest.h>

#include <sstream>

#include "weylstrata/character_table.hpp"
#include "weylstrata/cli.hpp"

using weylstrata::cli::run;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result call(std::vector<std::string> args)
{
    args.insert(args.begin(), {"--data", WEYLSTRATA_TEST_DATA});
    std::ostringstream out, err;
    int code = run(args, out, err);
    return {code, out.str(), err.str()};
}

std::vector<std::string> lines(const std::string& s)
{
    std::vector<std::string> v;
    std::istringstream in(s);
    for (std::string l; std::getline(in, l);)
        v.push_back(l);
    return v;
}

} // namespace

TEST(Cli, RigidTsv)
{
    auto r = call({"rigid", "E6", "--format", "tsv"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(lines(r.out), (std::vector<std::string>{"1_36", "6_25", "15_16", "10_9"}));
}

TEST(Cli, RigidText)
{
    auto r = call({"rigid", "E6"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1_36 6_25 15_16 10_9\n");
    auto c = call({"rigid", "E6", "--as-classes"});
    EXPECT_EQ(c.code, 0);
    EXPECT_EQ(c.out, "A_0 A_1 3A_1 2A_2A_1\n");
    auto t = call({"--format", "tsv", "rigid", "E6", "--as-classes"});
    EXPECT_EQ(lines(t.out).front(), "1_36\tA_0");
}

TEST(Cli, Jind)
{
    auto r = call({"jind", "A2", "--levi", "A1", "--irrep", "1_1"});
    EXPECT_EQ(r.code, 0) << r.err;
    EXPECT_EQ(r.out, "2_1\n");
    auto full = call({"jind", "E6", "--levi", "E6", "--irrep", "15_16"});
    EXPECT_EQ(full.out, "15_16\n");
}

TEST(Cli, Info)
{
    auto r = call({"info", "A2"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("order: 6"), std::string::npos);
    EXPECT_NE(r.out.find("degrees: 2 3"), std::string::npos);
    EXPECT_NE(r.out.find("positive_roots: 3"), std::string::npos);
    auto e8 = call({"info", "E8", "--format", "tsv"});
    EXPECT_NE(e8.out.find("order\t696729600"), std::string::npos);
    EXPECT_NE(e8.out.find("classes\t112"), std::string::npos);
}

TEST(Cli, LevisAndStrata)
{
    auto r = call({"levis", "A2", "--format", "tsv"});
    EXPECT_EQ(lines(r.out), (std::vector<std::string>{"T\t-\t1", "A1\t1\t2", "A2\t1,2\t1"}));
    auto s = call({"strata", "G2", "--format", "tsv"});
    EXPECT_EQ(s.code, 0);
    EXPECT_EQ(lines(s.out).front(), "1_6\t0,2,3,5");
}

TEST(Cli, TsvLabelsParseBack)
{
    auto s = call({"strata", "E7", "--format", "tsv"});
    for (const auto& l : lines(s.out))
        EXPECT_NO_THROW(weylstrata::IrrepLabel::parse(l.substr(0, l.find('\t')))) << l;
}

TEST(Cli, PerChar)
{
    auto r = call({"rigid", "E6", "--per-char"});
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("union: holds"), std::string::npos);
    EXPECT_NE(r.out.find("char 2: "), std::string::npos);
}

TEST(Cli, UsageErrors)
{
    EXPECT_EQ(call({}).code, 2);
    EXPECT_EQ(call({"frobnicate", "E6"}).code, 2);
    EXPECT_EQ(call({"rigid", "E6", "--bogus"}).code, 2);
    EXPECT_EQ(call({"rigid"}).code, 2);
    EXPECT_EQ(call({"rigid", "E6", "--format", "xml"}).code, 2);
    EXPECT_EQ(call({"jind", "A2", "--levi", "A1"}).code, 2);
    auto bad = call({"info", "E9"});
    EXPECT_EQ(bad.code, 2);
    EXPECT_NE(bad.err.find("E9"), std::string::npos);
    auto label = call({"jind", "A2", "--levi", "A1", "--irrep", "1_7"});
    EXPECT_EQ(label.code, 2);
    EXPECT_NE(label.err.find("1_7"), std::string::npos);
    EXPECT_EQ(call({"--help"}).code, 0);
}

TEST(Cli, ComputationalErrors)
{
    auto f4 = call({"rigid", "F4"});
    EXPECT_EQ(f4.code, 1);
    EXPECT_FALSE(f4.err.empty());
    std::ostringstream out, err;
    EXPECT_EQ(run({"--data", "/nonexistent", "info", "E6"}, out, err), 1);
    EXPECT_EQ(out.str(), "");
    auto ch = call({"unipotent-rigid", "E6", "--char", "7"});
    EXPECT_EQ(ch.code, 1);
}

TEST(Cli, Unipotent)
{
    auto r = call({"unipotent-rigid", "A4", "--char", "0"});
    EXPECT_EQ(r.code, 0);
    EXPECT_EQ(r.out, "1_10\n");
}
