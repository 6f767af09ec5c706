#include "weylstrata/cli.hpp"

#include <algorithm>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "weylstrata/error.hpp"
#include "weylstrata/selftest.hpp"
#include "weylstrata/strata.hpp"

namespace weylstrata::cli {

namespace {

enum class Format { text, tsv };

struct Options {
    Format format = Format::text;
    std::string data;
    std::string type;
    std::string levi;
    std::string irrep;
    bool as_classes = false;
    bool per_char = false;
    bool deep = false;
    int characteristic = 0;
};

std::string join(const std::vector<std::string>& v, const std::string& sep)
{
    std::string s;
    for (size_t i = 0; i < v.size(); ++i)
        s += (i ? sep : "") + v[i];
    return s;
}

std::vector<std::string> strs(const LabelSet& s)
{
    std::vector<std::string> out;
    for (const auto& l : listing_order(s))
        out.push_back(l.str());
    return out;
}

std::string subset_str(const std::vector<int>& s)
{
    std::vector<std::string> v;
    for (int i : s)
        v.push_back(std::to_string(i + 1));
    return v.empty() ? "-" : join(v, ",");
}

void print_set(std::ostream& out, const Options& o, const LabelSet& s)
{
    if (o.format == Format::tsv)
        for (const auto& l : strs(s))
            out << l << '\n';
    else
        out << join(strs(s), " ") << '\n';
}

int cmd_info(Workspace& ws, const Options& o, std::ostream& out)
{
    auto t = CartanType::parse(o.type);
    const auto& ctx = ws.context(t);
    std::vector<std::string> degs;
    for (int d : degrees(ctx.root_system()))
        degs.push_back(std::to_string(d));
    std::vector<std::pair<std::string, std::string>> rows{
        {"type", t.str()},
        {"rank", std::to_string(t.rank())},
        {"order", ctx.table().order().str()},
        {"classes", std::to_string(ctx.table().num_classes())},
        {"irreps", std::to_string(ctx.table().irreps().size())},
        {"degrees", degs.empty() ? "-" : join(degs, " ")},
        {"positive_roots", std::to_string(ctx.root_system().num_positive())},
    };
    for (const auto& [k, v] : rows)
        out << k << (o.format == Format::tsv ? "\t" : ": ") << v << '\n';
    return 0;
}

int cmd_levis(Workspace& ws, const Options& o, std::ostream& out)
{
    auto t = CartanType::parse(o.type);
    const auto& ctx = ws.context(t);
    if (o.format == Format::text)
        out << "name\tsubset\torbit\n";
    for (const auto& l : ctx.levis())
        out << l.name() << '\t' << subset_str(l.subset) << '\t' << l.orbit_size << '\n';
    return 0;
}

int cmd_jind(Workspace& ws, const Options& o, std::ostream& out)
{
    auto t = CartanType::parse(o.type);
    const auto& ctx = ws.context(t);
    const auto& levi = ctx.levi(o.levi);
    const auto& data = ctx.levi_data(levi.subset);
    int chi = data.emb.table_L.lookup(IrrepLabel::parse(o.irrep));
    out << ctx.table().label(ctx.j_induce(levi.subset, chi)).str() << '\n';
    return 0;
}

int cmd_strata(Workspace& ws, const Options& o, std::ostream& out)
{
    auto t = CartanType::parse(o.type);
    auto s = strata_labels(ws, t);
    for (const auto& l : listing_order(s.labels())) {
        std::vector<std::string> chars;
        for (int r : s.provenance.at(l))
            chars.push_back(std::to_string(r));
        out << l.str() << (o.format == Format::tsv ? "\t" : "  ") << join(chars, ",") << '\n';
    }
    return 0;
}

int cmd_rigid(Workspace& ws, const Options& o, std::ostream& out, std::ostream& err)
{
    auto t = CartanType::parse(o.type);
    if (!o.per_char) {
        auto rig = rigid_strata(ws, t);
        if (!o.as_classes) {
            print_set(out, o, rig);
            return 0;
        }
        auto names = strata_to_classes(ws, t, rig);
        if (o.format == Format::tsv) {
            const auto& map = ws.class_map(t);
            for (const auto& [label, name] : map.entries)
                if (rig.count(label))
                    out << label.str() << '\t' << name << '\n';
        } else {
            out << join(names, " ") << '\n';
        }
        return 0;
    }

    auto u = rigid_union_check(ws, t);
    const bool tsv = o.format == Format::tsv;
    auto line = [&](const std::string& key, const std::string& value) {
        out << key << (tsv ? "\t" : ": ") << value << '\n';
    };
    line("rigid", join(strs(u.rigid), " "));
    for (const auto& [r, s] : u.per_char)
        line("char " + std::to_string(r), join(strs(s), " "));
    line("union", u.holds ? "holds" : "FAILS");
    int rc = u.holds ? 0 : 1;
    if (t == CartanType::parse("E8")) {
        auto x = extra_label_check(ws, t, 2);
        line("extra over char 2", join(strs(x.extra), " "));
        line("extra single", x.single ? "yes" : "no");
        line("extra never induced", x.never_induced ? "yes" : "no");
        for (const auto& off : x.offenders)
            err << "induced: " << off << '\n';
        if (!x.holds())
            rc = 1;
    }
    return rc;
}

int cmd_unipotent(Workspace& ws, const Options& o, std::ostream& out)
{
    auto t = CartanType::parse(o.type);
    print_set(out, o, rigid_unipotent(ws, t, o.characteristic));
    return 0;
}

int cmd_selftest(Workspace& ws, const Options& o, std::ostream& out)
{
    auto results = run_selftest(ws, o.deep);
    bool all = true;
    for (const auto& r : results) {
        all = all && r.pass;
        if (o.format == Format::tsv)
            out << (r.pass ? "PASS" : "FAIL") << '\t' << r.name << '\t' << r.detail << '\n';
        else
            out << (r.pass ? "PASS " : "FAIL ") << r.name << " (" << r.detail << ")\n";
    }
    return all ? 0 : 1;
}

} // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err)
{
    Options o;
    CLI::App app{"Weyl group strata and j-induction", "weylstrata"};
    app.require_subcommand(1);
    std::string format = "text";
    app.add_option("--format", format, "output format: text or tsv")
        ->check(CLI::IsMember({"text", "tsv"}))
        ->capture_default_str();
    app.add_option("--data", o.data, "data directory (default: $WEYLSTRATA_DATA or the bundled data)");

    auto type_arg = [&](CLI::App* sub) {
        sub->add_option("type", o.type, "Cartan type, e.g. E8, D5+A2, T")->required();
        sub->fallthrough();
        return sub;
    };
    auto* info = type_arg(app.add_subcommand("info", "order, classes, irreps, degrees, positive roots"));
    auto* levis = type_arg(app.add_subcommand("levis", "Levi classes with tags"));
    auto* jind = type_arg(app.add_subcommand("jind", "j-induce an irrep of a Levi"));
    jind->add_option("--levi", o.levi, "Levi name as printed by `levis`")->required();
    jind->add_option("--irrep", o.irrep, "irrep label of the Levi")->required();
    auto* strata = type_arg(app.add_subcommand("strata", "strata labels with characteristics"));
    auto* rigid = type_arg(app.add_subcommand("rigid", "rigid strata"));
    rigid->add_flag("--as-classes", o.as_classes, "print Weyl-group class names");
    rigid->add_flag("--per-char", o.per_char, "per-characteristic rigid unipotent sets and checks");
    auto* unip = type_arg(app.add_subcommand("unipotent-rigid", "rigid unipotent labels in one characteristic"));
    unip->add_option("--char", o.characteristic, "characteristic (0 or a prime)")->capture_default_str();
    auto* selftest = app.add_subcommand("selftest", "invariant suite");
    selftest->add_flag("--deep", o.deep, "certify every E8 irrep");
    selftest->fallthrough();

    try {
        std::vector<std::string> rev(args.rbegin(), args.rend());
        app.parse(rev);
    } catch (const CLI::ParseError& e) {
        if (e.get_exit_code() == 0) {
            out << (dynamic_cast<const CLI::CallForAllHelp*>(&e) ? app.help("", CLI::AppFormatMode::All) : app.help());
            return 0;
        }
        err << "error: " << e.what() << "\n\n" << app.help();
        return 2;
    }
    o.format = format == "tsv" ? Format::tsv : Format::text;

    try {
        Workspace ws(o.data.empty() ? Workspace::default_data_dir() : std::filesystem::path(o.data));
        if (info->parsed())
            return cmd_info(ws, o, out);
        if (levis->parsed())
            return cmd_levis(ws, o, out);
        if (jind->parsed())
            return cmd_jind(ws, o, out);
        if (strata->parsed())
            return cmd_strata(ws, o, out);
        if (rigid->parsed())
            return cmd_rigid(ws, o, out, err);
        if (unip->parsed())
            return cmd_unipotent(ws, o, out);
        if (selftest->parsed())
            return cmd_selftest(ws, o, out);
    } catch (const InputError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    return 2;
}

} // namespace weylstrata::cli
