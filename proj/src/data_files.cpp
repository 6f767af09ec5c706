#include "weylstrata/data_files.hpp"

#include <fstream>
#include <set>
#include <sstream>

#include "weylstrata/error.hpp"

namespace weylstrata {

namespace {

struct Lines {
    std::istringstream in;
    int lineno = 0;

    explicit Lines(std::string_view text) : in(std::string(text)) {}

    // next non-empty line as tokens, comments stripped
    bool next(std::vector<std::string>& tok)
    {
        std::string raw;
        while (std::getline(in, raw)) {
            ++lineno;
            auto hash = raw.find('#');
            if (hash != std::string::npos)
                raw.erase(hash);
            std::istringstream ls(raw);
            tok.clear();
            for (std::string t; ls >> t;)
                tok.push_back(t);
            if (!tok.empty())
                return true;
        }
        return false;
    }

    std::vector<std::string> expect(const std::string& key, const std::string& what)
    {
        std::vector<std::string> tok;
        if (!next(tok) || tok.size() != 2 || tok[0] != key)
            throw ParseError("expected '" + what + "'", lineno);
        return tok;
    }
};

int parse_count(const std::string& s, int line)
{
    try {
        size_t used = 0;
        int v = std::stoi(s, &used);
        if (used != s.size() || v < 0)
            throw ParseError("bad count '" + s + "'", line);
        return v;
    } catch (const ParseError&) {
        throw;
    } catch (const std::exception&) {
        throw ParseError("bad count '" + s + "'", line);
    }
}

IrrepLabel parse_label(const std::string& s, int line)
{
    try {
        return IrrepLabel::parse(s);
    } catch (const InputError& e) {
        throw ParseError(e.what(), line);
    }
}

} // namespace

SpringerFile parse_springer_file(std::string_view text)
{
    Lines in(text);
    SpringerFile f;
    auto magic = in.expect("SPI", "SPI 1");
    if (magic[1] != "1")
        throw ParseError("unsupported SPI version " + magic[1], in.lineno);
    f.type_text = in.expect("TYPE", "TYPE <type>")[1];
    auto ch = in.expect("CHAR", "CHAR <r>")[1];
    if (ch != "any") {
        int r = parse_count(ch, in.lineno);
        if (r != 0 && r < 2)
            throw ParseError("characteristic must be 0 or a prime", in.lineno);
        for (int d = 2; d * d <= r; ++d)
            if (r % d == 0)
                throw ParseError("characteristic must be 0 or a prime", in.lineno);
        f.characteristic = r;
    }
    auto cnt = in.expect("COUNT", "COUNT <k>")[1];
    std::vector<std::string> tok;
    if (cnt == "all") {
        f.all = true;
        if (in.next(tok))
            throw ParseError("COUNT all takes no entries", in.lineno);
        return f;
    }
    int k = parse_count(cnt, in.lineno);
    std::set<IrrepLabel> seen;
    while (in.next(tok)) {
        if (tok.size() > 2)
            throw ParseError("expected '<label> [<class>]'", in.lineno);
        auto label = parse_label(tok[0], in.lineno);
        if (!seen.insert(label).second)
            throw ParseError("duplicate label " + tok[0], in.lineno);
        f.entries.emplace_back(label, tok.size() == 2 ? tok[1] : std::string());
    }
    if (static_cast<int>(f.entries.size()) != k)
        throw ParseError("COUNT says " + std::to_string(k) + " entries, found " + std::to_string(f.entries.size()),
                         in.lineno);
    return f;
}

const std::string* StrataClassMap::find(const IrrepLabel& label) const
{
    for (const auto& [l, name] : entries)
        if (l == label)
            return &name;
    return nullptr;
}

StrataClassMap parse_class_map(std::string_view text)
{
    Lines in(text);
    StrataClassMap m;
    auto magic = in.expect("SCM", "SCM 1");
    if (magic[1] != "1")
        throw ParseError("unsupported SCM version " + magic[1], in.lineno);
    try {
        m.type = CartanType::parse(in.expect("TYPE", "TYPE <type>")[1]);
    } catch (const InputError& e) {
        throw ParseError(e.what(), in.lineno);
    }
    int k = parse_count(in.expect("COUNT", "COUNT <k>")[1], in.lineno);
    std::set<IrrepLabel> labels;
    std::set<std::string> names;
    std::vector<std::string> tok;
    while (in.next(tok)) {
        if (tok.size() != 2)
            throw ParseError("expected '<label> <class>'", in.lineno);
        auto label = parse_label(tok[0], in.lineno);
        if (!labels.insert(label).second)
            throw ParseError("duplicate label " + tok[0], in.lineno);
        if (!names.insert(tok[1]).second)
            throw ParseError("class " + tok[1] + " assigned twice", in.lineno);
        m.entries.emplace_back(label, tok[1]);
    }
    if (static_cast<int>(m.entries.size()) != k)
        throw ParseError("COUNT says " + std::to_string(k) + " entries, found " + std::to_string(m.entries.size()),
                         in.lineno);
    return m;
}

std::string read_file(const std::string& path)
{
    std::ifstream f(path, std::ios::binary);
    if (!f)
        throw Unsupported("cannot open data file " + path);
    std::ostringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

} // namespace weylstrata
