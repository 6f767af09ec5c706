#include "weylstrata/character_table.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include "weylstrata/error.hpp"
#include "weylstrata/perm_group.hpp"

namespace weylstrata {

namespace {

constexpr std::string_view kTensor = "\xE2\x8A\x97"; // U+2297

LabelPart parse_part(std::string_view s)
{
    auto fail = [&] { return InputError("malformed irrep label '" + std::string(s) + "'"); };
    size_t us = s.find('_');
    if (us == std::string_view::npos || us == 0)
        throw fail();
    size_t end = s.size();
    int marks = 0;
    while (end > us + 1 && s[end - 1] == '\'') {
        --end;
        ++marks;
    }
    auto digits = [](std::string_view d) {
        return !d.empty() && d.size() < 12 &&
               std::all_of(d.begin(), d.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    };
    std::string_view ds = s.substr(0, us), bs = s.substr(us + 1, end - us - 1);
    if (!digits(ds) || !digits(bs))
        throw fail();
    LabelPart p{std::stoll(std::string(ds)), std::stoi(std::string(bs)), marks};
    if (p.dim < 1)
        throw fail();
    return p;
}

} // namespace

// ------------------------------------------------------------------ labels

IrrepLabel IrrepLabel::parse(std::string_view text)
{
    std::string s(text);
    for (size_t pos; (pos = s.find(kTensor)) != std::string::npos;)
        s.replace(pos, kTensor.size(), "*");
    IrrepLabel out;
    out.parts_.clear();
    size_t start = 0;
    while (true) {
        size_t star = s.find('*', start);
        out.parts_.push_back(parse_part(std::string_view(s).substr(start, star - start)));
        if (star == std::string::npos)
            break;
        start = star + 1;
    }
    return out;
}

IrrepLabel IrrepLabel::product(const std::vector<IrrepLabel>& factors)
{
    IrrepLabel out;
    if (factors.empty())
        return out;
    out.parts_.clear();
    for (const auto& f : factors)
        out.parts_.insert(out.parts_.end(), f.parts_.begin(), f.parts_.end());
    return out;
}

int64_t IrrepLabel::dim() const
{
    int64_t d = 1;
    for (const auto& p : parts_)
        d *= p.dim;
    return d;
}

int IrrepLabel::b() const
{
    int b = 0;
    for (const auto& p : parts_)
        b += p.b;
    return b;
}

std::string IrrepLabel::str() const
{
    std::string out;
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i)
            out += kTensor;
        out += std::to_string(parts_[i].dim) + "_" + std::to_string(parts_[i].b) + std::string(parts_[i].marks, '\'');
    }
    return out;
}

bool listing_before(const IrrepLabel& a, const IrrepLabel& b)
{
    if (a.b() != b.b())
        return a.b() > b.b();
    if (a.dim() != b.dim())
        return a.dim() < b.dim();
    return a < b;
}

// ------------------------------------------------------------------- table

CharacterTable::CharacterTable(CartanType type, BigInt order, std::vector<ClassRecord> classes,
                               std::vector<Irrep> irreps)
    : type_(std::move(type)), order_(std::move(order)), classes_(std::move(classes)), irreps_(std::move(irreps))
{
    if (order_ > INT64_MAX)
        throw DataError("group order too large");
    order64_ = static_cast<int64_t>(order_);
    int ids = 0;
    for (size_t c = 0; c < classes_.size(); ++c) {
        sizes_.push_back(static_cast<int64_t>(classes_[c].size));
        if (classes_[c].order == 1) {
            identity_ = static_cast<int>(c);
            ++ids;
        }
    }
    if (ids != 1)
        throw DataError("character table of " + type_.str() + " must have exactly one class of order 1");
    for (const auto& ir : irreps_)
        if (ir.values.size() != classes_.size())
            throw DataError("character table of " + type_.str() + " is not square");
}

int CharacterTable::find(const IrrepLabel& label) const
{
    for (size_t i = 0; i < irreps_.size(); ++i)
        if (irreps_[i].label == label)
            return static_cast<int>(i);
    return -1;
}

int CharacterTable::lookup(const IrrepLabel& label) const
{
    int k = find(label);
    if (k >= 0)
        return k;
    std::vector<std::pair<long, std::string>> near;
    for (const auto& ir : irreps_) {
        long d = std::abs(ir.label.b() - label.b()) + (ir.label.dim() == label.dim() ? 0 : 1000);
        if (ir.label.dim() == label.dim() || ir.label.b() == label.b())
            d -= 500;
        near.emplace_back(d, ir.label.str());
    }
    std::sort(near.begin(), near.end());
    std::string msg = "unknown irrep label '" + label.str() + "' for " + type_.str();
    if (!near.empty()) {
        msg += "; nearest:";
        for (size_t i = 0; i < near.size() && i < 5; ++i)
            msg += " " + near[i].second;
    }
    throw InputError(msg);
}

int CharacterTable::trivial() const
{
    for (size_t i = 0; i < irreps_.size(); ++i)
        if (std::all_of(irreps_[i].values.begin(), irreps_[i].values.end(), [](int64_t v) { return v == 1; }))
            return static_cast<int>(i);
    throw DataError("table of " + type_.str() + " has no trivial character");
}

int CharacterTable::sign() const
{
    for (size_t i = 0; i < irreps_.size(); ++i) {
        bool ok = true;
        for (size_t c = 0; c < classes_.size() && ok; ++c)
            ok = irreps_[i].values[c] == (classes_[c].word.size() % 2 ? -1 : 1);
        if (ok)
            return static_cast<int>(i);
    }
    throw DataError("table of " + type_.str() + " has no sign character");
}

int lookup_irrep(const CharacterTable& t, const IrrepLabel& label)
{
    return t.lookup(label);
}

// ------------------------------------------------------------- WCT format

CharacterTable load_character_table(std::string_view text)
{
    std::istringstream in{std::string(text)};
    std::string raw;
    int lineno = 0;
    int stage = 0; // 0 magic, 1 TYPE, 2 ORDER, 3 CLASSES, 4 class lines, 5 irrep lines
    CartanType type;
    BigInt order;
    size_t k = 0;
    std::vector<ClassRecord> classes;
    std::vector<Irrep> irreps;
    std::set<std::string> class_names;
    std::set<IrrepLabel> labels;

    auto to_int = [&](const std::string& s) -> long long {
        try {
            size_t used = 0;
            long long v = std::stoll(s, &used);
            if (used != s.size())
                throw ParseError("bad integer '" + s + "'", lineno);
            return v;
        } catch (const ParseError&) {
            throw;
        } catch (const std::exception&) {
            throw ParseError("bad integer '" + s + "'", lineno);
        }
    };

    while (std::getline(in, raw)) {
        ++lineno;
        auto hash = raw.find('#');
        if (hash != std::string::npos)
            raw.erase(hash);
        std::istringstream ls(raw);
        std::vector<std::string> tok;
        for (std::string t; ls >> t;)
            tok.push_back(t);
        if (tok.empty())
            continue;
        switch (stage) {
        case 0:
            if (tok.size() != 2 || tok[0] != "WCT" || tok[1] != "1")
                throw ParseError("expected header 'WCT 1'", lineno);
            stage = 1;
            break;
        case 1:
            if (tok.size() != 2 || tok[0] != "TYPE")
                throw ParseError("expected 'TYPE <type>'", lineno);
            try {
                type = CartanType::parse(tok[1]);
            } catch (const InputError& e) {
                throw ParseError(e.what(), lineno);
            }
            stage = 2;
            break;
        case 2:
            if (tok.size() != 2 || tok[0] != "ORDER")
                throw ParseError("expected 'ORDER <n>'", lineno);
            try {
                order = BigInt(tok[1]);
            } catch (const std::exception&) {
                throw ParseError("bad order '" + tok[1] + "'", lineno);
            }
            stage = 3;
            break;
        case 3:
            if (tok.size() != 2 || tok[0] != "CLASSES")
                throw ParseError("expected 'CLASSES <k>'", lineno);
            if (to_int(tok[1]) < 1)
                throw ParseError("class count must be positive", lineno);
            k = static_cast<size_t>(to_int(tok[1]));
            stage = 4;
            break;
        case 4: {
            if (tok[0] != "C")
                throw ParseError(tok[0] == "I" ? "non-square table: fewer class lines than CLASSES"
                                               : "expected class line 'C <name> <size> <order> <word>'",
                                 lineno);
            if (tok.size() < 4)
                throw ParseError("class line needs name, size and order", lineno);
            ClassRecord c;
            c.name = tok[1];
            try {
                c.size = BigInt(tok[2]);
            } catch (const std::exception&) {
                throw ParseError("bad class size '" + tok[2] + "'", lineno);
            }
            c.order = static_cast<int>(to_int(tok[3]));
            for (size_t i = 4; i < tok.size(); ++i) {
                long long g = to_int(tok[i]);
                if (g < 1 || g > type.rank())
                    throw ParseError("reflection index " + tok[i] + " out of range", lineno);
                c.word.push_back(static_cast<int>(g - 1));
            }
            if (!class_names.insert(c.name).second)
                throw ParseError("duplicate class name '" + c.name + "'", lineno);
            classes.push_back(std::move(c));
            if (classes.size() == k)
                stage = 5;
            break;
        }
        case 5: {
            if (tok[0] != "I")
                throw ParseError(tok[0] == "C" ? "non-square table: more class lines than CLASSES"
                                               : "expected irrep line 'I <label> <values>'",
                                 lineno);
            if (irreps.size() == k)
                throw ParseError("non-square table: more irrep lines than classes", lineno);
            Irrep ir;
            try {
                ir.label = IrrepLabel::parse(tok[1]);
            } catch (const InputError& e) {
                throw ParseError(e.what(), lineno);
            }
            if (tok.size() - 2 != k)
                throw ParseError("non-square table: irrep " + tok[1] + " has " + std::to_string(tok.size() - 2) +
                                     " values, expected " + std::to_string(k),
                                 lineno);
            for (size_t i = 2; i < tok.size(); ++i)
                ir.values.push_back(to_int(tok[i]));
            if (!labels.insert(ir.label).second)
                throw ParseError("duplicate irrep label '" + tok[1] + "'", lineno);
            irreps.push_back(std::move(ir));
            break;
        }
        }
    }
    if (stage < 4)
        throw ParseError("truncated header", lineno);
    if (irreps.size() != k || classes.size() != k)
        throw ParseError("non-square table: " + std::to_string(classes.size()) + " classes, " +
                             std::to_string(irreps.size()) + " irreps, expected " + std::to_string(k),
                         lineno);
    try {
        return CharacterTable(type, order, std::move(classes), std::move(irreps));
    } catch (const DataError& e) {
        throw ParseError(e.what(), lineno);
    }
}

std::string write_character_table(const CharacterTable& t)
{
    std::ostringstream out;
    out << "WCT 1\nTYPE " << t.cartan_type().str() << "\nORDER " << t.order() << "\nCLASSES " << t.num_classes()
        << "\n";
    for (const auto& c : t.classes()) {
        out << "C " << c.name << " " << c.size << " " << c.order;
        for (int g : c.word)
            out << " " << g + 1;
        out << "\n";
    }
    for (const auto& ir : t.irreps()) {
        out << "I " << ir.label.str();
        for (auto v : ir.values)
            out << " " << v;
        out << "\n";
    }
    return out.str();
}

// -------------------------------------------------------------- validation

ValidationReport validate_table(const CharacterTable& t, const GroupContext& ctx)
{
    ValidationReport rep;
    auto fail = [&](std::string s) { rep.failures.push_back(std::move(s)); };
    const std::string name = t.cartan_type().str();
    const int k = t.num_classes();
    const BigInt& w = ctx.order();

    if (t.cartan_type() != ctx.root_system().type())
        fail("table type " + name + " differs from group type " + ctx.root_system().type().str());
    if (t.order() != w)
        fail("stated order " + t.order().str() + " differs from |W| = " + w.str());
    if (static_cast<int>(t.irreps().size()) != k)
        fail("table is not square");

    BigInt total = 0;
    for (const auto& c : t.classes())
        total += c.size;
    if (total != w)
        fail("class sizes sum to " + total.str() + ", expected " + w.str());

    BigInt dims = 0;
    for (int i = 0; i < static_cast<int>(t.irreps().size()); ++i) {
        BigInt d = t.dim(i);
        if (d < 1)
            fail("irrep " + t.label(i).str() + " has non-positive degree");
        if (d != t.label(i).dim())
            fail("irrep " + t.label(i).str() + " has degree " + d.str() + " at the identity");
        dims += d * d;
    }
    if (dims != w)
        fail("sum of squared degrees is " + dims.str() + ", expected " + w.str());

    const int n = static_cast<int>(t.irreps().size());
    for (int a = 0; a < n; ++a)
        for (int b = a; b < n; ++b) {
            BigInt s = 0;
            for (int c = 0; c < k; ++c)
                s += BigInt(t.class_size(c)) * t.value(a, c) * t.value(b, c);
            BigInt expect = a == b ? w : BigInt(0);
            if (s != expect)
                fail("row orthogonality fails for " + t.label(a).str() + ", " + t.label(b).str());
        }
    for (int c = 0; c < k; ++c)
        for (int d = c; d < k; ++d) {
            BigInt s = 0;
            for (int a = 0; a < n; ++a)
                s += BigInt(t.value(a, c)) * t.value(a, d);
            BigInt expect = 0;
            if (c == d) {
                if (w % t.class_size(c) != 0)
                    fail("class " + t.classes()[c].name + " size does not divide |W|");
                expect = w / t.class_size(c);
            }
            if (s != expect)
                fail("column orthogonality fails for classes " + t.classes()[c].name + ", " + t.classes()[d].name);
        }

    std::vector<GroupElement> reps;
    std::vector<InvariantKey> keys;
    for (const auto& c : t.classes()) {
        try {
            reps.push_back(ctx.element_of_word(c.word));
        } catch (const InputError& e) {
            fail("class " + c.name + ": " + e.what());
            return rep;
        }
        keys.push_back(ctx.invariant_key(reps.back()));
        if (keys.back().order != c.order)
            fail("class " + c.name + " representative has order " + std::to_string(keys.back().order) +
                 ", stated " + std::to_string(c.order));
    }
    for (int c = 0; c < k; ++c)
        for (int d = c + 1; d < k; ++d)
            if (keys[c] == keys[d]) {
                rep.key_collisions.emplace_back(c, d);
                auto r = ctx.are_conjugate(reps[c], reps[d]);
                if (r.status == ConjugacyResult::Status::conjugate)
                    fail("classes " + t.classes()[c].name + " and " + t.classes()[d].name + " are the same class");
                else if (r.status == ConjugacyResult::Status::budget_exceeded)
                    fail("conjugacy test between " + t.classes()[c].name + " and " + t.classes()[d].name +
                         " exceeded its budget");
            }
    return rep;
}

// ------------------------------------------------------------ symmetric group

namespace {

using Partition = std::vector<int>;

void partitions_rec(int n, int max, Partition& cur, std::vector<Partition>& out)
{
    if (n == 0) {
        out.push_back(cur);
        return;
    }
    for (int p = std::min(n, max); p >= 1; --p) {
        cur.push_back(p);
        partitions_rec(n - p, p, cur, out);
        cur.pop_back();
    }
}

// partitions of n, lexicographically increasing: 1^n first, (n) last
std::vector<Partition> partitions(int n)
{
    std::vector<Partition> out;
    Partition cur;
    partitions_rec(n, n, cur, out);
    std::sort(out.begin(), out.end());
    return out;
}

// Murnaghan-Nakayama on beta-sets; mu consumed from position `at`.
int64_t mn_value(std::vector<int> beta, const Partition& mu, size_t at, std::map<std::pair<std::vector<int>, size_t>, int64_t>& memo)
{
    if (at == mu.size())
        return 1;
    auto key = std::make_pair(beta, at);
    if (auto it = memo.find(key); it != memo.end())
        return it->second;
    const int m = mu[at];
    std::set<int> bs(beta.begin(), beta.end());
    int64_t total = 0;
    for (size_t i = 0; i < beta.size(); ++i) {
        int x = beta[i];
        int y = x - m;
        if (y < 0 || bs.count(y))
            continue;
        int between = 0;
        for (int z : beta)
            if (z > y && z < x)
                ++between;
        std::vector<int> nb(beta);
        nb[i] = y;
        std::sort(nb.begin(), nb.end());
        int64_t v = mn_value(nb, mu, at + 1, memo);
        total += (between % 2 ? -v : v);
    }
    memo[key] = total;
    return total;
}

std::vector<int> beta_set(const Partition& lambda)
{
    const int l = static_cast<int>(lambda.size());
    std::vector<int> b;
    for (int i = 0; i < l; ++i)
        b.push_back(lambda[i] + (l - 1 - i));
    std::sort(b.begin(), b.end());
    return b;
}

std::string partition_name(const Partition& p)
{
    std::string s;
    for (int x : p)
        s += std::to_string(x);
    return s;
}

} // namespace

CharacterTable symmetric_table(int n)
{
    if (n < 1 || n > 9)
        throw InputError("symmetric_table: n must be between 1 and 9");
    auto parts = partitions(n);
    int64_t fact = 1;
    for (int i = 2; i <= n; ++i)
        fact *= i;

    std::vector<ClassRecord> classes;
    for (const auto& mu : parts) {
        ClassRecord c;
        c.name = partition_name(mu);
        std::map<int, int> mult;
        long ord = 1;
        int start = 0;
        for (int p : mu) {
            ++mult[p];
            ord = std::lcm(ord, static_cast<long>(p));
            for (int j = 0; j + 1 < p; ++j)
                c.word.push_back(start + j);
            start += p;
        }
        int64_t z = 1;
        for (auto [p, m] : mult)
            for (int j = 1; j <= m; ++j)
                z *= p * j;
        c.size = fact / z;
        c.order = static_cast<int>(ord);
        classes.push_back(std::move(c));
    }

    std::vector<Irrep> irreps;
    std::map<std::pair<int64_t, int>, int> seen;
    std::map<std::pair<std::vector<int>, size_t>, int64_t> memo;
    for (const auto& lambda : parts) {
        Irrep ir;
        auto beta = beta_set(lambda);
        for (const auto& mu : parts) {
            memo.clear();
            ir.values.push_back(mn_value(beta, mu, 0, memo));
        }
        int b = 0;
        for (size_t i = 0; i < lambda.size(); ++i)
            b += static_cast<int>(i) * lambda[i];
        ir.label = IrrepLabel(ir.values.front(), b); // first class is the identity 1^n
        irreps.push_back(std::move(ir));
    }
    // primes for repeated (dim, b), in partition order
    std::map<std::pair<int64_t, int>, int> count;
    for (const auto& ir : irreps)
        ++count[{ir.label.dim(), ir.label.b()}];
    for (auto& ir : irreps) {
        auto key = std::make_pair(ir.label.dim(), ir.label.b());
        if (count[key] > 1)
            ir.label = IrrepLabel(key.first, key.second, ++seen[key]);
    }
    CartanType type = n == 1 ? CartanType() : CartanType({Component{'A', n - 1}});
    return CharacterTable(type, fact, std::move(classes), std::move(irreps));
}

// ---------------------------------------------------------------- products

CharacterTable product_table(const std::vector<CharacterTable>& factors)
{
    std::vector<const CharacterTable*> ptrs;
    for (const auto& f : factors)
        ptrs.push_back(&f);
    return product_table(ptrs);
}

CharacterTable product_table(const std::vector<const CharacterTable*>& factors)
{
    if (factors.size() == 1)
        return *factors.front();
    std::vector<Component> comps;
    BigInt order = 1;
    for (const auto* f : factors) {
        comps.insert(comps.end(), f->cartan_type().components().begin(), f->cartan_type().components().end());
        order *= f->order();
    }
    std::vector<ClassRecord> classes{ClassRecord{"1", 1, {}, 1}};
    std::vector<Irrep> irreps{Irrep{IrrepLabel(), {1}}};
    std::vector<std::vector<IrrepLabel>> label_parts(1);
    int offset = 0;
    bool first = true;
    for (const auto* f : factors) {
        std::vector<ClassRecord> nc;
        for (const auto& a : classes)
            for (const auto& c : f->classes()) {
                ClassRecord r;
                r.name = first ? c.name : a.name + "\xC3\x97" + c.name; // U+00D7
                r.size = a.size * c.size;
                r.word = a.word;
                for (int g : c.word)
                    r.word.push_back(g + offset);
                r.order = std::lcm(a.order, c.order);
                nc.push_back(std::move(r));
            }
        std::vector<Irrep> ni;
        std::vector<std::vector<IrrepLabel>> nl;
        for (size_t i = 0; i < irreps.size(); ++i)
            for (const auto& ir : f->irreps()) {
                Irrep x;
                for (auto va : irreps[i].values)
                    for (auto vc : ir.values)
                        x.values.push_back(va * vc);
                auto parts = label_parts[i];
                parts.push_back(ir.label);
                x.label = IrrepLabel::product(parts);
                ni.push_back(std::move(x));
                nl.push_back(std::move(parts));
            }
        classes = std::move(nc);
        irreps = std::move(ni);
        label_parts = std::move(nl);
        offset += f->cartan_type().rank();
        first = false;
    }
    return CharacterTable(CartanType(std::move(comps)), order, std::move(classes), std::move(irreps));
}

} // namespace weylstrata
