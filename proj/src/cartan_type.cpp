#include "weylstrata/cartan_type.hpp"

#include <algorithm>
#include <cctype>

#include "weylstrata/error.hpp"

namespace weylstrata {

namespace {

int family_rank(char f)
{
    // E, F, G, D, C, B, A
    static const std::string order = "EFGDCBA";
    return static_cast<int>(order.find(f));
}

std::string trim(std::string_view s)
{
    size_t b = 0, e = s.size();
    while (b < e && std::isspace(static_cast<unsigned char>(s[b])))
        ++b;
    while (e > b && std::isspace(static_cast<unsigned char>(s[e - 1])))
        --e;
    return std::string(s.substr(b, e - b));
}

void fold(const Component& c, std::vector<Component>& out)
{
    if ((c.family == 'B' || c.family == 'C') && c.rank == 1)
        out.push_back({'A', 1});
    else if (c.family == 'D' && c.rank == 2) {
        out.push_back({'A', 1});
        out.push_back({'A', 1});
    } else if (c.family == 'D' && c.rank == 3)
        out.push_back({'A', 3});
    else
        out.push_back(c);
}

} // namespace

bool canonical_before(const Component& a, const Component& b)
{
    if (a.family != b.family)
        return family_rank(a.family) < family_rank(b.family);
    return a.rank > b.rank;
}

void check_component(const Component& c)
{
    bool ok = false;
    switch (c.family) {
    case 'A': ok = c.rank >= 1; break;
    case 'B':
    case 'C': ok = c.rank >= 1; break;
    case 'D': ok = c.rank >= 2; break;
    case 'E': ok = c.rank >= 6 && c.rank <= 8; break;
    case 'F': ok = c.rank == 4; break;
    case 'G': ok = c.rank == 2; break;
    default: break;
    }
    if (!ok)
        throw InputError("invalid Cartan type component " + std::string(1, c.family) +
                         std::to_string(c.rank));
}

CartanType::CartanType(std::vector<Component> components) : components_(std::move(components))
{
    for (const auto& c : components_)
        check_component(c);
}

CartanType CartanType::parse(std::string_view text)
{
    std::string s = trim(text);
    std::string lower;
    for (char ch : s)
        lower += static_cast<char>(std::tolower(static_cast<unsigned char>(ch)));
    if (lower.empty() || lower == "t" || lower == "0" || lower == "torus")
        return {};

    std::vector<Component> comps;
    size_t pos = 0;
    while (pos <= s.size()) {
        size_t plus = s.find('+', pos);
        std::string part = trim(s.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos));
        if (part.empty())
            throw InputError("empty component in type '" + s + "'");
        // optional multiplicity prefix, e.g. 2A1
        size_t i = 0;
        int mult = 1;
        if (std::isdigit(static_cast<unsigned char>(part[0]))) {
            while (i < part.size() && std::isdigit(static_cast<unsigned char>(part[i])))
                ++i;
            mult = std::stoi(part.substr(0, i));
        }
        if (i >= part.size() || !std::isalpha(static_cast<unsigned char>(part[i])))
            throw InputError("cannot parse type component '" + part + "'");
        char fam = static_cast<char>(std::toupper(static_cast<unsigned char>(part[i])));
        std::string digits = part.substr(i + 1);
        if (!digits.empty() && digits[0] == '_')
            digits.erase(0, 1);
        if (digits.empty() || digits.size() > 3 ||
            !std::all_of(digits.begin(), digits.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
            throw InputError("cannot parse type component '" + part + "'");
        Component c{fam, std::stoi(digits)};
        check_component(c);
        if (mult < 1)
            throw InputError("bad multiplicity in '" + part + "'");
        for (int k = 0; k < mult; ++k)
            fold(c, comps);
        if (plus == std::string::npos)
            break;
        pos = plus + 1;
    }
    std::stable_sort(comps.begin(), comps.end(), canonical_before);
    return CartanType(std::move(comps));
}

int CartanType::rank() const
{
    int r = 0;
    for (const auto& c : components_)
        r += c.rank;
    return r;
}

bool CartanType::is_canonical() const
{
    return std::is_sorted(components_.begin(), components_.end(), canonical_before);
}

CartanType CartanType::canonical() const
{
    auto comps = components_;
    std::stable_sort(comps.begin(), comps.end(), canonical_before);
    return CartanType(std::move(comps));
}

std::string CartanType::str() const
{
    if (components_.empty())
        return "T";
    std::string out;
    for (size_t i = 0; i < components_.size(); ++i) {
        if (i)
            out += '+';
        out += components_[i].str();
    }
    return out;
}

std::vector<std::vector<int>> cartan_matrix(const Component& c)
{
    check_component(c);
    const int n = c.rank;
    std::vector<std::vector<int>> a(n, std::vector<int>(n, 0));
    for (int i = 0; i < n; ++i)
        a[i][i] = 2;
    auto link = [&](int i, int j) { a[i][j] = a[j][i] = -1; };
    switch (c.family) {
    case 'A':
        for (int i = 0; i + 1 < n; ++i)
            link(i, i + 1);
        break;
    case 'B':
        for (int i = 0; i + 1 < n; ++i)
            link(i, i + 1);
        if (n >= 2)
            a[n - 1][n - 2] = -2; // alpha_n short
        break;
    case 'C':
        for (int i = 0; i + 1 < n; ++i)
            link(i, i + 1);
        if (n >= 2)
            a[n - 2][n - 1] = -2; // alpha_n long
        break;
    case 'D':
        for (int i = 0; i + 2 < n; ++i)
            link(i, i + 1);
        if (n >= 3)
            link(n - 3, n - 1);
        break;
    case 'E':
        link(0, 2);
        link(1, 3);
        for (int i = 2; i + 1 < n; ++i)
            link(i, i + 1);
        break;
    case 'F':
        link(0, 1);
        link(1, 2);
        link(2, 3);
        a[2][1] = -2; // alpha_3 short
        break;
    case 'G':
        a[0][1] = -3; // alpha_1 short
        a[1][0] = -1;
        break;
    }
    return a;
}

std::vector<int> root_length_halves(const Component& c)
{
    const int n = c.rank;
    std::vector<int> h(n, 1);
    switch (c.family) {
    case 'B':
        if (n >= 2)
            for (int i = 0; i + 1 < n; ++i)
                h[i] = 2;
        break;
    case 'C':
        if (n >= 2)
            h[n - 1] = 2;
        break;
    case 'F':
        h[0] = h[1] = 2;
        break;
    case 'G':
        h[1] = 3;
        break;
    default:
        break;
    }
    return h;
}

std::vector<int> component_degrees(const Component& c)
{
    check_component(c);
    const int n = c.rank;
    std::vector<int> d;
    switch (c.family) {
    case 'A':
        for (int i = 2; i <= n + 1; ++i)
            d.push_back(i);
        break;
    case 'B':
    case 'C':
        for (int i = 1; i <= n; ++i)
            d.push_back(2 * i);
        break;
    case 'D':
        for (int i = 1; i < n; ++i)
            d.push_back(2 * i);
        d.push_back(n);
        break;
    case 'E':
        if (n == 6)
            d = {2, 5, 6, 8, 9, 12};
        else if (n == 7)
            d = {2, 6, 8, 10, 12, 14, 18};
        else
            d = {2, 8, 12, 14, 18, 20, 24, 30};
        break;
    case 'F':
        d = {2, 6, 8, 12};
        break;
    case 'G':
        d = {2, 6};
        break;
    }
    std::sort(d.begin(), d.end());
    return d;
}

} // namespace weylstrata
