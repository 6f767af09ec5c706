#include "weylstrata/polynomial.hpp"

#include "weylstrata/error.hpp"

namespace weylstrata {

namespace {

int64_t checked(__int128 v)
{
    if (v > INT64_MAX || v < INT64_MIN)
        throw DataError("integer overflow in characteristic polynomial");
    return static_cast<int64_t>(v);
}

} // namespace

IntPoly charpoly(const std::vector<int>& m, int n)
{
    IntPoly c(n + 1, 0);
    c[n] = 1;
    std::vector<int64_t> mk(static_cast<size_t>(n) * n, 0); // M_k
    std::vector<int64_t> prod(static_cast<size_t>(n) * n, 0);
    for (int k = 1; k <= n; ++k) {
        // M_k = M * M_{k-1} + c_{n-k+1} I
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                __int128 s = 0;
                for (int l = 0; l < n; ++l)
                    s += static_cast<__int128>(m[i * n + l]) * mk[l * n + j];
                if (i == j)
                    s += c[n - k + 1];
                prod[i * n + j] = checked(s);
            }
        mk.swap(prod);
        // c_{n-k} = -tr(M M_k) / k
        __int128 tr = 0;
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < n; ++l)
                tr += static_cast<__int128>(m[i * n + l]) * mk[l * n + i];
        if (tr % k != 0)
            throw DataError("inexact division in characteristic polynomial");
        c[n - k] = checked(-tr / k);
    }
    return c;
}

void trim(IntPoly& p)
{
    while (!p.empty() && p.back() == 0)
        p.pop_back();
}

std::string to_string(const IntPoly& p, const std::string& var)
{
    std::string out;
    for (size_t k = p.size(); k-- > 0;) {
        int64_t c = p[k];
        if (c == 0)
            continue;
        if (!out.empty())
            out += c < 0 ? " - " : " + ";
        else if (c < 0)
            out += "-";
        int64_t a = c < 0 ? -c : c;
        if (a != 1 || k == 0)
            out += std::to_string(a);
        if (k >= 1)
            out += var;
        if (k >= 2)
            out += "^" + std::to_string(k);
    }
    return out.empty() ? "0" : out;
}

} // namespace weylstrata
