#include "weylstrata/jind.hpp"

#include <algorithm>

#include "weylstrata/error.hpp"

namespace weylstrata {

namespace {

__int128 mul(__int128 a, __int128 b)
{
    __int128 r;
    if (__builtin_mul_overflow(a, b, &r))
        throw DataError("overflow in fake degree series");
    return r;
}

__int128 add(__int128 a, __int128 b)
{
    __int128 r;
    if (__builtin_add_overflow(a, b, &r))
        throw DataError("overflow in fake degree series");
    return r;
}

} // namespace

FakeDegrees::FakeDegrees(const GroupContext& ctx, const CharacterTable& t) : table_(&t)
{
    const RootSystem& rs = ctx.root_system();
    const int r = rs.rank();
    n_ = rs.num_positive();
    auto degs = degrees(rs);
    depth_ = n_ + (degs.empty() ? 1 : *std::max_element(degs.begin(), degs.end()));

    prod_.assign(depth_ + 1, 0);
    prod_[0] = 1;
    for (int d : degs)
        for (int k = depth_; k >= d; --k)
            prod_[k] -= prod_[k - d];

    for (const auto& c : t.classes()) {
        auto g = ctx.element_of_word(c.word);
        IntPoly cp = charpoly(g.matrix, r);
        // det(I - qM) = q^r cp(1/q): coefficient of q^j is cp[r - j]
        std::vector<__int128> den(r + 1);
        for (int j = 0; j <= r; ++j)
            den[j] = cp[r - j];
        std::vector<__int128> s(depth_ + 1, 0);
        s[0] = 1;
        for (int k = 1; k <= depth_; ++k) {
            __int128 v = 0;
            for (int j = 1; j <= std::min(k, r); ++j)
                v = add(v, mul(-den[j], s[k - j]));
            s[k] = v;
        }
        series_.push_back(std::move(s));
    }
}

IntPoly FakeDegrees::fake_degree(int chi) const
{
    const CharacterTable& t = *table_;
    std::vector<__int128> sum(depth_ + 1, 0);
    for (int c = 0; c < t.num_classes(); ++c) {
        __int128 w = mul(t.class_size(c), t.value(chi, c));
        if (w == 0)
            continue;
        for (int k = 0; k <= depth_; ++k)
            sum[k] = add(sum[k], mul(w, series_[c][k]));
    }
    const std::string name = t.label(chi).str();
    IntPoly out(n_ + 1, 0);
    __int128 at_one = 0;
    for (int k = 0; k <= depth_; ++k) {
        __int128 v = 0;
        for (int j = 0; j <= k; ++j)
            if (prod_[j] != 0)
                v = add(v, mul(prod_[j], sum[k - j]));
        if (v % t.order64() != 0)
            throw DataError("fake degree of " + name + " is not integral");
        v /= t.order64();
        if (k > n_) {
            if (v != 0)
                throw DataError("fake degree of " + name + " is not a polynomial of degree <= N");
            continue;
        }
        if (v < 0)
            throw DataError("fake degree of " + name + " has a negative coefficient");
        out[k] = static_cast<int64_t>(v);
        at_one += v;
    }
    if (at_one != t.dim(chi))
        throw DataError("fake degree of " + name + " does not evaluate to its degree at q = 1");
    trim(out);
    return out;
}

IntPoly fake_degree(const CharacterTable& t, const GroupContext& ctx, int chi)
{
    return FakeDegrees(ctx, t).fake_degree(chi);
}

int lowest_power(const IntPoly& p)
{
    for (size_t k = 0; k < p.size(); ++k)
        if (p[k] != 0)
            return static_cast<int>(k);
    return -1;
}

int b_invariant(const CharacterTable& t, int chi)
{
    return t.label(chi).b();
}

void certify_b(const CharacterTable& t, const FakeDegrees& fd, int chi)
{
    int computed = lowest_power(fd.fake_degree(chi));
    if (computed != b_invariant(t, chi))
        throw DataError("irrep " + t.label(chi).str() + " of " + t.cartan_type().str() + ": label b = " +
                        std::to_string(b_invariant(t, chi)) + " but the fake degree starts at q^" +
                        std::to_string(computed));
}

int j_induce(const LeviEmbedding& emb, const FusionMap& fus, const CharacterTable& t_G, int chi)
{
    auto m = induce_decomposition(emb, fus, chi, t_G);
    const int b = b_invariant(emb.table_L, chi);
    const std::string what = "j-induction of " + emb.table_L.label(chi).str() + " from " + emb.layout.type.str() +
                             " to " + t_G.cartan_type().str();
    int found = -1;
    for (size_t psi = 0; psi < m.size(); ++psi) {
        if (m[psi] == 0)
            continue;
        int bp = b_invariant(t_G, static_cast<int>(psi));
        if (bp < b)
            throw DataError(what + ": constituent " + t_G.label(static_cast<int>(psi)).str() + " has smaller b");
        if (bp != b)
            continue;
        if (found >= 0)
            throw DataError(what + ": several constituents with b = " + std::to_string(b));
        if (m[psi] != 1)
            throw DataError(what + ": constituent " + t_G.label(static_cast<int>(psi)).str() + " has multiplicity " +
                            std::to_string(m[psi]));
        found = static_cast<int>(psi);
    }
    if (found < 0)
        throw DataError(what + ": no constituent with b = " + std::to_string(b));
    return found;
}

} // namespace weylstrata
