#include "weylstrata/perm_group.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

#include "weylstrata/error.hpp"

namespace weylstrata {

Perm identity_perm(int n)
{
    Perm p(n);
    std::iota(p.begin(), p.end(), 0);
    return p;
}

Perm compose(const Perm& p, const Perm& q)
{
    Perm r(q.size());
    for (size_t x = 0; x < q.size(); ++x)
        r[x] = p[q[x]];
    return r;
}

Perm inverse(const Perm& p)
{
    Perm r(p.size());
    for (size_t x = 0; x < p.size(); ++x)
        r[p[x]] = static_cast<uint16_t>(x);
    return r;
}

bool is_identity(const Perm& p)
{
    for (size_t x = 0; x < p.size(); ++x)
        if (p[x] != x)
            return false;
    return true;
}

int perm_order(const Perm& p)
{
    std::vector<char> seen(p.size(), 0);
    long o = 1;
    for (size_t x = 0; x < p.size(); ++x) {
        if (seen[x])
            continue;
        int len = 0;
        for (size_t y = x; !seen[y]; y = p[y]) {
            seen[y] = 1;
            ++len;
        }
        o = std::lcm(o, static_cast<long>(len));
    }
    return static_cast<int>(o);
}

// ---------------------------------------------------------------- StabChain

StabChain::StabChain(int degree, const std::vector<Perm>& gens, const std::vector<int>& base_prefix)
    : degree_(degree)
{
    std::vector<Perm> s;
    for (const auto& g : gens)
        if (!is_identity(g))
            s.push_back(g);

    std::vector<int> base = base_prefix;
    auto fixes_base = [&](const Perm& g) {
        for (int b : base)
            if (g[b] != b)
                return false;
        return true;
    };
    for (const auto& g : s)
        if (fixes_base(g))
            for (int x = 0; x < degree_; ++x)
                if (g[x] != x) {
                    base.push_back(x);
                    break;
                }

    levels_.resize(base.size());
    for (size_t i = 0; i < base.size(); ++i) {
        levels_[i].base = base[i];
        for (const auto& g : s) {
            bool fix = true;
            for (size_t k = 0; k < i && fix; ++k)
                fix = g[base[k]] == base[k];
            if (fix)
                levels_[i].gens.push_back(g);
        }
        rebuild_orbit(levels_[i]);
    }

    // Schreier-Sims: make each level's generators generate the stabilizer
    size_t i = levels_.size();
    while (i-- > 0) {
        bool restart = false;
        for (size_t pi = 0; !restart && pi < levels_[i].orbit.size(); ++pi) {
            for (size_t gi = 0; !restart && gi < levels_[i].gens.size(); ++gi) {
                const Level& lv = levels_[i];
                const Perm& u = lv.transversal[pi];
                const Perm& g = lv.gens[gi];
                int img = g[lv.orbit[pi]];
                Perm h = compose(weylstrata::inverse(lv.transversal[lv.position[img]]), compose(g, u));
                auto [res, j] = sift(std::move(h), i + 1);
                if (is_identity(res))
                    continue;
                if (j == levels_.size()) {
                    Level nl;
                    for (int x = 0; x < degree_; ++x)
                        if (res[x] != x) {
                            nl.base = x;
                            break;
                        }
                    levels_.push_back(std::move(nl));
                }
                for (size_t l = i + 1; l <= j; ++l) {
                    levels_[l].gens.push_back(res);
                    rebuild_orbit(levels_[l]);
                }
                i = j + 1; // loop decrement resumes at level j
                restart = true;
            }
        }
    }
}

void StabChain::rebuild_orbit(Level& lv) const
{
    lv.orbit.assign(1, lv.base);
    lv.position.assign(degree_, -1);
    lv.position[lv.base] = 0;
    lv.transversal.assign(1, identity_perm(degree_));
    for (size_t q = 0; q < lv.orbit.size(); ++q) {
        int x = lv.orbit[q];
        for (const auto& g : lv.gens) {
            int y = g[x];
            if (lv.position[y] >= 0)
                continue;
            lv.position[y] = static_cast<int>(lv.orbit.size());
            lv.orbit.push_back(y);
            lv.transversal.push_back(compose(g, lv.transversal[q]));
        }
    }
}

std::pair<Perm, size_t> StabChain::sift(Perm h, size_t from) const
{
    for (size_t l = from; l < levels_.size(); ++l) {
        const Level& lv = levels_[l];
        int pos = lv.position[h[lv.base]];
        if (pos < 0)
            return {std::move(h), l};
        h = compose(weylstrata::inverse(lv.transversal[pos]), h);
    }
    return {std::move(h), levels_.size()};
}

std::vector<int> StabChain::base() const
{
    std::vector<int> b;
    for (const auto& lv : levels_)
        b.push_back(lv.base);
    return b;
}

BigInt StabChain::order() const
{
    BigInt o = 1;
    for (const auto& lv : levels_)
        o *= lv.orbit.size();
    return o;
}

bool StabChain::contains(const Perm& p) const
{
    if (static_cast<int>(p.size()) != degree_)
        return false;
    return is_identity(sift(p, 0).first);
}

Perm StabChain::random_element(std::mt19937_64& rng) const
{
    Perm w = identity_perm(degree_);
    for (const auto& lv : levels_) {
        std::uniform_int_distribution<size_t> d(0, lv.orbit.size() - 1);
        w = compose(w, lv.transversal[d(rng)]);
    }
    return w;
}

// ------------------------------------------------------------- GroupContext

GroupContext::GroupContext(std::shared_ptr<const RootSystem> rs) : rs_(std::move(rs))
{
    std::vector<Perm> gp;
    for (int i = 0; i < rs_->rank(); ++i) {
        Perm p(rs_->num_roots());
        for (int k = 0; k < rs_->num_roots(); ++k)
            p[k] = static_cast<uint16_t>(rs_->reflection(i)[k]);
        GroupElement g = element_of_perm(p);
        g.word = std::vector<int>{i};
        gens_.push_back(g);
        gp.push_back(p);
    }
    std::vector<int> base(rs_->rank());
    std::iota(base.begin(), base.end(), 0);
    chain_ = StabChain(rs_->num_roots(), gp, base);
    order_ = chain_.order();
}

StabChain GroupContext::chain_with_base(const std::vector<int>& prefix) const
{
    std::vector<Perm> gp;
    for (const auto& g : gens_)
        gp.push_back(g.perm);
    std::vector<int> base = prefix;
    for (int i = 0; i < rs_->rank(); ++i)
        if (std::find(base.begin(), base.end(), i) == base.end())
            base.push_back(i);
    return StabChain(rs_->num_roots(), gp, base);
}

std::vector<int> GroupContext::matrix_of(const Perm& p) const
{
    const int r = rs_->rank();
    std::vector<int> m(static_cast<size_t>(r) * r);
    for (int j = 0; j < r; ++j) {
        const Root& img = rs_->root(p[j]);
        for (int i = 0; i < r; ++i)
            m[i * r + j] = img[i];
    }
    return m;
}

GroupElement GroupContext::identity() const
{
    return element_of_word({});
}

GroupElement GroupContext::element_of_perm(Perm p) const
{
    GroupElement g;
    g.matrix = matrix_of(p);
    g.perm = std::move(p);
    return g;
}

GroupElement GroupContext::element_of_word(const std::vector<int>& word) const
{
    Perm p = identity_perm(rs_->num_roots());
    for (int i : word) {
        if (i < 0 || i >= rs_->rank())
            throw InputError("simple reflection index " + std::to_string(i + 1) + " out of range");
        p = compose(p, gens_[i].perm);
    }
    GroupElement g = element_of_perm(std::move(p));
    g.word = word;
    return g;
}

GroupElement GroupContext::multiply(const GroupElement& a, const GroupElement& b) const
{
    GroupElement g = element_of_perm(compose(a.perm, b.perm));
    if (a.word && b.word) {
        std::vector<int> w = *a.word;
        w.insert(w.end(), b.word->begin(), b.word->end());
        g.word = std::move(w);
    }
    return g;
}

GroupElement GroupContext::inverse(const GroupElement& a) const
{
    GroupElement g = element_of_perm(weylstrata::inverse(a.perm));
    if (a.word)
        g.word = std::vector<int>(a.word->rbegin(), a.word->rend());
    return g;
}

GroupElement GroupContext::power(const GroupElement& a, int k) const
{
    Perm p = identity_perm(rs_->num_roots());
    for (int i = 0; i < k; ++i)
        p = compose(p, a.perm);
    return element_of_perm(std::move(p));
}

GroupElement GroupContext::random_element(std::mt19937_64& rng) const
{
    return element_of_perm(chain_.random_element(rng));
}

InvariantKey GroupContext::invariant_key(const GroupElement& g) const
{
    InvariantKey key;
    const Perm& p = g.perm;
    std::map<int, int> cycles;
    std::vector<char> seen(p.size(), 0);
    long o = 1;
    for (size_t x = 0; x < p.size(); ++x) {
        if (seen[x])
            continue;
        int len = 0;
        for (size_t y = x; !seen[y]; y = p[y]) {
            seen[y] = 1;
            ++len;
        }
        ++cycles[len];
        o = std::lcm(o, static_cast<long>(len));
    }
    key.order = static_cast<int>(o);
    key.cycle_type.assign(cycles.begin(), cycles.end());
    Perm pk = identity_perm(static_cast<int>(p.size()));
    for (int k = 1; k <= key.order; ++k) {
        pk = compose(pk, p);
        if (key.order % k == 0)
            key.charpolys.push_back(charpoly(matrix_of(pk), rs_->rank()));
    }
    return key;
}

namespace {

struct ConjSearch {
    const RootSystem& rs;
    const StabChain& chain;
    const Perm& a;
    const Perm& b;
    std::vector<int> alen, blen; // cycle length of each root
    std::vector<int> base, images;
    long nodes = 0;
    long budget;
    bool exceeded = false;
    std::optional<Perm> found;

    ConjSearch(const RootSystem& r, const StabChain& c, const Perm& pa, const Perm& pb, long bud)
        : rs(r), chain(c), a(pa), b(pb), budget(bud)
    {
        alen = cycle_lengths(a);
        blen = cycle_lengths(b);
        base = chain.base();
    }

    static std::vector<int> cycle_lengths(const Perm& p)
    {
        std::vector<int> len(p.size(), 0);
        for (size_t x = 0; x < p.size(); ++x) {
            if (len[x])
                continue;
            int l = 0;
            for (size_t y = x; l == 0 || y != x; y = p[y])
                ++l;
            for (size_t y = x, k = 0; k < static_cast<size_t>(l); y = p[y], ++k)
                len[y] = l;
        }
        return len;
    }

    bool consistent(size_t level, int gamma) const
    {
        int beta = base[level];
        if (alen[beta] != blen[gamma])
            return false;
        int x = beta, y = gamma;
        for (int m = 0; m < alen[beta]; ++m) {
            for (size_t k = 0; k <= level; ++k) {
                int bk = k == level ? beta : base[k];
                int gk = k == level ? gamma : images[k];
                if (rs.inner(x, bk) != rs.inner(y, gk))
                    return false;
            }
            x = a[x];
            y = b[y];
        }
        return true;
    }

    void run(size_t level, const Perm& g)
    {
        if (found || exceeded)
            return;
        if (level == chain.levels().size()) {
            if (compose(g, a) == compose(b, g))
                found = g;
            return;
        }
        const auto& lv = chain.levels()[level];
        for (size_t i = 0; i < lv.orbit.size(); ++i) {
            if (++nodes > budget) {
                exceeded = true;
                return;
            }
            int gamma = g[lv.orbit[i]];
            if (!consistent(level, gamma))
                continue;
            images.push_back(gamma);
            run(level + 1, compose(g, lv.transversal[i]));
            images.pop_back();
            if (found || exceeded)
                return;
        }
    }
};

} // namespace

ConjugacyResult GroupContext::are_conjugate(const GroupElement& a, const GroupElement& b, long budget) const
{
    ConjugacyResult res;
    if (a.perm == b.perm) {
        res.status = ConjugacyResult::Status::conjugate;
        res.witness = identity();
        return res;
    }
    if (invariant_key(a) != invariant_key(b))
        return res;
    ConjSearch s(*rs_, chain_, a.perm, b.perm, budget);
    s.run(0, identity_perm(degree()));
    res.nodes = s.nodes;
    if (s.found) {
        res.status = ConjugacyResult::Status::conjugate;
        res.witness = element_of_perm(*s.found);
    } else if (s.exceeded) {
        res.status = ConjugacyResult::Status::budget_exceeded;
    }
    return res;
}

std::vector<int> GroupContext::subsystem_roots(const std::vector<int>& roots) const
{
    std::vector<char> in(rs_->num_roots(), 0);
    std::vector<int> out;
    for (int r : roots)
        for (int x : {r, rs_->negative(r)})
            if (!in[x]) {
                in[x] = 1;
                out.push_back(x);
            }
    // closure under the reflections in the roots found so far
    for (size_t q = 0; q < out.size(); ++q)
        for (size_t t = 0; t <= q; ++t) {
            for (auto [u, v] : {std::pair{out[q], out[t]}, std::pair{out[t], out[q]}}) {
                const Root& ru = rs_->root(u);
                const Root& rv = rs_->root(v);
                // s_u(v) = v - <u^vee, v> u with <u^vee, v> = 2(u,v)/(u,u)
                int uu = rs_->inner(u, u), uv = rs_->inner(u, v);
                if (uv == 0)
                    continue;
                int c = 2 * uv / uu;
                Root w(rv);
                for (size_t i = 0; i < w.size(); ++i)
                    w[i] -= c * ru[i];
                int idx = rs_->index_of(w);
                if (idx >= 0 && !in[idx]) {
                    in[idx] = 1;
                    out.push_back(idx);
                }
            }
        }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<GroupElement> GroupContext::subset_conjugator(const std::vector<int>& s1, const std::vector<int>& s2,
                                                            long budget) const
{
    return subset_conjugator(chain_with_base(s1), s1, s2, budget);
}

std::optional<GroupElement> GroupContext::subset_conjugator(const StabChain& chain, const std::vector<int>& s1,
                                                            const std::vector<int>& s2, long budget) const
{
    auto phi1 = subsystem_roots(s1);
    auto phi2 = subsystem_roots(s2);
    if (phi1.size() != phi2.size())
        return std::nullopt;
    if (s1.empty())
        return identity();
    std::vector<char> target(rs_->num_roots(), 0);
    for (int x : phi2)
        target[x] = 1;
    for (size_t k = 0; k < s1.size(); ++k)
        if (chain.levels().size() <= k || chain.levels()[k].base != s1[k])
            throw InputError("stabilizer chain base does not start with the subset");

    long nodes = 0;
    std::optional<Perm> found;
    // depth-first over images of s1[0..k)
    std::function<void(size_t, const Perm&)> rec = [&](size_t level, const Perm& g) {
        if (found)
            return;
        if (level == s1.size()) {
            for (int x : phi1)
                if (!target[g[x]])
                    return;
            found = g;
            return;
        }
        const auto& lv = chain.levels()[level];
        for (size_t i = 0; i < lv.orbit.size(); ++i) {
            if (++nodes > budget)
                throw BudgetExceeded("subset conjugacy search exceeded its budget");
            if (!target[g[lv.orbit[i]]])
                continue;
            rec(level + 1, compose(g, lv.transversal[i]));
            if (found)
                return;
        }
    };
    rec(0, identity_perm(degree()));
    if (!found)
        return std::nullopt;
    return element_of_perm(*found);
}

} // namespace weylstrata
