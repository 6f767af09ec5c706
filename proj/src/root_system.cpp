#include "weylstrata/root_system.hpp"

#include <algorithm>
#include <deque>
#include <numeric>

#include "weylstrata/error.hpp"

namespace weylstrata {

RootSystem::RootSystem(CartanType type) : type_(std::move(type))
{
    rank_ = type_.rank();
    cartan_.assign(rank_, std::vector<int>(rank_, 0));
    int off = 0;
    int comp = 0;
    for (const auto& c : type_.components()) {
        auto a = weylstrata::cartan_matrix(c);
        auto h = root_length_halves(c);
        offsets_.push_back(off);
        for (int i = 0; i < c.rank; ++i) {
            for (int j = 0; j < c.rank; ++j)
                cartan_[off + i][off + j] = a[i][j];
            halves_.push_back(h[i]);
            component_of_.push_back(comp);
        }
        off += c.rank;
        ++comp;
    }

    // positive roots: closure of the simple roots under simple reflections,
    // discarding negative images
    std::vector<Root> pos;
    std::map<Root, int> seen;
    std::deque<Root> queue;
    for (int i = 0; i < rank_; ++i) {
        Root e(rank_, 0);
        e[i] = 1;
        seen[e] = 1;
        queue.push_back(e);
    }
    while (!queue.empty()) {
        Root b = queue.front();
        queue.pop_front();
        pos.push_back(b);
        for (int i = 0; i < rank_; ++i) {
            Root c = reflect(i, b);
            if (std::any_of(c.begin(), c.end(), [](int x) { return x < 0; }))
                continue;
            if (seen.emplace(c, 1).second)
                queue.push_back(c);
        }
    }
    auto ht = [](const Root& r) { return std::accumulate(r.begin(), r.end(), 0); };
    std::sort(pos.begin(), pos.end(), [&](const Root& a, const Root& b) {
        int ha = ht(a), hb = ht(b);
        if (ha != hb)
            return ha < hb;
        return a > b;
    });
    num_positive_ = static_cast<int>(pos.size());
    roots_ = pos;
    for (const auto& r : pos) {
        Root m(r);
        for (auto& x : m)
            x = -x;
        roots_.push_back(m);
    }
    for (int k = 0; k < num_roots(); ++k)
        index_[roots_[k]] = k;

    const size_t n = roots_.size();
    gram_.assign(n * n, 0);
    std::vector<std::vector<int>> form(rank_, std::vector<int>(rank_));
    for (int i = 0; i < rank_; ++i)
        for (int j = 0; j < rank_; ++j)
            form[i][j] = halves_[i] * cartan_[i][j];
    for (size_t j = 0; j < n; ++j) {
        std::vector<int> fj(rank_, 0);
        for (int a = 0; a < rank_; ++a)
            for (int b = 0; b < rank_; ++b)
                fj[b] += roots_[j][a] * form[a][b];
        for (size_t k = 0; k < n; ++k) {
            int s = 0;
            for (int b = 0; b < rank_; ++b)
                s += fj[b] * roots_[k][b];
            gram_[j * n + k] = static_cast<int8_t>(s);
        }
    }

    reflections_.assign(rank_, std::vector<int>(n));
    for (int i = 0; i < rank_; ++i)
        for (size_t k = 0; k < n; ++k) {
            int img = index_of(reflect(i, roots_[k]));
            if (img < 0)
                throw DataError("root set not closed under simple reflections");
            reflections_[i][k] = img;
        }
}

int RootSystem::index_of(const Root& r) const
{
    auto it = index_.find(r);
    return it == index_.end() ? -1 : it->second;
}

int RootSystem::height(int k) const
{
    return std::accumulate(roots_[k].begin(), roots_[k].end(), 0);
}

Root RootSystem::reflect(int i, const Root& beta) const
{
    int p = 0;
    for (int j = 0; j < rank_; ++j)
        p += cartan_[i][j] * beta[j];
    Root out(beta);
    out[i] -= p;
    return out;
}

std::vector<int> degrees(const RootSystem& rs)
{
    std::vector<int> d;
    for (const auto& c : rs.type().components()) {
        auto cd = component_degrees(c);
        d.insert(d.end(), cd.begin(), cd.end());
    }
    return d;
}

std::vector<int> SubsystemLayout::flat() const
{
    std::vector<int> out;
    for (const auto& c : components)
        out.insert(out.end(), c.begin(), c.end());
    return out;
}

namespace {

struct Piece {
    Component comp;
    std::vector<int> nodes; // Bourbaki order
};

// Walk a path starting at `start` through nodes of `adj`, avoiding `block`.
std::vector<int> walk(const std::map<int, std::vector<int>>& adj, int start, int block)
{
    std::vector<int> out{start};
    int prev = block, cur = start;
    while (true) {
        int next = -1;
        for (int v : adj.at(cur))
            if (v != prev) {
                next = v;
                break;
            }
        if (next < 0)
            break;
        out.push_back(next);
        prev = cur;
        cur = next;
    }
    return out;
}

Piece identify(const RootSystem& rs, const std::vector<int>& nodes)
{
    const auto& a = rs.cartan_matrix();
    const auto& h = rs.length_halves();
    std::map<int, std::vector<int>> adj;
    int max_bond = 0;
    for (int u : nodes) {
        adj[u];
        for (int v : nodes)
            if (u != v && a[u][v] != 0) {
                adj[u].push_back(v);
                max_bond = std::max(max_bond, a[u][v] * a[v][u]);
            }
    }
    const int n = static_cast<int>(nodes.size());
    if (n == 1)
        return {{'A', 1}, nodes};

    std::vector<int> leaves, branch;
    for (int u : nodes) {
        if (adj[u].size() == 1)
            leaves.push_back(u);
        if (adj[u].size() >= 3)
            branch.push_back(u);
    }

    if (max_bond == 3) {
        int s = h[nodes[0]] < h[nodes[1]] ? nodes[0] : nodes[1];
        int l = s == nodes[0] ? nodes[1] : nodes[0];
        return {{'G', 2}, {s, l}};
    }
    if (max_bond == 2) {
        // path with one double bond
        int u = -1, v = -1;
        for (int x : nodes)
            for (int y : adj[x])
                if (a[x][y] * a[y][x] == 2)
                    u = x, v = y;
        if (n == 4 && adj[u].size() == 2 && adj[v].size() == 2) {
            int longn = h[u] > h[v] ? u : v;
            int shortn = longn == u ? v : u;
            auto left = walk(adj, longn, shortn);
            std::reverse(left.begin(), left.end());
            auto right = walk(adj, shortn, longn);
            left.insert(left.end(), right.begin(), right.end());
            return {{'F', 4}, left};
        }
        // the double bond sits at one end of the path
        int end = adj[u].size() == 1 ? u : v;
        int other = end == u ? v : u;
        auto path = walk(adj, end, -1);
        std::reverse(path.begin(), path.end());
        bool last_long = h[end] > h[other];
        if (n == 2) {
            // B2: long root first
            int lg = h[u] > h[v] ? u : v;
            return {{'B', 2}, {lg, lg == u ? v : u}};
        }
        return {{last_long ? 'C' : 'B', n}, path};
    }
    if (branch.empty()) {
        auto start = *std::min_element(leaves.begin(), leaves.end());
        return {{'A', n}, walk(adj, start, -1)};
    }
    int c = branch[0];
    std::vector<std::vector<int>> arms;
    for (int v : adj[c])
        arms.push_back(walk(adj, v, c));
    std::sort(arms.begin(), arms.end(), [](const auto& x, const auto& y) {
        if (x.size() != y.size())
            return x.size() < y.size();
        return *std::min_element(x.begin(), x.end()) < *std::min_element(y.begin(), y.end());
    });
    if (arms[2].size() == 1) {
        // D4: leaves in increasing order become alpha_1, alpha_3, alpha_4
        return {{'D', 4}, {arms[0][0], c, arms[1][0], arms[2][0]}};
    }
    if (arms[0].size() == 1 && arms[1].size() == 1) {
        // D_n: long arm (reversed) .. centre, then the two short leaves
        std::vector<int> out(arms[2].rbegin(), arms[2].rend());
        out.push_back(c);
        out.push_back(arms[0][0]);
        out.push_back(arms[1][0]);
        return {{'D', n}, out};
    }
    if (arms[0].size() == 1 && arms[1].size() == 2) {
        // E_n: alpha_1, alpha_2, alpha_3, alpha_4 = centre, alpha_5..
        std::vector<int> out{arms[1][1], arms[0][0], arms[1][0], c};
        out.insert(out.end(), arms[2].begin(), arms[2].end());
        return {{'E', n}, out};
    }
    throw DataError("subsystem is not a Dynkin diagram");
}

} // namespace

SubsystemLayout subsystem_layout(const RootSystem& rs, const std::vector<int>& subset)
{
    std::vector<int> sub(subset);
    std::sort(sub.begin(), sub.end());
    sub.erase(std::unique(sub.begin(), sub.end()), sub.end());
    for (int i : sub)
        if (i < 0 || i >= rs.rank())
            throw InputError("simple root index out of range");

    const auto& a = rs.cartan_matrix();
    std::vector<Piece> pieces;
    std::vector<bool> done(rs.rank(), false);
    for (int s : sub) {
        if (done[s])
            continue;
        std::vector<int> comp{s};
        done[s] = true;
        for (size_t q = 0; q < comp.size(); ++q)
            for (int t : sub)
                if (!done[t] && a[comp[q]][t] != 0) {
                    done[t] = true;
                    comp.push_back(t);
                }
        std::sort(comp.begin(), comp.end());
        pieces.push_back(identify(rs, comp));
    }
    std::stable_sort(pieces.begin(), pieces.end(), [](const Piece& x, const Piece& y) {
        if (x.comp == y.comp)
            return *std::min_element(x.nodes.begin(), x.nodes.end()) <
                   *std::min_element(y.nodes.begin(), y.nodes.end());
        return canonical_before(x.comp, y.comp);
    });
    SubsystemLayout out;
    std::vector<Component> comps;
    for (auto& p : pieces) {
        comps.push_back(p.comp);
        out.components.push_back(p.nodes);
    }
    out.type = CartanType(std::move(comps));
    return out;
}

CartanType subsystem_type(const RootSystem& rs, const std::vector<int>& subset)
{
    return subsystem_layout(rs, subset).type;
}

} // namespace weylstrata
