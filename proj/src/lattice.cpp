#include "boxlat/lattice.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>

#include "boxlat/par.hpp"

namespace boxlat {

Config& config() {
    static Config cfg;
    return cfg;
}

void check_size_cap(long long n, const std::string& what) {
    if (n > config().max_elements)
        fail(errc::size_cap_exceeded,
             what + " would have " + std::to_string(n) + " elements (cap " +
                 std::to_string(config().max_elements) + ")");
}

int FiniteLattice::meet_all(const std::vector<int>& xs) const {
    int r = one;
    for (int x : xs) r = meet(r, x);
    return r;
}

int FiniteLattice::join_all(const std::vector<int>& xs) const {
    int r = zero;
    for (int x : xs) r = join(r, x);
    return r;
}

int FiniteLattice::index_of(const std::string& label) const {
    for (int i = 0; i < n; ++i)
        if (labels[i] == label) return i;
    return -1;
}

std::vector<std::pair<int, int>> FiniteLattice::covers() const {
    std::vector<std::pair<int, int>> cv;
    for (int x = 0; x < n; ++x) {
        Bits strict = up[x];
        strict.reset(x);
        strict.for_each([&](int y) {
            // y covers x iff nothing lies strictly between
            Bits between = strict & down[y];
            between.reset(y);
            if (between.none()) cv.emplace_back(x, y);
        });
    }
    return cv;
}

namespace {

std::vector<int> compute_heights(const std::vector<Bits>& down, int n) {
    // longest-chain height; process by ideal size, which is a linear extension
    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::vector<int> isz(n);
    for (int i = 0; i < n; ++i) isz[i] = down[i].count();
    std::sort(order.begin(), order.end(), [&](int a, int b) { return isz[a] < isz[b]; });
    std::vector<int> h(n, 0);
    for (int x : order) {
        int best = 0;
        down[x].for_each([&](int y) {
            if (y != x) best = std::max(best, h[y] + 1);
        });
        h[x] = best;
    }
    return h;
}

}  // namespace

FiniteLattice lattice_from_order(std::string name, std::vector<std::string> labels,
                                 const std::function<bool(int, int)>& leq) {
    int n = int(labels.size());
    if (n == 0) fail(errc::not_a_lattice, "empty carrier in " + name);
    check_size_cap(n, name);

    FiniteLattice l;
    l.name = std::move(name);
    l.n = n;
    l.labels = std::move(labels);
    l.up.assign(n, Bits(n));
    l.down.assign(n, Bits(n));
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            if (leq(x, y)) {
                l.up[x].set(y);
                l.down[y].set(x);
            }
    for (int x = 0; x < n; ++x) {
        if (!l.up[x].test(x)) fail(errc::not_a_poset, "order not reflexive in " + l.name);
        for (int y = x + 1; y < n; ++y)
            if (l.up[x].test(y) && l.down[x].test(y))
                fail(errc::not_a_poset, "order not antisymmetric in " + l.name);
        // transitivity: up[y] ⊆ up[x] whenever x ≤ y
        l.up[x].for_each([&](int y) {
            if (!l.up[y].subset_of(l.up[x]))
                fail(errc::not_a_poset, "order not transitive in " + l.name);
        });
    }

    l.height_of = compute_heights(l.down, n);

    l.meet_tab.assign(size_t(n) * n, -1);
    l.join_tab.assign(size_t(n) * n, -1);
    for (int x = 0; x < n; ++x)
        for (int y = x; y < n; ++y) {
            Bits lower = l.down[x] & l.down[y];
            int glb = -1, best_h = -1;
            lower.for_each([&](int z) {
                if (l.height_of[z] > best_h) {
                    best_h = l.height_of[z];
                    glb = z;
                }
            });
            if (glb < 0 || !lower.subset_of(l.down[glb]))
                fail(errc::not_a_lattice, "no unique meet of (" + l.labels[x] + ", " +
                                              l.labels[y] + ") in " + l.name);
            Bits upper = l.up[x] & l.up[y];
            int lub = -1, low_h = -1;
            upper.for_each([&](int z) {
                if (lub < 0 || l.height_of[z] < low_h) {
                    low_h = l.height_of[z];
                    lub = z;
                }
            });
            if (lub < 0 || !upper.subset_of(l.up[lub]))
                fail(errc::not_a_lattice, "no unique join of (" + l.labels[x] + ", " +
                                              l.labels[y] + ") in " + l.name);
            l.meet_tab[size_t(x) * n + y] = l.meet_tab[size_t(y) * n + x] = glb;
            l.join_tab[size_t(x) * n + y] = l.join_tab[size_t(y) * n + x] = lub;
        }

    int z = 0, o = 0;
    for (int x = 1; x < n; ++x) {
        z = l.meet(z, x);
        o = l.join(o, x);
    }
    l.zero = z;
    l.one = o;
    return l;
}

FiniteLattice lattice_from_covers(std::string name, std::vector<std::string> labels,
                                  const std::vector<std::pair<int, int>>& covers) {
    int n = int(labels.size());
    if (n == 0) fail(errc::not_a_lattice, "empty carrier in " + name);
    std::vector<std::vector<int>> succ(n);
    std::vector<int> indeg(n, 0);
    for (auto [lo, hi] : covers) {
        if (lo < 0 || lo >= n || hi < 0 || hi >= n)
            fail(errc::not_a_poset, "cover index out of range in " + name);
        succ[lo].push_back(hi);
        ++indeg[hi];
    }
    // Kahn toposort to detect cycles
    std::queue<int> q;
    for (int i = 0; i < n; ++i)
        if (indeg[i] == 0) q.push(i);
    std::vector<int> topo;
    while (!q.empty()) {
        int x = q.front();
        q.pop();
        topo.push_back(x);
        for (int y : succ[x])
            if (--indeg[y] == 0) q.push(y);
    }
    if (int(topo.size()) != n) fail(errc::not_a_poset, "cover relation has a cycle in " + name);

    std::vector<Bits> up(n, Bits(n));
    for (auto it = topo.rbegin(); it != topo.rend(); ++it) {
        int x = *it;
        up[x].set(x);
        for (int y : succ[x]) up[x] |= up[y];
    }
    return lattice_from_order(std::move(name), std::move(labels),
                              [&](int x, int y) { return up[x].test(y); });
}

FiniteLattice lattice_from_covers(std::string name, const std::vector<std::string>& labels,
                                  const std::vector<std::pair<std::string, std::string>>& covers) {
    std::map<std::string, int> idx;
    for (int i = 0; i < int(labels.size()); ++i) {
        if (idx.count(labels[i])) fail(errc::not_a_poset, "duplicate label " + labels[i]);
        idx[labels[i]] = i;
    }
    std::vector<std::pair<int, int>> cv;
    for (auto& [lo, hi] : covers) {
        auto a = idx.find(lo), b = idx.find(hi);
        if (a == idx.end() || b == idx.end())
            fail(errc::not_a_poset, "cover references unknown label " + (a == idx.end() ? lo : hi));
        cv.emplace_back(a->second, b->second);
    }
    return lattice_from_covers(std::move(name), labels, cv);
}

FiniteLattice dual(const FiniteLattice& l) {
    FiniteLattice d = l;
    d.name = "dual(" + l.name + ")";
    std::swap(d.up, d.down);
    std::swap(d.meet_tab, d.join_tab);
    std::swap(d.zero, d.one);
    d.height_of = compute_heights(d.down, d.n);
    return d;
}

FiniteLattice direct_product(const FiniteLattice& a, const FiniteLattice& b) {
    check_size_cap((long long)a.n * b.n, "direct product " + a.name + " x " + b.name);
    int n = a.n * b.n;
    FiniteLattice p;
    p.name = "prod(" + a.name + "," + b.name + ")";
    p.n = n;
    p.labels.reserve(n);
    for (int x = 0; x < a.n; ++x)
        for (int y = 0; y < b.n; ++y) p.labels.push_back("(" + a.labels[x] + "," + b.labels[y] + ")");
    auto id = [&](int x, int y) { return x * b.n + y; };
    p.up.assign(n, Bits(n));
    p.down.assign(n, Bits(n));
    p.meet_tab.assign(size_t(n) * n, -1);
    p.join_tab.assign(size_t(n) * n, -1);
    p.height_of.assign(n, 0);
    for (int x = 0; x < a.n; ++x)
        for (int y = 0; y < b.n; ++y) {
            int i = id(x, y);
            p.height_of[i] = a.height_of[x] + b.height_of[y];
            for (int u = 0; u < a.n; ++u)
                for (int v = 0; v < b.n; ++v) {
                    int j = id(u, v);
                    if (a.leq(x, u) && b.leq(y, v)) {
                        p.up[i].set(j);
                        p.down[j].set(i);
                    }
                    p.meet_tab[size_t(i) * n + j] = id(a.meet(x, u), b.meet(y, v));
                    p.join_tab[size_t(i) * n + j] = id(a.join(x, u), b.join(y, v));
                }
        }
    p.zero = id(a.zero, b.zero);
    p.one = id(a.one, b.one);
    return p;
}

std::pair<FiniteLattice, std::vector<int>> sublattice(const FiniteLattice& l,
                                                      std::vector<int> elems, std::string name) {
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    std::vector<int> pos(l.n, -1);
    for (int i = 0; i < int(elems.size()); ++i) pos[elems[i]] = i;
    for (int x : elems)
        for (int y : elems)
            if (pos[l.meet(x, y)] < 0 || pos[l.join(x, y)] < 0)
                fail(errc::not_a_lattice, "subset of " + l.name + " not closed under meet/join");
    std::vector<std::string> labels;
    for (int x : elems) labels.push_back(l.labels[x]);
    auto sub = lattice_from_order(name.empty() ? "sub(" + l.name + ")" : std::move(name),
                                  std::move(labels),
                                  [&](int i, int j) { return l.leq(elems[i], elems[j]); });
    return {std::move(sub), std::move(elems)};
}

bool is_distributive(const FiniteLattice& l) {
    size_t n = size_t(l.n);
    return par::all_of(n * n * n, [&](size_t i) {
        int x = int(i / (n * n)), y = int((i / n) % n), z = int(i % n);
        return l.meet(x, l.join(y, z)) == l.join(l.meet(x, y), l.meet(x, z));
    });
}

namespace {

struct IsoSearcher {
    const FiniteLattice& a;
    const FiniteLattice& b;
    std::vector<uint64_t> siga, sigb;
    std::vector<int> map, used, order;

    IsoSearcher(const FiniteLattice& a_, const FiniteLattice& b_) : a(a_), b(b_) {}

    static std::vector<uint64_t> signatures(const FiniteLattice& l) {
        std::vector<uint64_t> sig(l.n);
        std::vector<std::vector<int>> cup(l.n), cdn(l.n);
        for (auto [x, y] : l.covers()) {
            cup[x].push_back(y);
            cdn[y].push_back(x);
        }
        for (int x = 0; x < l.n; ++x)
            sig[x] = (uint64_t(l.height_of[x]) << 40) ^ (uint64_t(l.down[x].count()) << 20) ^
                     (uint64_t(cup[x].size()) << 10) ^ uint64_t(cdn[x].size());
        // one refinement round over cover neighborhoods
        for (int round = 0; round < 2; ++round) {
            std::vector<uint64_t> next(l.n);
            for (int x = 0; x < l.n; ++x) {
                uint64_t h = sig[x] * 0x9e3779b97f4a7c15ull;
                std::vector<uint64_t> nb;
                for (int y : cup[x]) nb.push_back(sig[y]);
                std::sort(nb.begin(), nb.end());
                for (auto v : nb) h = h * 1099511628211ull ^ v;
                nb.clear();
                for (int y : cdn[x]) nb.push_back(sig[y]);
                std::sort(nb.begin(), nb.end());
                for (auto v : nb) h = h * 14695981039346656037ull ^ v;
                next[x] = h;
            }
            sig = next;
        }
        return sig;
    }

    bool compatible(int x, int u) const {
        for (int y = 0; y < a.n; ++y) {
            int v = map[y];
            if (v < 0) continue;
            if (a.leq(x, y) != b.leq(u, v) || a.leq(y, x) != b.leq(v, u)) return false;
            int m = map[a.meet(x, y)];
            if (m >= 0 && m != b.meet(u, v)) return false;
            int j = map[a.join(x, y)];
            if (j >= 0 && j != b.join(u, v)) return false;
        }
        return true;
    }

    bool dfs(size_t k) {
        if (k == order.size()) return true;
        int x = order[k];
        for (int u = 0; u < b.n; ++u) {
            if (used[u] || siga[x] != sigb[u]) continue;
            if (!compatible(x, u)) continue;
            map[x] = u;
            used[u] = 1;
            if (dfs(k + 1)) return true;
            map[x] = -1;
            used[u] = 0;
        }
        return false;
    }

    std::optional<std::vector<int>> run() {
        if (a.n != b.n) return std::nullopt;
        siga = signatures(a);
        sigb = signatures(b);
        {
            auto sa = siga, sb = sigb;
            std::sort(sa.begin(), sa.end());
            std::sort(sb.begin(), sb.end());
            if (sa != sb) return std::nullopt;
        }
        map.assign(a.n, -1);
        used.assign(b.n, 0);
        order.resize(a.n);
        std::iota(order.begin(), order.end(), 0);
        // most constrained first: rare signatures early
        std::map<uint64_t, int> freq;
        for (auto s : siga) ++freq[s];
        std::sort(order.begin(), order.end(), [&](int x, int y) {
            if (freq[siga[x]] != freq[siga[y]]) return freq[siga[x]] < freq[siga[y]];
            return x < y;
        });
        if (!dfs(0)) return std::nullopt;
        // full table check
        for (int x = 0; x < a.n; ++x)
            for (int y = 0; y < a.n; ++y)
                if (map[a.meet(x, y)] != b.meet(map[x], map[y]) ||
                    map[a.join(x, y)] != b.join(map[x], map[y]))
                    return std::nullopt;
        return map;
    }
};

}  // namespace

std::optional<std::vector<int>> find_isomorphism(const FiniteLattice& a, const FiniteLattice& b) {
    return IsoSearcher(a, b).run();
}

LatticeHom::LatticeHom(const FiniteLattice& src, const FiniteLattice& tgt, std::vector<int> m)
    : source(&src), target(&tgt), map(std::move(m)) {
    if (int(map.size()) != src.n)
        fail(errc::precondition_not_met, "homomorphism map has wrong arity");
    for (int v : map)
        if (v < 0 || v >= tgt.n) fail(errc::precondition_not_met, "homomorphism image out of range");
    for (int x = 0; x < src.n; ++x)
        for (int y = x; y < src.n; ++y) {
            if (map[src.meet(x, y)] != tgt.meet(map[x], map[y]) ||
                map[src.join(x, y)] != tgt.join(map[x], map[y]))
                fail(errc::precondition_not_met,
                     "map does not preserve meet/join at (" + src.labels[x] + ", " + src.labels[y] +
                         ")");
        }
    preserves_zero = map[src.zero] == tgt.zero;
    preserves_one = map[src.one] == tgt.one;
    std::vector<int> seen(tgt.n, 0);
    injective = true;
    for (int v : map) {
        if (seen[v]) injective = false;
        seen[v] = 1;
    }
}

LatticeHom identity_hom(const FiniteLattice& l) {
    std::vector<int> m(l.n);
    std::iota(m.begin(), m.end(), 0);
    return LatticeHom(l, l, std::move(m));
}

LatticeHom compose(const LatticeHom& g, const LatticeHom& f) {
    if (f.target != g.source) fail(errc::precondition_not_met, "composition type mismatch");
    std::vector<int> m(f.map.size());
    for (size_t i = 0; i < m.size(); ++i) m[i] = g.map[f.map[i]];
    return LatticeHom(*f.source, *g.target, std::move(m));
}

bool is_one_sensitive(const LatticeHom& f) { return f.map[f.source->one] == f.target->one; }

}  // namespace boxlat
