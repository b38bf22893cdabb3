#include "boxlat/congruence.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

namespace boxlat {

Congruence::Congruence(const FiniteLattice& l, std::vector<int> raw) : lat(&l) {
    if (int(raw.size()) != l.n) fail(errc::precondition_not_met, "partition arity mismatch");
    block_of.assign(l.n, -1);
    std::map<int, int> renumber;
    for (int x = 0; x < l.n; ++x) {
        auto [it, fresh] = renumber.try_emplace(raw[x], int(renumber.size()));
        block_of[x] = it->second;
        (void)fresh;
    }
    block_count = int(renumber.size());
}

bool Congruence::leq(const Congruence& other) const {
    std::vector<int> image(block_count, -1);
    for (int x = 0; x < lat->n; ++x) {
        int& img = image[block_of[x]];
        if (img < 0)
            img = other.block_of[x];
        else if (img != other.block_of[x])
            return false;
    }
    return true;
}

std::vector<std::vector<int>> Congruence::blocks() const {
    std::vector<std::vector<int>> bs(block_count);
    for (int x = 0; x < lat->n; ++x) bs[block_of[x]].push_back(x);
    return bs;
}

std::string Congruence::to_string() const {
    std::string out;
    for (auto& b : blocks()) {
        out += out.empty() ? "{" : " {";
        for (size_t i = 0; i < b.size(); ++i) {
            if (i) out += ',';
            out += lat->labels[b[i]];
        }
        out += '}';
    }
    return out;
}

Congruence identity_congruence(const FiniteLattice& l) {
    std::vector<int> ids(l.n);
    std::iota(ids.begin(), ids.end(), 0);
    return Congruence(l, std::move(ids));
}

Congruence all_congruence(const FiniteLattice& l) {
    return Congruence(l, std::vector<int>(l.n, 0));
}

namespace {

struct UnionFind {
    std::vector<int> parent;
    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
    int find(int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    }
};

}  // namespace

Congruence congruence_closure(const FiniteLattice& l,
                              const std::vector<std::pair<int, int>>& pairs) {
    UnionFind uf(l.n);
    std::deque<std::pair<int, int>> work;
    auto unite = [&](int x, int y) {
        int rx = uf.find(x), ry = uf.find(y);
        if (rx == ry) return;
        uf.parent[rx] = ry;
        work.emplace_back(rx, ry);
    };
    for (auto [a, b] : pairs) unite(a, b);
    while (!work.empty()) {
        auto [x, y] = work.front();
        work.pop_front();
        for (int z = 0; z < l.n; ++z) {
            unite(l.meet(x, z), l.meet(y, z));
            unite(l.join(x, z), l.join(y, z));
        }
    }
    std::vector<int> ids(l.n);
    for (int x = 0; x < l.n; ++x) ids[x] = uf.find(x);
    return Congruence(l, std::move(ids));
}

Congruence principal_congruence(const FiniteLattice& l, int a, int b) {
    return congruence_closure(l, {{a, b}});
}

Congruence cong_meet(const Congruence& a, const Congruence& b) {
    const FiniteLattice& l = *a.lat;
    std::vector<int> ids(l.n);
    for (int x = 0; x < l.n; ++x) ids[x] = a.block_of[x] * (b.block_count + 1) + b.block_of[x];
    return Congruence(l, std::move(ids));
}

Congruence cong_join(const Congruence& a, const Congruence& b) {
    const FiniteLattice& l = *a.lat;
    std::vector<std::pair<int, int>> pairs;
    auto add_blocks = [&](const Congruence& c) {
        std::vector<int> first(c.block_count, -1);
        for (int x = 0; x < l.n; ++x) {
            int bid = c.block_of[x];
            if (first[bid] < 0)
                first[bid] = x;
            else
                pairs.emplace_back(first[bid], x);
        }
    };
    add_blocks(a);
    add_blocks(b);
    return congruence_closure(l, pairs);
}

int ConLattice::index_of(const Congruence& c) const {
    for (int i = 0; i < int(elems.size()); ++i)
        if (elems[i] == c) return i;
    return -1;
}

ConLattice congruence_lattice(const FiniteLattice& l) {
    check_size_cap(l.n, "congruence lattice input");
    // principal congruences of covering pairs generate Con L under join
    std::vector<Congruence> gens;
    auto push_unique = [](std::vector<Congruence>& v, Congruence c) {
        for (auto& e : v)
            if (e == c) return false;
        v.push_back(std::move(c));
        return true;
    };
    for (auto [x, y] : l.covers()) push_unique(gens, principal_congruence(l, x, y));

    std::vector<Congruence> elems{identity_congruence(l)};
    std::deque<int> todo{0};
    while (!todo.empty()) {
        int i = todo.front();
        todo.pop_front();
        for (auto& g : gens) {
            Congruence j = cong_join(elems[i], g);
            if (push_unique(elems, j)) todo.push_back(int(elems.size()) - 1);
        }
        check_size_cap(int(elems.size()), "Con(" + l.name + ")");
    }
    std::sort(elems.begin(), elems.end(), [](const Congruence& a, const Congruence& b) {
        if (a.block_count != b.block_count) return a.block_count > b.block_count;
        return a.block_of < b.block_of;
    });

    ConLattice con;
    std::vector<std::string> labels;
    for (size_t i = 0; i < elems.size(); ++i) labels.push_back("c" + std::to_string(i));
    con.lat = lattice_from_order("Con(" + l.name + ")", std::move(labels),
                                 [&](int i, int j) { return elems[i].leq(elems[j]); });
    con.elems = std::move(elems);
    return con;
}

bool is_simple(const FiniteLattice& l) {
    if (l.n < 2) return false;
    return congruence_lattice(l).lat.n == 2;
}

Congruence restrict_congruence(const Congruence& theta, const LatticeHom& embed) {
    if (!embed.injective) fail(errc::not_injective, "restriction needs an injective homomorphism");
    if (theta.lat != embed.target)
        fail(errc::precondition_not_met, "congruence lives on the wrong lattice");
    const FiniteLattice& l = *embed.source;
    std::vector<int> ids(l.n);
    for (int x = 0; x < l.n; ++x) ids[x] = theta.block_of[embed(x)];
    Congruence r(l, std::move(ids));
    for (int x = 0; x < l.n; ++x)
        for (int y = 0; y < l.n; ++y) {
            if (!r.same(x, y)) continue;
            for (int z = 0; z < l.n; ++z)
                if (!r.same(l.meet(x, z), l.meet(y, z)) || !r.same(l.join(x, z), l.join(y, z)))
                    fail(errc::precondition_not_met, "restriction is not a congruence");
        }
    return r;
}

std::vector<Congruence> all_congruences_bruteforce(const FiniteLattice& l) {
    if (l.n > 8) fail(errc::size_cap_exceeded, "partition oracle limited to 8 elements");
    std::vector<Congruence> out;
    std::vector<int> rgs(l.n, 0);
    auto compatible = [&]() {
        for (int x = 0; x < l.n; ++x)
            for (int y = x + 1; y < l.n; ++y) {
                if (rgs[x] != rgs[y]) continue;
                for (int z = 0; z < l.n; ++z)
                    if (rgs[l.meet(x, z)] != rgs[l.meet(y, z)] ||
                        rgs[l.join(x, z)] != rgs[l.join(y, z)])
                        return false;
            }
        return true;
    };
    // restricted growth strings enumerate set partitions exactly once
    std::function<void(int, int)> rec = [&](int i, int maxid) {
        if (i == l.n) {
            if (compatible()) out.emplace_back(l, rgs);
            return;
        }
        for (int v = 0; v <= maxid + 1; ++v) {
            rgs[i] = v;
            rec(i + 1, std::max(maxid, v));
        }
    };
    rec(0, -1);
    return out;
}

}  // namespace boxlat
