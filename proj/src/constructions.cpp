#include "boxlat/constructions.hpp"

#include <algorithm>

namespace boxlat {

int TripleLattice::index_of(const std::array<int, 3>& t) const {
    for (int i = 0; i < int(members.size()); ++i)
        if (members[i] == t) return i;
    return -1;
}

namespace {

const char* kind_name(TripleKind k) {
    switch (k) {
        case TripleKind::m3_square: return "M3[";
        case TripleKind::n5_square: return "N5[";
        case TripleKind::m3_angle: return "M3<";
        case TripleKind::n5_angle: return "N5<";
    }
    return "?";
}

bool triple_member(const FiniteLattice& l, TripleKind k, int x, int y, int z) {
    switch (k) {
        case TripleKind::m3_square:
            return l.meet(x, y) == l.meet(x, z) && l.meet(x, z) == l.meet(y, z);
        case TripleKind::n5_square:
            return l.leq(l.meet(y, z), x) && l.leq(x, z);
        case TripleKind::m3_angle: {
            int xh = l.join(y, z), yh = l.join(x, z), zh = l.join(x, y);
            return x == l.meet(yh, zh) && y == l.meet(xh, zh) && z == l.meet(xh, yh);
        }
        case TripleKind::n5_angle:
            return x == l.meet(z, l.join(x, y));
    }
    return false;
}

TripleLattice build_triple(const FiniteLattice& l, TripleKind k) {
    check_size_cap((long long)l.n * l.n * l.n, "triple scan over " + l.name);
    TripleLattice t;
    t.base = &l;
    t.kind = k;
    for (int x = 0; x < l.n; ++x)
        for (int y = 0; y < l.n; ++y)
            for (int z = 0; z < l.n; ++z)
                if (triple_member(l, k, x, y, z)) t.members.push_back({x, y, z});
    std::sort(t.members.begin(), t.members.end(),
              [&](const std::array<int, 3>& u, const std::array<int, 3>& v) {
                  int hu = l.height_of[u[0]] + l.height_of[u[1]] + l.height_of[u[2]];
                  int hv = l.height_of[v[0]] + l.height_of[v[1]] + l.height_of[v[2]];
                  if (hu != hv) return hu < hv;
                  return u < v;
              });
    std::vector<std::string> labels;
    for (auto& m : t.members)
        labels.push_back("(" + l.labels[m[0]] + "," + l.labels[m[1]] + "," + l.labels[m[2]] + ")");
    std::string name = std::string(kind_name(k)) + l.name +
                       (k == TripleKind::m3_square || k == TripleKind::n5_square ? "]" : ">");
    t.lat = lattice_from_order(std::move(name), std::move(labels), [&](int i, int j) {
        return l.leq(t.members[i][0], t.members[j][0]) && l.leq(t.members[i][1], t.members[j][1]) &&
               l.leq(t.members[i][2], t.members[j][2]);
    });
    return t;
}

}  // namespace

TripleLattice m3_of(const FiniteLattice& l) { return build_triple(l, TripleKind::m3_square); }
TripleLattice n5_of(const FiniteLattice& l) { return build_triple(l, TripleKind::n5_square); }
TripleLattice m3_angle(const FiniteLattice& l) { return build_triple(l, TripleKind::m3_angle); }
TripleLattice n5_angle(const FiniteLattice& l) { return build_triple(l, TripleKind::n5_angle); }

std::vector<int> alpha_iso(const TensorLattice& t, const TripleLattice& triple) {
    const FiniteLattice& s = *t.grid.A;  // diamond or pentagon
    const FiniteLattice& l = *t.grid.B;
    bool diamond =
        triple.kind == TripleKind::m3_square || triple.kind == TripleKind::m3_angle;
    // generator images on join-irreducible first coordinates
    std::vector<std::array<int, 3>> image_of(s.n, {-1, -1, -1});
    auto coord = [&](const char* label) {
        int i = s.index_of(label);
        if (i < 0) fail(errc::precondition_not_met, "first factor is not the expected lattice");
        return i;
    };
    std::vector<int> irreducibles;
    if (diamond) {
        image_of[coord("p")] = {1, 0, 0};
        image_of[coord("q")] = {0, 1, 0};
        image_of[coord("r")] = {0, 0, 1};
        irreducibles = {coord("p"), coord("q"), coord("r")};
    } else {
        image_of[coord("a")] = {1, 0, 1};
        image_of[coord("b")] = {0, 1, 0};
        image_of[coord("c")] = {0, 0, 1};
        irreducibles = {coord("a"), coord("b"), coord("c")};
    }

    auto tensor_image = [&](int u, int x) {
        // a pure tensor splits over the irreducibles below its first coordinate
        int acc = triple.index_of({l.zero, l.zero, l.zero});
        for (int j : irreducibles) {
            if (!s.leq(j, u)) continue;
            std::array<int, 3> pat = image_of[j];
            std::array<int, 3> im;
            for (int c = 0; c < 3; ++c) im[c] = pat[c] ? x : l.zero;
            int idx = triple.index_of(im);
            if (idx < 0) fail(errc::not_bijective, "generator image misses the triple lattice");
            acc = triple.lat.join(acc, idx);
        }
        return acc;
    };

    std::vector<int> map(t.elems.size(), -1);
    std::vector<int> hit(triple.members.size(), 0);
    for (size_t i = 0; i < t.elems.size(); ++i) {
        int acc = triple.index_of({l.zero, l.zero, l.zero});
        for (auto [u, x] : t.grid.maximal_pairs(t.elems[i]))
            acc = triple.lat.join(acc, tensor_image(u, x));
        map[i] = acc;
        ++hit[acc];
    }
    if (t.elems.size() != triple.members.size())
        fail(errc::not_bijective, "tensor product and triple lattice sizes differ: " +
                                      std::to_string(t.elems.size()) + " vs " +
                                      std::to_string(triple.members.size()));
    for (int h : hit)
        if (h != 1) fail(errc::not_bijective, "generator images do not extend to a bijection");
    // the unique extension must be a {∨,0}-homomorphism
    for (size_t i = 0; i < t.elems.size(); ++i)
        for (size_t j = 0; j <= i; ++j) {
            int join_t = t.lat.join(int(i), int(j));
            if (map[join_t] != triple.lat.join(map[i], map[j]))
                fail(errc::not_bijective, "extension fails to preserve joins");
        }
    return map;
}

EmbeddingReport cong_preserving_embedding(const FiniteLattice& s, const FiniteLattice& l) {
    if (!is_simple(s)) fail(errc::not_simple, s.name + " is not simple");
    BoxProduct bp = lattice_tensor_product(s, l);
    std::vector<int> m(l.n);
    for (int x = 0; x < l.n; ++x) {
        int i = bp.index_of(bp.grid.pure_box(s.zero, x));
        if (i < 0) fail(errc::precondition_not_met, "box of (0,x) missing from the product");
        m[x] = i;
    }
    LatticeHom embed(l, bp.lat, std::move(m));
    EmbeddingReport rep;
    if (!embed.injective) {
        rep.detail = "map x -> (0 box x) is not injective";
        return rep;
    }
    ConLattice con_big = congruence_lattice(bp.lat);
    ConLattice con_l = congruence_lattice(l);
    rep.con_product = con_big.lat.n;
    rep.con_base = con_l.lat.n;
    std::vector<int> restricted(con_big.lat.n, -1), seen(con_l.lat.n, 0);
    for (int i = 0; i < con_big.lat.n; ++i) {
        Congruence r = restrict_congruence(con_big.elems[i], embed);
        int j = con_l.index_of(r);
        if (j < 0) {
            rep.detail = "restriction left Con(" + l.name + ")";
            return rep;
        }
        restricted[i] = j;
        if (seen[j]++) {
            rep.detail = "restriction collides on " + r.to_string();
            return rep;
        }
    }
    if (con_big.lat.n != con_l.lat.n) {
        rep.detail = "congruence counts differ";
        return rep;
    }
    rep.ok = true;
    rep.detail = "restriction is a bijection on " + std::to_string(con_l.lat.n) + " congruences";
    return rep;
}

}  // namespace boxlat
