#include "boxlat/boxprod.hpp"

#include <algorithm>

namespace boxlat {

Bits triangle_up(const Grid& g, const Bits& x) {
    Bits acc = g.full;
    x.for_each([&](int i) { acc &= g.upboxes[i]; });
    return acc;
}

Bits triangle_down(const Grid& g, const Bits& x) {
    Bits acc = g.full;
    x.for_each([&](int i) { acc &= g.boxes[i]; });
    return acc;
}

Bits box_closure_galois(const Grid& g, const Bits& x) {
    return triangle_down(g, triangle_up(g, x));
}

Bits box_closure_oracle(const Grid& g, const Bits& x) {
    Bits acc = g.full;
    for (int i = 0; i < g.cells; ++i)
        if (x.subset_of(g.boxes[i])) acc &= g.boxes[i];
    return acc;
}

Bits BoxDot::set_of(const Grid& g) const {
    Bits h(g.cells);
    for (auto [a, b] : box_terms) h |= g.pure_box(a, b);
    for (auto [a, b] : circ_terms) h |= g.pure_circ(a, b);
    return h;
}

BoxDot boxdot_from_terms(const Grid& g, const std::vector<std::pair<int, int>>& boxes,
                         const std::vector<std::pair<int, int>>& circs,
                         const std::vector<std::pair<int, int>>& tensors) {
    BoxDot d;
    d.box_terms = boxes;
    d.circ_terms = circs;
    for (auto t : tensors) d.circ_terms.push_back(t);
    if (!tensors.empty() || d.box_terms.empty())
        d.box_terms.emplace_back(g.A->zero, g.B->zero);
    return d;
}

Bits box_closure_formula(const Grid& g, const BoxDot& h,
                         std::vector<std::pair<int, int>>* gens_out) {
    if (h.box_terms.empty()) fail(errc::precondition_not_met, "decomposition needs a box term");
    int n = int(h.circ_terms.size());
    if (n > 16) fail(errc::size_cap_exceeded, "closure formula limited to 16 circ terms");
    const FiniteLattice& la = *g.A;
    const FiniteLattice& lb = *g.B;
    int abar = la.zero, bbar = lb.zero;
    for (auto [a, b] : h.box_terms) {
        abar = la.join(abar, a);
        bbar = lb.join(bbar, b);
    }
    Bits acc = g.full;
    if (gens_out) gens_out->clear();
    for (unsigned x = 0; x < (1u << n); ++x) {
        int u = abar, v = bbar;
        for (int j = 0; j < n; ++j) {
            if ((x >> j) & 1)
                u = la.join(u, h.circ_terms[j].first);
            else
                v = lb.join(v, h.circ_terms[j].second);
        }
        acc &= g.pure_box(u, v);
        if (gens_out) gens_out->emplace_back(u, v);
    }
    return acc;
}

bool box_leq_criterion(const FiniteLattice& a_lat, const FiniteLattice& b_lat,
                       const std::vector<std::pair<int, int>>& gens, int a, int b) {
    if (gens.empty()) fail(errc::precondition_not_met, "criterion needs at least one generator");
    if (gens.size() > 20) fail(errc::size_cap_exceeded, "criterion limited to 20 generators");
    if (a == a_lat.one || b == b_lat.one) return true;
    int n = int(gens.size());
    auto meet_a = [&](unsigned mask) {
        int m = a_lat.one;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) m = a_lat.meet(m, gens[i].first);
        return m;
    };
    auto meet_b = [&](unsigned mask) {
        int m = b_lat.one;
        for (int i = 0; i < n; ++i)
            if ((mask >> i) & 1) m = b_lat.meet(m, gens[i].second);
        return m;
    };
    unsigned all = (1u << n) - 1;
    if (!a_lat.leq(meet_a(all), a) || !b_lat.leq(meet_b(all), b)) return false;
    for (unsigned x = 1; x < all; ++x)
        if (!a_lat.leq(meet_a(x), a) && !b_lat.leq(meet_b(all & ~x), b)) return false;
    return true;
}

bool box_equal_criterion(const FiniteLattice& a_lat, const FiniteLattice& b_lat,
                         const std::vector<std::pair<int, int>>& gens1,
                         const std::vector<std::pair<int, int>>& gens2) {
    for (auto [a, b] : gens2)
        if (!box_leq_criterion(a_lat, b_lat, gens1, a, b)) return false;
    for (auto [a, b] : gens1)
        if (!box_leq_criterion(a_lat, b_lat, gens2, a, b)) return false;
    return true;
}

std::vector<std::pair<int, int>> canonical_generators(const Grid& g, const Bits& h) {
    Bits above = triangle_up(g, h);
    std::vector<std::pair<int, int>> mins;
    above.for_each([&](int i) {
        auto [x, y] = g.unidx(i);
        bool minimal = true;
        for (int j = above.lowest(); j >= 0 && minimal; j = above.next(j)) {
            if (j == i) continue;
            auto [u, v] = g.unidx(j);
            if (g.A->leq(u, x) && g.B->leq(v, y)) minimal = false;
        }
        if (minimal) mins.emplace_back(x, y);
    });
    // greedy irredundant reduction, keeping cell-index order
    for (size_t i = 0; i < mins.size() && mins.size() > 1;) {
        Bits rest = g.full;
        for (size_t j = 0; j < mins.size(); ++j)
            if (j != i) rest &= g.pure_box(mins[j].first, mins[j].second);
        if (rest == h)
            mins.erase(mins.begin() + i);
        else
            ++i;
    }
    return mins;
}

namespace {

BoxProduct enumerate_box_product(const FiniteLattice& a, const FiniteLattice& b,
                                 const std::string& name) {
    BoxProduct bp;
    bp.grid = Grid(a, b);
    const Grid& g = bp.grid;

    auto add = [&](const Bits& h) {
        if (bp.index.count(h)) return false;
        bp.index[h] = int(bp.elems.size());
        bp.elems.push_back(h);
        return true;
    };
    for (int i = 0; i < g.cells; ++i) add(g.boxes[i]);
    for (size_t i = 1; i < bp.elems.size(); ++i) {
        for (size_t j = 0; j < i; ++j) add(bp.elems[i] & bp.elems[j]);
        check_size_cap((long long)(bp.elems.size()), name);
    }
    std::sort(bp.elems.begin(), bp.elems.end(), [](const Bits& x, const Bits& y) {
        if (x.count() != y.count()) return x.count() < y.count();
        return x < y;
    });
    bp.index.clear();
    for (int i = 0; i < int(bp.elems.size()); ++i) bp.index[bp.elems[i]] = i;
    bp.gens.resize(bp.elems.size());
    for (size_t i = 0; i < bp.elems.size(); ++i)
        bp.gens[i] = canonical_generators(g, bp.elems[i]);

    std::vector<std::string> labels;
    for (size_t i = 0; i < bp.elems.size(); ++i) labels.push_back("e" + std::to_string(i));
    bp.lat = lattice_from_order(name, std::move(labels), [&](int i, int j) {
        return bp.elems[i].subset_of(bp.elems[j]);
    });
    return bp;
}

}  // namespace

std::string BoxProduct::describe(int i) const {
    std::string out = "{";
    for (size_t k = 0; k < gens[i].size(); ++k) {
        auto [a, b] = gens[i][k];
        if (k) out += " ";
        out += grid.A->labels[a] + "[]" + grid.B->labels[b];
    }
    out += "}#" + std::to_string(elems[i].count());
    return out;
}

BoxProduct box_product(const FiniteLattice& a, const FiniteLattice& b) {
    return enumerate_box_product(a, b, "box(" + a.name + "," + b.name + ")");
}

BoxProduct lattice_tensor_product(const FiniteLattice& a, const FiniteLattice& b) {
    if (!ltp_defined(a, b).defined) fail(errc::not_defined, "lattice tensor product undefined");
    BoxProduct bp = enumerate_box_product(a, b, "ltp(" + a.name + "," + b.name + ")");
    // restrict to the confined elements; with bounded factors nothing drops
    std::vector<int> keep;
    for (int i = 0; i < int(bp.elems.size()); ++i) {
        bool confined = false;
        for (int c = 0; c < bp.grid.cells && !confined; ++c)
            if (bp.elems[i].subset_of(bp.grid.tensors[c])) confined = true;
        if (confined) keep.push_back(i);
    }
    if (int(keep.size()) == int(bp.elems.size())) return bp;
    BoxProduct out;
    out.grid = bp.grid;
    std::vector<std::string> labels;
    for (int i : keep) {
        out.index[bp.elems[i]] = int(out.elems.size());
        out.elems.push_back(bp.elems[i]);
        out.gens.push_back(bp.gens[i]);
        labels.push_back("e" + std::to_string(out.elems.size() - 1));
    }
    out.lat = lattice_from_order("ltp(" + a.name + "," + b.name + ")", std::move(labels),
                                 [&](int i, int j) { return out.elems[i].subset_of(out.elems[j]); });
    return out;
}

std::string LtpExistence::reason() const {
    if (!defined) return "neither factor bounded, factors lack common zero or unit";
    std::string r;
    auto add = [&](bool flag, const char* what) {
        if (!flag) return;
        if (!r.empty()) r += ", ";
        r += what;
    };
    add(both_zero, "both factors have zero");
    add(both_unit, "both factors have unit");
    add(a_bounded, "left factor bounded");
    add(b_bounded, "right factor bounded");
    return r;
}

LtpExistence ltp_defined(BoundMask a, BoundMask b) {
    LtpExistence e;
    e.both_zero = a.has_zero && b.has_zero;
    e.both_unit = a.has_unit && b.has_unit;
    e.a_bounded = a.has_zero && a.has_unit;
    e.b_bounded = b.has_zero && b.has_unit;
    e.defined = e.both_zero || e.both_unit || e.a_bounded || e.b_bounded;
    return e;
}

LtpExistence ltp_defined(const FiniteLattice&, const FiniteLattice&) {
    return ltp_defined(BoundMask{}, BoundMask{});
}

Bits box_join_polynomial(const Grid& g, const std::vector<std::pair<int, int>>& gens_h,
                         const std::vector<std::pair<int, int>>& gens_k,
                         std::vector<std::pair<int, int>>* gens_out) {
    const FiniteLattice& la = *g.A;
    const FiniteLattice& lb = *g.B;
    int m = int(gens_h.size()), n = int(gens_k.size());
    if (m < 1 || n < 1) fail(errc::precondition_not_met, "join needs nonempty generator lists");
    long long t = (1ll << m) + (1ll << n) - 4;
    if (t > config().join_exponent_cap)
        fail(errc::generator_overflow,
             "2^" + std::to_string(m) + " + 2^" + std::to_string(n) + " - 4 exceeds the cap");

    // the fixed enumeration of proper nonempty subsets: first factor in
    // increasing mask order, then second factor
    std::vector<int> mk, nk;
    auto meet_masked = [](const FiniteLattice& l, const std::vector<std::pair<int, int>>& gens,
                          unsigned mask, bool first) {
        int r = l.one;
        for (size_t i = 0; i < gens.size(); ++i)
            if ((mask >> i) & 1) r = l.meet(r, first ? gens[i].first : gens[i].second);
        return r;
    };
    for (unsigned x = 1; x + 1 < (1u << m); ++x) {
        mk.push_back(meet_masked(la, gens_h, x, true));
        nk.push_back(meet_masked(lb, gens_h, ((1u << m) - 1) & ~x, false));
    }
    for (unsigned y = 1; y + 1 < (1u << n); ++y) {
        mk.push_back(meet_masked(la, gens_k, y, true));
        nk.push_back(meet_masked(lb, gens_k, ((1u << n) - 1) & ~y, false));
    }

    int base_u = la.join(meet_masked(la, gens_h, (1u << m) - 1, true),
                         meet_masked(la, gens_k, (1u << n) - 1, true));
    int base_v = lb.join(meet_masked(lb, gens_h, (1u << m) - 1, false),
                         meet_masked(lb, gens_k, (1u << n) - 1, false));

    Bits acc = g.full;
    if (gens_out) gens_out->clear();
    for (uint64_t z = 0; z < (1ull << t); ++z) {
        int u = base_u, v = base_v;
        for (int k = 0; k < t; ++k) {
            if ((z >> k) & 1)
                u = la.join(u, mk[k]);
            else
                v = lb.join(v, nk[k]);
        }
        acc &= g.pure_box(u, v);
        if (gens_out) gens_out->emplace_back(u, v);
    }
    return acc;
}

Bits box_join(const Grid& g, const std::vector<std::pair<int, int>>& gens_h,
              const std::vector<std::pair<int, int>>& gens_k) {
    if (gens_h.empty() || gens_k.empty())
        fail(errc::precondition_not_met, "join needs nonempty generator lists");
    if (gens_h.size() < 60 && gens_k.size() < 60) {
        long long t = (1ll << gens_h.size()) + (1ll << gens_k.size()) - 4;
        if (t <= config().join_exponent_cap) return box_join_polynomial(g, gens_h, gens_k);
    }
    Bits h = g.full, k = g.full;
    for (auto [a, b] : gens_h) h &= g.pure_box(a, b);
    for (auto [a, b] : gens_k) k &= g.pure_box(a, b);
    return box_closure_galois(g, h | k);
}

std::vector<std::pair<int, int>> normalized_generators(const Grid& g, const Bits& h) {
    auto gens = canonical_generators(g, h);
    const FiniteLattice& la = *g.A;
    const FiniteLattice& lb = *g.B;
    int abar = la.zero, bbar = lb.zero, amin = la.one, bmin = lb.one;
    h.for_each([&](int i) {
        auto [x, y] = g.unidx(i);
        if (y != lb.zero) abar = la.join(abar, x);
        if (x != la.zero) bbar = lb.join(bbar, y);
    });
    for (auto [a, b] : gens) {
        amin = la.meet(amin, a);
        bmin = lb.meet(bmin, b);
    }
    if (amin != la.zero) gens.emplace_back(la.zero, bbar);
    if (bmin != lb.zero) gens.emplace_back(abar, lb.zero);
    Bits check = g.full;
    for (auto [a, b] : gens) check &= g.pure_box(a, b);
    if (check != h) fail(errc::not_confined, "normalization changed the element");
    return gens;
}

std::vector<std::pair<int, int>> join_basis_decomposition(const Grid& g, const Bits& h) {
    const FiniteLattice& la = *g.A;
    const FiniteLattice& lb = *g.B;
    {
        bool confined = false;
        for (int c = 0; c < g.cells && !confined; ++c)
            if (h.subset_of(g.tensors[c])) confined = true;
        if (!confined) fail(errc::not_confined, "element is not below any pure tensor");
    }
    auto gens = normalized_generators(g, h);
    int n = int(gens.size());
    if (n > 16) fail(errc::size_cap_exceeded, "decomposition limited to 16 generators");
    std::vector<std::pair<int, int>> tensors;
    for (unsigned x = 1; x + 1 < (1u << n); ++x) {
        int u = la.one, v = lb.one;
        for (int i = 0; i < n; ++i) {
            if ((x >> i) & 1)
                u = la.meet(u, gens[i].first);
            else
                v = lb.meet(v, gens[i].second);
        }
        if (u == la.zero || v == lb.zero) continue;  // contributes only bottom
        tensors.emplace_back(u, v);
    }
    // drop dominated pairs and duplicates
    std::sort(tensors.begin(), tensors.end());
    tensors.erase(std::unique(tensors.begin(), tensors.end()), tensors.end());
    for (size_t i = 0; i < tensors.size();) {
        bool dominated = false;
        for (size_t j = 0; j < tensors.size() && !dominated; ++j)
            if (i != j && la.leq(tensors[i].first, tensors[j].first) &&
                lb.leq(tensors[i].second, tensors[j].second))
                dominated = true;
        if (dominated)
            tensors.erase(tensors.begin() + i);
        else
            ++i;
    }
    if (tensors.empty()) tensors.emplace_back(la.zero, lb.zero);
    Bits u(g.cells);
    for (auto [a, b] : tensors) u |= g.pure_tensor(a, b);
    if (u != h) fail(errc::not_confined, "decomposition does not rebuild the element");
    return tensors;
}

std::vector<int> duality_map(const BoxProduct& dual_box, const BoxProduct& ltp) {
    const Grid& g = ltp.grid;
    if (dual_box.grid.cells != g.cells)
        fail(errc::precondition_not_met, "duality map needs matching grids");
    std::vector<int> map(dual_box.elems.size(), -1);
    std::vector<int> seen(ltp.elems.size(), 0);
    for (size_t i = 0; i < dual_box.elems.size(); ++i) {
        Bits image = triangle_down(g, dual_box.elems[i]);
        int j = ltp.index_of(image);
        if (j < 0) fail(errc::not_bijective, "dual element image missing from the tensor product");
        if (seen[j]++) fail(errc::not_bijective, "dual elements collide in the tensor product");
        map[i] = j;
    }
    if (dual_box.elems.size() != ltp.elems.size())
        fail(errc::not_bijective, "element counts differ");
    // order reversal
    for (size_t i = 0; i < dual_box.elems.size(); ++i)
        for (size_t j = 0; j < dual_box.elems.size(); ++j)
            if (dual_box.elems[i].subset_of(dual_box.elems[j]) &&
                !ltp.elems[map[j]].subset_of(ltp.elems[map[i]]))
                fail(errc::not_bijective, "map fails to reverse the order");
    return map;
}

LatticeHom hom_box(const BoxProduct& src, const BoxProduct& dst, const LatticeHom& f,
                   const LatticeHom& g) {
    if (!is_one_sensitive(f) || !is_one_sensitive(g))
        fail(errc::not_one_sensitive, "box functor needs one-sensitive maps");
    std::vector<int> m(src.elems.size());
    for (size_t i = 0; i < src.elems.size(); ++i) {
        Bits image = dst.grid.full;
        for (auto [a, b] : src.gens[i]) image &= dst.grid.pure_box(f(a), g(b));
        int j = dst.index_of(image);
        if (j < 0) fail(errc::precondition_not_met, "box image escaped the codomain");
        m[i] = j;
    }
    return LatticeHom(src.lat, dst.lat, std::move(m));
}

LatticeHom hom_ltp(const BoxProduct& src, const BoxProduct& dst, const LatticeHom& f,
                   const LatticeHom& g) {
    if (!f.preserves_zero || !g.preserves_zero)
        fail(errc::not_zero_preserving, "tensor functor needs zero-preserving maps");
    std::vector<int> m(src.elems.size());
    for (size_t i = 0; i < src.elems.size(); ++i) {
        Bits image(dst.grid.cells);
        src.elems[i].for_each([&](int cell) {
            auto [x, y] = src.grid.unidx(cell);
            image |= dst.grid.pure_tensor(f(x), g(y));
        });
        int j = dst.index_of(image);
        if (j < 0) fail(errc::precondition_not_met, "tensor image escaped the codomain");
        m[i] = j;
    }
    return LatticeHom(src.lat, dst.lat, std::move(m));
}

JoinHom retraction_rho(const TensorLattice& t, const BoxProduct& ltp) {
    if (t.grid.cells != ltp.grid.cells)
        fail(errc::precondition_not_met, "retraction needs matching grids");
    std::vector<int> m(t.elems.size());
    for (size_t i = 0; i < t.elems.size(); ++i) {
        int j = ltp.index_of(box_closure_galois(ltp.grid, t.elems[i]));
        if (j < 0) fail(errc::precondition_not_met, "closure escaped the tensor product");
        m[i] = j;
    }
    return JoinHom(t.lat, ltp.lat, std::move(m));
}

}  // namespace boxlat
