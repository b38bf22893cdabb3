#include "boxlat/grid.hpp"

#include <algorithm>

namespace boxlat {

Grid::Grid(const FiniteLattice& a, const FiniteLattice& b) : A(&a), B(&b) {
    na = a.n;
    nb = b.n;
    cells = na * nb;
    check_size_cap(cells, "grid " + a.name + " x " + b.name);
    boxes.assign(cells, Bits(cells));
    circs.assign(cells, Bits(cells));
    tensors.assign(cells, Bits(cells));
    upboxes.assign(cells, Bits(cells));
    full = Bits::ones(cells);
    for (int x = 0; x < na; ++x)
        for (int y = 0; y < nb; ++y) {
            int i = idx(x, y);
            for (int u = 0; u < na; ++u)
                for (int v = 0; v < nb; ++v) {
                    bool ua = a.leq(u, x), vb = b.leq(v, y);
                    if (ua || vb) boxes[i].set(idx(u, v));
                    if (ua && vb) circs[i].set(idx(u, v));
                    if (a.leq(x, u) || b.leq(y, v)) upboxes[i].set(idx(u, v));
                }
        }
    bottom = boxes[idx(a.zero, b.zero)];
    for (int i = 0; i < cells; ++i) tensors[i] = circs[i] | bottom;
}

bool Grid::is_bi_ideal(const Bits& h) const {
    if (!bottom.subset_of(h)) return false;
    for (int i = h.lowest(); i >= 0; i = h.next(i))
        if (!circs[i].subset_of(h)) return false;  // hereditary
    for (int y = 0; y < nb; ++y)
        for (int x0 = 0; x0 < na; ++x0) {
            if (!h.test(idx(x0, y))) continue;
            for (int x1 = x0 + 1; x1 < na; ++x1)
                if (h.test(idx(x1, y)) && !h.test(idx(A->join(x0, x1), y))) return false;
        }
    for (int x = 0; x < na; ++x)
        for (int y0 = 0; y0 < nb; ++y0) {
            if (!h.test(idx(x, y0))) continue;
            for (int y1 = y0 + 1; y1 < nb; ++y1)
                if (h.test(idx(x, y1)) && !h.test(idx(x, B->join(y0, y1)))) return false;
        }
    return true;
}

Bits Grid::bi_ideal_closure(Bits x) const {
    Bits h = x | bottom;
    for (bool changed = true; changed;) {
        changed = false;
        Bits down(cells);
        for (int i = h.lowest(); i >= 0; i = h.next(i)) down |= circs[i];
        if (down != h) {
            h = down;
            changed = true;
        }
        for (int y = 0; y < nb; ++y) {
            for (int x0 = 0; x0 < na; ++x0) {
                if (!h.test(idx(x0, y))) continue;
                for (int x1 = x0 + 1; x1 < na; ++x1) {
                    if (!h.test(idx(x1, y))) continue;
                    int j = idx(A->join(x0, x1), y);
                    if (!h.test(j)) {
                        h.set(j);
                        changed = true;
                    }
                }
            }
        }
        for (int xx = 0; xx < na; ++xx) {
            for (int y0 = 0; y0 < nb; ++y0) {
                if (!h.test(idx(xx, y0))) continue;
                for (int y1 = y0 + 1; y1 < nb; ++y1) {
                    if (!h.test(idx(xx, y1))) continue;
                    int j = idx(xx, B->join(y0, y1));
                    if (!h.test(j)) {
                        h.set(j);
                        changed = true;
                    }
                }
            }
        }
    }
    return h;
}

std::vector<std::pair<int, int>> Grid::maximal_pairs(const Bits& h) const {
    std::vector<std::pair<int, int>> out;
    for (int i = h.lowest(); i >= 0; i = h.next(i)) {
        auto [x, y] = unidx(i);
        bool maximal = true;
        for (int j = h.lowest(); j >= 0 && maximal; j = h.next(j)) {
            if (j == i) continue;
            auto [u, v] = unidx(j);
            if (A->leq(x, u) && B->leq(y, v)) maximal = false;
        }
        if (maximal) out.emplace_back(x, y);
    }
    return out;
}

bool Grid::is_capped_element(const Bits& h) const {
    Bits u(cells);
    for (auto [x, y] : maximal_pairs(h)) u |= tensors[idx(x, y)];
    return u == h;
}

Bits Grid::mixed_tensor(int a0, int b0, int a1, int b1) const {
    bool down_up = A->leq(a0, a1) && B->leq(b1, b0);
    bool up_down = A->leq(a1, a0) && B->leq(b0, b1);
    if (!down_up && !up_down)
        fail(errc::not_comparable, "mixed tensor needs comparably crossed arguments");
    Bits m = tensors[idx(a0, b0)] | tensors[idx(a1, b1)];
    if (!is_bi_ideal(m)) fail(errc::precondition_not_met, "mixed tensor failed bi-ideal check");
    return m;
}

std::vector<Bits> Grid::all_mixed_tensors() const {
    std::vector<Bits> out;
    auto push = [&](const Bits& m) {
        for (auto& e : out)
            if (e == m) return;
        out.push_back(m);
    };
    for (int a0 = 0; a0 < na; ++a0)
        for (int a1 = 0; a1 < na; ++a1) {
            if (!A->leq(a0, a1)) continue;
            for (int b0 = 0; b0 < nb; ++b0)
                for (int b1 = 0; b1 < nb; ++b1)
                    if (B->leq(b1, b0)) push(tensors[idx(a0, b0)] | tensors[idx(a1, b1)]);
        }
    return out;
}

std::string Grid::pair_list(const Bits& h) const {
    std::string out;
    for (int i = h.lowest(); i >= 0; i = h.next(i)) {
        auto [x, y] = unidx(i);
        out += "(" + A->labels[x] + "," + B->labels[y] + ")";
    }
    return out;
}

namespace {

void sort_and_index(std::vector<Bits>& elems, std::unordered_map<Bits, int, BitsHash>& index) {
    std::sort(elems.begin(), elems.end(), [](const Bits& a, const Bits& b) {
        if (a.count() != b.count()) return a.count() < b.count();
        return a < b;
    });
    index.clear();
    for (int i = 0; i < int(elems.size()); ++i) index[elems[i]] = i;
}

}  // namespace

TensorLattice tensor_product(const FiniteLattice& a, const FiniteLattice& b) {
    TensorLattice t;
    t.grid = Grid(a, b);
    const Grid& g = t.grid;

    std::vector<Bits>& elems = t.elems;
    auto& index = t.index;
    auto add = [&](const Bits& h) {
        if (index.count(h)) return false;
        index[h] = int(elems.size());
        elems.push_back(h);
        return true;
    };
    add(g.bottom);
    for (int i = 0; i < g.cells; ++i) add(g.tensors[i]);
    for (size_t i = 1; i < elems.size(); ++i) {
        for (size_t j = 0; j < i; ++j) {
            Bits u = elems[i] | elems[j];
            if (index.count(u)) continue;
            add(g.bi_ideal_closure(u));
        }
        check_size_cap((long long)(elems.size()), "tensor product " + a.name + " (x) " + b.name);
    }
    sort_and_index(elems, index);

    std::vector<std::string> labels;
    for (size_t i = 0; i < elems.size(); ++i) labels.push_back("t" + std::to_string(i));
    t.lat = lattice_from_order("tensor(" + a.name + "," + b.name + ")", std::move(labels),
                               [&](int i, int j) { return elems[i].subset_of(elems[j]); });
    return t;
}

std::vector<Bits> all_bi_ideals_bruteforce(const Grid& g) {
    if (g.cells > 36) fail(errc::size_cap_exceeded, "bi-ideal oracle limited to 36 cells");
    const FiniteLattice& a = *g.A;
    const FiniteLattice& b = *g.B;
    // nonempty ideals of A, as bitsets over A
    std::vector<Bits> ideals;
    for (uint64_t s = 1; s < (1ull << a.n); ++s) {
        if (!(s & (1ull << a.zero))) continue;
        bool ok = true;
        for (int x = 0; x < a.n && ok; ++x) {
            if (!((s >> x) & 1)) continue;
            for (int y = 0; y < a.n && ok; ++y) {
                if (a.leq(y, x) && !((s >> y) & 1)) ok = false;
                if (((s >> y) & 1) && !((s >> a.join(x, y)) & 1)) ok = false;
            }
        }
        if (!ok) continue;
        Bits m(a.n);
        for (int x = 0; x < a.n; ++x)
            if ((s >> x) & 1) m.set(x);
        ideals.push_back(std::move(m));
    }

    std::vector<Bits> out;
    std::vector<int> pick(b.n, -1);  // ideal index per column
    std::function<void(int)> rec = [&](int y) {
        if (y == b.n) {
            Bits h(g.cells);
            for (int v = 0; v < b.n; ++v)
                ideals[pick[v]].for_each([&](int x) { h.set(g.idx(x, v)); });
            if (g.is_bi_ideal(h)) out.push_back(std::move(h));
            return;
        }
        for (int i = 0; i < int(ideals.size()); ++i) {
            // antitone in the column: larger b gets a smaller ideal
            bool ok = true;
            for (int v = 0; v < y && ok; ++v) {
                if (b.leq(v, y) && !ideals[i].subset_of(ideals[pick[v]])) ok = false;
                if (b.leq(y, v) && !ideals[pick[v]].subset_of(ideals[i])) ok = false;
            }
            if (!ok) continue;
            pick[y] = i;
            rec(y + 1);
        }
    };
    rec(0);
    std::sort(out.begin(), out.end(), [](const Bits& x, const Bits& y) {
        if (x.count() != y.count()) return x.count() < y.count();
        return x < y;
    });
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool is_sub_tensor_product(const Grid& g, const std::vector<Bits>& c, std::string* why) {
    auto contains = [&](const Bits& h) {
        for (auto& e : c)
            if (e == h) return true;
        return false;
    };
    auto explain = [&](const std::string& msg) {
        if (why) *why = msg;
        return false;
    };
    if (c.empty()) return explain("empty family");
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < i; ++j)
            if (!contains(c[i] & c[j])) return explain("not closed under intersection");
    // lattice under containment: meets are intersections; joins must exist
    for (size_t i = 0; i < c.size(); ++i)
        for (size_t j = 0; j < i; ++j) {
            int best = -1;
            for (size_t k = 0; k < c.size(); ++k) {
                if (!c[i].subset_of(c[k]) || !c[j].subset_of(c[k])) continue;
                if (best < 0 || c[k].subset_of(c[best])) best = int(k);
            }
            if (best < 0) return explain("pair without an upper bound");
            for (size_t k = 0; k < c.size(); ++k)
                if (c[i].subset_of(c[k]) && c[j].subset_of(c[k]) && !c[best].subset_of(c[k]))
                    return explain("pair without a least upper bound");
        }
    for (auto& m : g.all_mixed_tensors())
        if (!contains(m)) return explain("missing mixed tensor " + g.pair_list(m));
    return true;
}

bool is_capped(const TensorLattice& t) {
    for (auto& h : t.elems)
        if (!t.grid.is_capped_element(h)) return false;
    return true;
}

std::vector<std::vector<Bits>> all_sub_tensor_products(const TensorLattice& t) {
    const Grid& g = t.grid;
    std::vector<Bits> mandatory = g.all_mixed_tensors();
    std::vector<Bits> optional;
    for (auto& e : t.elems) {
        bool is_mand = false;
        for (auto& m : mandatory)
            if (m == e) is_mand = true;
        if (!is_mand) optional.push_back(e);
    }
    if (optional.size() > 20)
        fail(errc::size_cap_exceeded, "sub-tensor-product search limited to 20 free elements");
    std::vector<std::vector<Bits>> found;
    for (uint64_t mask = 0; mask < (1ull << optional.size()); ++mask) {
        std::vector<Bits> c = mandatory;
        for (size_t i = 0; i < optional.size(); ++i)
            if ((mask >> i) & 1) c.push_back(optional[i]);
        if (is_sub_tensor_product(g, c)) found.push_back(std::move(c));
    }
    return found;
}

JoinHom::JoinHom(const FiniteLattice& src, const FiniteLattice& tgt, std::vector<int> m)
    : source(&src), target(&tgt), map(std::move(m)) {
    if (int(map.size()) != src.n) fail(errc::precondition_not_met, "join-hom map has wrong arity");
    if (map[src.zero] != tgt.zero)
        fail(errc::not_zero_preserving, "map does not send zero to zero");
    for (int x = 0; x < src.n; ++x)
        for (int y = x; y < src.n; ++y)
            if (map[src.join(x, y)] != tgt.join(map[x], map[y]))
                fail(errc::precondition_not_met, "map does not preserve joins");
}

JoinHom tensor_product_hom(const TensorLattice& s, const TensorLattice& t, const LatticeHom& f,
                           const LatticeHom& g) {
    if (!f.preserves_zero || !g.preserves_zero)
        fail(errc::not_zero_preserving, "tensor functor needs zero-preserving maps");
    std::vector<int> m(s.elems.size());
    for (size_t i = 0; i < s.elems.size(); ++i) {
        Bits image(t.grid.cells);
        s.elems[i].for_each([&](int cell) {
            auto [x, y] = s.grid.unidx(cell);
            image.set(t.grid.idx(f(x), g(y)));
        });
        int j = t.index_of(t.grid.bi_ideal_closure(image));
        if (j < 0) fail(errc::precondition_not_met, "tensor image escaped the codomain");
        m[i] = j;
    }
    return JoinHom(s.lat, t.lat, std::move(m));
}

}  // namespace boxlat
