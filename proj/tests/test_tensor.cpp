#include <doctest.h>

#include <algorithm>

#include "boxlat/grid.hpp"

using namespace boxlat;

TEST_CASE("pure tensors: degenerate shapes") {
    auto c2 = catalog("chain(2)");
    Grid g(c2, c2);
    CHECK(g.pure_tensor(0, 1) == g.bottom);           // 0 (x) b collapses to the bottom
    CHECK(g.pure_tensor(1, 0) == g.bottom);           // a (x) 0 likewise
    CHECK(g.pure_tensor(c2.one, c2.one) == g.full);   // 1 (x) 1 = everything
    CHECK(g.pure_tensor(1, 1).count() == 4);
    CHECK(g.bottom.count() == 3);
}

TEST_CASE("bi-ideal closure basics") {
    auto m3 = catalog("M3");
    Grid g(m3, m3);
    CHECK(g.bi_ideal_closure(Bits(g.cells)) == g.bottom);
    for (int i = 0; i < g.cells; ++i) {
        Bits single(g.cells);
        single.set(i);
        CHECK(g.bi_ideal_closure(single) == g.tensors[i]);
    }
}

TEST_CASE("closure returns the least bi-ideal containing the seed") {
    auto m3 = catalog("M3");
    Grid g(m3, m3);
    auto all = all_bi_ideals_bruteforce(g);
    int p = m3.index_of("p"), q = m3.index_of("q");
    Bits seed(g.cells);
    seed.set(g.idx(p, q));
    seed.set(g.idx(q, p));
    Bits closed = g.bi_ideal_closure(seed);
    CHECK(g.is_bi_ideal(closed));
    for (auto& h : all)
        if (seed.subset_of(h)) CHECK(closed.subset_of(h));
}

TEST_CASE("closure is idempotent and every bi-ideal closes to itself") {
    for (auto [na, nb] : {std::pair{"M3", "chain(3)"}, {"N5", "N5"}}) {
        auto a = catalog(na), b = catalog(nb);
        Grid g(a, b);
        for (auto& h : all_bi_ideals_bruteforce(g)) {
            CHECK(g.bi_ideal_closure(h) == h);
        }
    }
}

TEST_CASE("tensor product enumeration matches the brute-force oracle") {
    for (auto [na, nb] :
         {std::pair{"chain(2)", "chain(2)"}, {"chain(2)", "chain(3)"}, {"M3", "M3"}, {"M3", "N5"}}) {
        auto a = catalog(na), b = catalog(nb);
        TensorLattice t = tensor_product(a, b);
        auto oracle = all_bi_ideals_bruteforce(t.grid);
        REQUIRE(t.elems.size() == oracle.size());
        for (auto& h : oracle) CHECK(t.index_of(h) >= 0);
    }
}

TEST_CASE("the two-element chain is the tensor unit") {
    auto c2 = catalog("chain(2)");
    CHECK(find_isomorphism(tensor_product(c2, c2).lat, c2).has_value());
    auto n5 = catalog("N5");
    CHECK(find_isomorphism(tensor_product(c2, n5).lat, n5).has_value());
}

TEST_CASE("tensor with the one-element lattice collapses") {
    auto c1 = catalog("chain(1)");
    auto m3 = catalog("M3");
    CHECK(tensor_product(m3, c1).lat.n == 1);
}

TEST_CASE("arithmetical identities for pure tensors") {
    auto a = catalog("M3"), b = catalog("N5");
    TensorLattice t = tensor_product(a, b);
    const Grid& g = t.grid;
    for (int a0 = 0; a0 < a.n; ++a0)
        for (int a1 = 0; a1 < a.n; ++a1)
            for (int b0 = 0; b0 < b.n; ++b0)
                for (int b1 = 0; b1 < b.n; ++b1) {
                    // intersection identity
                    CHECK((g.pure_tensor(a0, b0) & g.pure_tensor(a1, b1)) ==
                          g.pure_tensor(a.meet(a0, a1), b.meet(b0, b1)));
                    // join identity: union of four pure tensors
                    int i0 = t.index_of(g.pure_tensor(a0, b0));
                    int i1 = t.index_of(g.pure_tensor(a1, b1));
                    Bits expect = g.pure_tensor(a0, b0) | g.pure_tensor(a1, b1) |
                                  g.pure_tensor(a.join(a0, a1), b.meet(b0, b1)) |
                                  g.pure_tensor(a.meet(a0, a1), b.join(b0, b1));
                    CHECK(t.elems[t.lat.join(i0, i1)] == expect);
                }
}

TEST_CASE("bimorphism identities in the second coordinate") {
    auto a = catalog("M3"), b = catalog("N5");
    TensorLattice t = tensor_product(a, b);
    const Grid& g = t.grid;
    for (int x = 0; x < a.n; ++x) {
        CHECK(g.pure_tensor(x, b.zero) == g.bottom);
        for (int y0 = 0; y0 < b.n; ++y0)
            for (int y1 = 0; y1 < b.n; ++y1) {
                int i0 = t.index_of(g.pure_tensor(x, y0));
                int i1 = t.index_of(g.pure_tensor(x, y1));
                CHECK(t.elems[t.lat.join(i0, i1)] == g.pure_tensor(x, b.join(y0, y1)));
            }
    }
}

TEST_CASE("mixed tensors") {
    auto a = catalog("N5"), b = catalog("N5");
    Grid g(a, b);
    int x0 = a.index_of("c"), x1 = a.index_of("a");
    int y0 = b.index_of("a"), y1 = b.index_of("c");
    // x0 <= x1 and y0 >= y1: union is already a bi-ideal
    Bits m = g.mixed_tensor(x0, y0, x1, y1);
    CHECK(m == (g.pure_tensor(x0, y0) | g.pure_tensor(x1, y1)));
    // degenerate mixed tensor is a pure tensor
    CHECK(g.mixed_tensor(x0, y0, x0, y0) == g.pure_tensor(x0, y0));
    // incomparable crossing is rejected
    int p = a.index_of("b");
    CHECK_THROWS_AS(g.mixed_tensor(x0, y0, p, y0), error);
}

TEST_CASE("mixed tensor union equals the simple-form join") {
    auto a = catalog("M3"), b = catalog("M3");
    TensorLattice t = tensor_product(a, b);
    const Grid& g = t.grid;
    for (int a0 = 0; a0 < a.n; ++a0)
        for (int a1 = 0; a1 < a.n; ++a1) {
            if (!a.leq(a0, a1)) continue;
            for (int b0 = 0; b0 < b.n; ++b0)
                for (int b1 = 0; b1 < b.n; ++b1) {
                    if (!b.leq(b1, b0)) continue;
                    int i0 = t.index_of(g.pure_tensor(a0, b0));
                    int i1 = t.index_of(g.pure_tensor(a1, b1));
                    CHECK(t.elems[t.lat.join(i0, i1)] ==
                          (g.pure_tensor(a0, b0) | g.pure_tensor(a1, b1)));
                }
        }
}

TEST_CASE("cappedness of elements and lattices") {
    auto m3 = catalog("M3");
    TensorLattice t = tensor_product(m3, m3);
    CHECK(is_capped(t));
    for (auto& h : t.elems) CHECK(t.grid.is_capped_element(h));
}

TEST_CASE("sub-tensor-product predicate") {
    auto c2 = catalog("chain(2)");
    TensorLattice t = tensor_product(c2, c2);
    CHECK(is_sub_tensor_product(t.grid, t.elems));
    std::string why;
    CHECK_FALSE(is_sub_tensor_product(t.grid, {t.grid.bottom}, &why));
    CHECK(why.find("mixed") != std::string::npos);
}

TEST_CASE("exhaustive sub-tensor-product search on tiny grids") {
    for (auto name : {"chain(2)", "chain(3)", "M3"}) {
        auto a = catalog("chain(2)"), b = catalog(name);
        TensorLattice t = tensor_product(a, b);
        auto subs = all_sub_tensor_products(t);
        CHECK(!subs.empty());
        // the full tensor product is always among them
        bool has_full = false;
        for (auto& c : subs)
            if (c.size() == t.elems.size()) has_full = true;
        CHECK(has_full);
    }
}

TEST_CASE("tensor functor on morphisms") {
    auto c2 = catalog("chain(2)"), c3 = catalog("chain(3)");
    auto m3 = catalog("M3");
    TensorLattice s = tensor_product(m3, c2);
    TensorLattice t = tensor_product(m3, c3);
    LatticeHom f = identity_hom(m3);
    LatticeHom g(c2, c3, {0, 2});
    JoinHom fg = tensor_product_hom(s, t, f, g);
    for (int x = 0; x < m3.n; ++x)
        for (int y = 0; y < c2.n; ++y) {
            int i = s.index_of(s.grid.pure_tensor(x, y));
            CHECK(t.elems[fg(i)] == t.grid.pure_tensor(x, g(y)));
        }
    // non-zero-preserving maps are rejected
    LatticeHom bad(c2, c3, {1, 2});
    CHECK_THROWS_AS(tensor_product_hom(s, t, f, bad), error);
}
