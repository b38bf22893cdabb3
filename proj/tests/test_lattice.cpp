#include <doctest.h>

#include "boxlat/lattice.hpp"

using namespace boxlat;

namespace {

void check_algebra_laws(const FiniteLattice& l) {
    for (int x = 0; x < l.n; ++x)
        for (int y = 0; y < l.n; ++y) {
            REQUIRE(l.meet(x, y) == l.meet(y, x));
            REQUIRE(l.join(x, y) == l.join(y, x));
            REQUIRE(l.meet(x, l.join(x, y)) == x);  // absorption
            REQUIRE(l.join(x, l.meet(x, y)) == x);
            REQUIRE((l.leq(x, y) == (l.meet(x, y) == x)));
            REQUIRE((l.leq(x, y) == (l.join(x, y) == y)));
        }
    for (int x = 0; x < l.n; ++x)
        for (int y = 0; y < l.n; ++y)
            for (int z = 0; z < l.n; ++z) {
                REQUIRE(l.meet(l.meet(x, y), z) == l.meet(x, l.meet(y, z)));
                REQUIRE(l.join(l.join(x, y), z) == l.join(x, l.join(y, z)));
            }
}

}  // namespace

TEST_CASE("two-element chain from covers") {
    auto l = lattice_from_covers("two", {"0", "1"}, std::vector<std::pair<int, int>>{{0, 1}});
    CHECK(l.n == 2);
    CHECK(l.zero == 0);
    CHECK(l.one == 1);
    CHECK(l.meet(0, 1) == 0);
    CHECK(l.join(0, 1) == 1);
}

TEST_CASE("M3 from covers has three atoms meeting to zero") {
    auto m3 = catalog("M3");
    CHECK(m3.n == 5);
    CHECK(m3.height() == 2);
    int p = m3.index_of("p"), q = m3.index_of("q"), r = m3.index_of("r");
    CHECK(m3.meet(p, q) == m3.zero);
    CHECK(m3.join(p, q) == m3.one);
    CHECK(m3.meet(q, r) == m3.zero);
    int atoms = 0;
    for (int x = 0; x < m3.n; ++x)
        if (m3.height_of[x] == 1) ++atoms;
    CHECK(atoms == 3);
}

TEST_CASE("four-cycle poset is not a lattice") {
    // 0 < a,b < c,d : a and b have no unique join
    std::vector<std::pair<int, int>> covers{{0, 1}, {0, 2}, {1, 3}, {1, 4}, {2, 3}, {2, 4}};
    CHECK_THROWS_AS(lattice_from_covers("bad", {"0", "a", "b", "c", "d"}, covers), error);
    try {
        lattice_from_covers("bad", {"0", "a", "b", "c", "d"}, covers);
    } catch (const error& e) {
        CHECK(e.code() == errc::not_a_lattice);
        CHECK(std::string(e.what()).find("a") != std::string::npos);
    }
}

TEST_CASE("cyclic covers are not a poset") {
    std::vector<std::pair<int, int>> covers{{0, 1}, {1, 2}, {2, 0}};
    CHECK_THROWS_AS(lattice_from_covers("cyc", {"x", "y", "z"}, covers), error);
    try {
        lattice_from_covers("cyc", {"x", "y", "z"}, covers);
    } catch (const error& e) {
        CHECK(e.code() == errc::not_a_poset);
    }
}

TEST_CASE("catalog basics") {
    CHECK(catalog("chain(1)").n == 1);
    CHECK(catalog("chain(3)").n == 3);
    CHECK(catalog("boolean(2)").n == 4);
    CHECK(catalog("N5").n == 5);
    CHECK_THROWS_AS(catalog("Z7"), error);
    auto b2 = catalog("boolean(2)");
    auto grid = direct_product(catalog("chain(2)"), catalog("chain(2)"));
    CHECK(find_isomorphism(b2, grid).has_value());
}

TEST_CASE("meet and join tables satisfy the lattice laws") {
    for (const char* name : {"chain(4)", "M3", "N5", "boolean(3)", "FD(3)"})
        check_algebra_laws(catalog(name));
}

TEST_CASE("dual is an involution and preserves distributivity") {
    for (const char* name : {"chain(3)", "M3", "N5", "boolean(2)"}) {
        auto l = catalog(name);
        auto dd = dual(dual(l));
        CHECK(dd.meet_tab == l.meet_tab);
        CHECK(dd.join_tab == l.join_tab);
        CHECK(dd.zero == l.zero);
        CHECK(is_distributive(l) == is_distributive(dual(l)));
    }
    CHECK(find_isomorphism(catalog("M3"), dual(catalog("M3"))).has_value());
    auto c3 = catalog("chain(3)");
    auto d = dual(c3);
    CHECK(d.zero == c3.one);  // indices kept, order reversed
    auto iso = find_isomorphism(c3, d);
    REQUIRE(iso.has_value());
    CHECK((*iso)[0] == 2);
}

TEST_CASE("pentagon is self-dual by swapping the chain fiber") {
    auto n5 = catalog("N5");
    auto iso = find_isomorphism(n5, dual(n5));
    REQUIRE(iso.has_value());
    int a = n5.index_of("a"), c = n5.index_of("c");
    CHECK((*iso)[a] == c);
    CHECK((*iso)[c] == a);
}

TEST_CASE("direct products") {
    auto g = direct_product(catalog("chain(2)"), catalog("chain(3)"));
    CHECK(g.n == 6);
    CHECK(g.height() == 3);
    auto m = direct_product(catalog("M3"), catalog("M3"));
    CHECK(m.n == 25);
    config().max_elements = 20;
    CHECK_THROWS_AS(direct_product(catalog("M3"), catalog("M3")), error);
    config().max_elements = 4096;
}

TEST_CASE("distributivity verdicts") {
    CHECK(is_distributive(catalog("chain(3)")));
    CHECK(is_distributive(catalog("boolean(3)")));
    CHECK_FALSE(is_distributive(catalog("M3")));
    CHECK_FALSE(is_distributive(catalog("N5")));
}

TEST_CASE("isomorphism search distinguishes the five-element lattices") {
    CHECK_FALSE(find_isomorphism(catalog("M3"), catalog("N5")).has_value());
    auto id = find_isomorphism(catalog("M3"), catalog("M3"));
    REQUIRE(id.has_value());
    CHECK_FALSE(find_isomorphism(catalog("chain(4)"), catalog("boolean(2)")).has_value());
}

TEST_CASE("homomorphisms and one-sensitivity") {
    auto c2 = catalog("chain(2)");
    CHECK(is_one_sensitive(identity_hom(catalog("M3"))));
    LatticeHom collapse(c2, c2, {0, 0});
    CHECK_FALSE(is_one_sensitive(collapse));
    CHECK(collapse.preserves_zero);
    CHECK_FALSE(collapse.preserves_one);
    CHECK_FALSE(collapse.injective);
    // a map that is not a homomorphism is rejected
    auto m3 = catalog("M3");
    std::vector<int> bad(5);
    bad[m3.zero] = m3.zero;
    bad[m3.one] = m3.one;
    bad[m3.index_of("p")] = m3.index_of("p");
    bad[m3.index_of("q")] = m3.index_of("p");
    bad[m3.index_of("r")] = m3.index_of("r");
    CHECK_THROWS_AS(LatticeHom(m3, m3, bad), error);
}

TEST_CASE("principal filter inclusion is one-sensitive") {
    auto n5 = catalog("N5");
    int b = n5.index_of("b");
    auto [filt, incl] = sublattice(n5, n5.up[b].to_vector(), "[b)");
    LatticeHom f(filt, n5, incl);
    CHECK(is_one_sensitive(f));
    CHECK(f.injective);
    CHECK_FALSE(f.preserves_zero);
}
