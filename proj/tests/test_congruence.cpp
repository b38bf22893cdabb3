#include <doctest.h>

#include <algorithm>

#include "boxlat/congruence.hpp"

using namespace boxlat;

TEST_CASE("principal congruences, basic shapes") {
    auto c3 = catalog("chain(3)");
    CHECK(principal_congruence(c3, 1, 1).is_identity());
    auto t = principal_congruence(c3, 0, 1);
    CHECK(t.block_count == 2);
    CHECK(t.same(0, 1));
    CHECK_FALSE(t.same(1, 2));

    auto m3 = catalog("M3");
    CHECK(principal_congruence(m3, m3.zero, m3.index_of("p")).is_all());
}

TEST_CASE("theta of a pair equals theta of meet and join") {
    for (const char* name : {"M3", "N5", "chain(4)", "boolean(2)"}) {
        auto l = catalog(name);
        for (int a = 0; a < l.n; ++a)
            for (int b = 0; b < l.n; ++b)
                CHECK(principal_congruence(l, a, b) ==
                      principal_congruence(l, l.meet(a, b), l.join(a, b)));
    }
}

TEST_CASE("congruence lattices of the stock lattices") {
    CHECK(congruence_lattice(catalog("M3")).lat.n == 2);
    auto con_c3 = congruence_lattice(catalog("chain(3)"));
    CHECK(con_c3.lat.n == 4);
    CHECK(find_isomorphism(con_c3.lat, catalog("boolean(2)")).has_value());
    // regression value from the partition oracle below
    CHECK(congruence_lattice(catalog("N5")).lat.n == 5);
}

TEST_CASE("join closure agrees with the partition enumeration oracle") {
    for (const char* name : {"chain(3)", "M3", "N5", "boolean(2)", "chain(4)"}) {
        auto l = catalog(name);
        auto con = congruence_lattice(l);
        auto oracle = all_congruences_bruteforce(l);
        REQUIRE(con.lat.n == int(oracle.size()));
        for (auto& c : oracle) CHECK(con.index_of(c) >= 0);
    }
}

TEST_CASE("congruence lattices are distributive") {
    for (const char* name : {"chain(3)", "M3", "N5", "boolean(2)"})
        CHECK(is_distributive(congruence_lattice(catalog(name)).lat));
}

TEST_CASE("congruence blocks respect meet and join") {
    auto n5 = catalog("N5");
    for (auto& theta : congruence_lattice(n5).elems)
        for (int x = 0; x < n5.n; ++x)
            for (int y = 0; y < n5.n; ++y) {
                if (!theta.same(x, y)) continue;
                for (int z = 0; z < n5.n; ++z) {
                    CHECK(theta.same(n5.meet(x, z), n5.meet(y, z)));
                    CHECK(theta.same(n5.join(x, z), n5.join(y, z)));
                }
            }
}

TEST_CASE("every congruence is the join of the principal congruences below it") {
    for (const char* name : {"chain(4)", "M3", "N5", "boolean(2)"}) {
        auto l = catalog(name);
        auto con = congruence_lattice(l);
        for (auto& theta : con.elems) {
            Congruence acc = identity_congruence(l);
            for (int a = 0; a < l.n; ++a)
                for (int b = a + 1; b < l.n; ++b) {
                    if (!theta.same(a, b)) continue;
                    acc = cong_join(acc, principal_congruence(l, a, b));
                }
            CHECK(acc == theta);
        }
    }
}

TEST_CASE("simplicity") {
    CHECK(is_simple(catalog("M3")));
    CHECK(is_simple(catalog("chain(2)")));
    CHECK_FALSE(is_simple(catalog("chain(3)")));
    CHECK_FALSE(is_simple(catalog("chain(1)")));
    CHECK_FALSE(is_simple(catalog("N5")));
}

TEST_CASE("restriction along an embedding") {
    auto c3 = catalog("chain(3)");
    auto c2 = catalog("chain(2)");
    LatticeHom embed(c2, c3, {0, 1});

    auto theta = principal_congruence(c3, 0, 1);  // {{0,1},{2}}
    auto r = restrict_congruence(theta, embed);
    CHECK(r.is_all());  // both images collapse

    CHECK(restrict_congruence(identity_congruence(c3), embed).is_identity());
    CHECK(restrict_congruence(all_congruence(c3), embed).is_all());

    LatticeHom collapse(c2, c2, {0, 0});
    CHECK_THROWS_AS(restrict_congruence(identity_congruence(c2), collapse), error);
}

TEST_CASE("meet and join of congruences") {
    auto n5 = catalog("N5");
    auto con = congruence_lattice(n5);
    for (int i = 0; i < con.lat.n; ++i)
        for (int j = 0; j < con.lat.n; ++j) {
            auto m = cong_meet(con.elems[i], con.elems[j]);
            auto jn = cong_join(con.elems[i], con.elems[j]);
            CHECK(con.index_of(m) == con.lat.meet(i, j));
            CHECK(con.index_of(jn) == con.lat.join(i, j));
        }
}
