#include <doctest.h>

#include "boxlat/upperset.hpp"

using namespace boxlat;

TEST_CASE("free distributive lattice sizes") {
    CHECK(free_distributive(1).lat.n == 1);
    CHECK(free_distributive(2).lat.n == 4);
    CHECK(free_distributive(3).lat.n == 18);
    CHECK_THROWS_AS(free_distributive(5), error);
}

TEST_CASE("generators are marked and join/meet as expected") {
    auto fd = free_distributive(2);
    int g0 = fd.generator_idx[0], g1 = fd.generator_idx[1];
    REQUIRE(g0 >= 0);
    REQUIRE(g1 >= 0);
    int meet = fd.lat.meet(g0, g1), join = fd.lat.join(g0, g1);
    CHECK(fd.elems[meet].to_string() == "01");
    CHECK(fd.elems[join].to_string() == "0|1");
    CHECK(fd.lat.zero == meet);
    CHECK(fd.lat.one == join);
}

TEST_CASE("star is the identity in arity one and matches the hand value in arity two") {
    auto fd1 = free_distributive(1);
    CHECK(star(fd1.elems[0]) == fd1.elems[0]);

    // c = {{0},{0,1}} over two generators
    Bits m(4);
    m.set(0b01);
    m.set(0b11);
    UpperSet c(2, m);
    CHECK(star(c) == c);
}

TEST_CASE("star is an involution on FD(3)") {
    auto fd = free_distributive(3);
    for (auto& c : fd.elems) CHECK(star(star(c)) == c);
}

TEST_CASE("polynomial evaluation") {
    auto c3 = catalog("chain(3)");
    // top-meet-only set: the polynomial is the join of all arguments
    {
        Bits m(4);
        m.set(0b11);
        UpperSet c(2, m);
        CHECK(eval_polynomial(c, {1, 2}, c3) == 2);
        CHECK(eval_polynomial(c, {0, 1}, c3) == 1);
    }
    // every singleton present: the polynomial is the meet of all arguments
    {
        Bits m(4);
        m.set(0b01);
        m.set(0b10);
        m.set(0b11);
        UpperSet c(2, m);
        CHECK(eval_polynomial(c, {1, 2}, c3) == 1);
        CHECK(eval_polynomial(c, {2, 0}, c3) == 0);
    }
    // c = {{0},{0,1}}: meet(x0, x0 v x1) = x0
    {
        Bits m(4);
        m.set(0b01);
        m.set(0b11);
        UpperSet c(2, m);
        CHECK(eval_polynomial(c, {1, 2}, c3) == 1);
    }
    CHECK_THROWS_AS(eval_polynomial(free_distributive(2).elems[0], {0}, c3), error);
}

TEST_CASE("polynomials are monotone in each argument over a distributive lattice") {
    auto c3 = catalog("chain(3)");
    auto fd = free_distributive(2);
    for (auto& c : fd.elems)
        for (int x0 = 0; x0 < 3; ++x0)
            for (int x1 = 0; x1 < 3; ++x1)
                for (int y0 = x0; y0 < 3; ++y0)
                    for (int y1 = x1; y1 < 3; ++y1) {
                        int lo = eval_polynomial(c, {x0, x1}, c3);
                        int hi = eval_polynomial(c, {y0, y1}, c3);
                        CHECK(c3.leq(lo, hi));
                    }
}

TEST_CASE("upper set invariants are enforced") {
    Bits missing_full(4);
    missing_full.set(0b01);
    CHECK_THROWS_AS(UpperSet(2, missing_full), error);
    Bits with_empty(4);
    with_empty.set(0b00);
    with_empty.set(0b11);
    CHECK_THROWS_AS(UpperSet(2, with_empty), error);
    Bits not_upward(8);  // arity 3: {0} present but {0,1} missing
    not_upward.set(0b001);
    not_upward.set(0b111);
    CHECK_THROWS_AS(UpperSet(3, not_upward), error);
}
