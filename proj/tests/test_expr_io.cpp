#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "boxlat/expr.hpp"
#include "boxlat/io.hpp"

using namespace boxlat;

TEST_CASE("parsing construction expressions") {
    auto e = parse_expr("box(M3, N5)");
    CHECK(e.kind == ConstructionExpr::Kind::call);
    CHECK(e.name == "box");
    REQUIRE(e.args.size() == 2);
    CHECK(e.args[0].name == "M3");
    CHECK(e.print() == "box(M3,N5)");

    auto nested = parse_expr("con(ltp(M3, chain(3)))");
    CHECK(nested.print() == "con(ltp(M3,chain(3)))");

    // parse-print round trip on a sample of shapes
    for (const char* s : {"M3", "dual(N5)", "tensor(chain(2),boolean(2))",
                          "m3angle(prod(chain(2),chain(2)))", "con(box(M3,M3))"}) {
        auto ast = parse_expr(s);
        CHECK(parse_expr(ast.print()).print() == ast.print());
    }
}

TEST_CASE("parse errors carry positions and kinds") {
    try {
        parse_expr("box(M3");
        FAIL("expected a syntax error");
    } catch (const error& e) {
        CHECK(e.code() == errc::syntax_error);
        CHECK(std::string(e.what()).find("offset 6") != std::string::npos);
    }
    CHECK_THROWS_AS(parse_expr(""), error);
    CHECK_THROWS_AS(parse_expr("box(M3,)"), error);

    Evaluator ev;
    try {
        ev.evaluate("frob(M3)");
        FAIL("expected an unknown operator");
    } catch (const error& e) {
        CHECK(e.code() == errc::unknown_operator);
    }
    try {
        ev.evaluate("box(M3)");
        FAIL("expected an arity mismatch");
    } catch (const error& e) {
        CHECK(e.code() == errc::arity_mismatch);
    }
}

TEST_CASE("evaluation dispatches and memoizes") {
    Evaluator ev;
    auto l1 = ev.evaluate("dual(dual(N5))");
    CHECK(find_isomorphism(*l1, catalog("N5")).has_value());
    auto con = ev.evaluate("con(M3)");
    CHECK(find_isomorphism(*con, catalog("chain(2)")).has_value());
    // memoization returns the same object
    CHECK(ev.evaluate("con(M3)").get() == con.get());
    // tensor(M3,M3) is the triple construction in disguise
    auto t = ev.evaluate("tensor(M3,M3)");
    auto tri = ev.evaluate("m3(M3)");
    CHECK(find_isomorphism(*t, *tri).has_value());
    // propagated errors carry the offending subexpression
    try {
        ev.evaluate("con(chain(0))");
        FAIL("expected failure");
    } catch (const error& e) {
        CHECK(std::string(e.what()).find("chain(0)") != std::string::npos);
    }
}

TEST_CASE("JSON round trip preserves labels and structure") {
    for (const char* name : {"M3", "N5", "chain(3)", "boolean(2)"}) {
        auto l = catalog(name);
        std::string doc = to_json(l);
        auto back = lattice_from_json(doc);
        CHECK(back.n == l.n);
        auto iso = find_isomorphism(l, back);
        REQUIRE(iso.has_value());
        for (int i = 0; i < l.n; ++i) CHECK(back.labels[(*iso)[i]] == l.labels[i]);
        // byte-reproducible
        CHECK(to_json(lattice_from_json(doc)) == to_json(lattice_from_json(doc)));
    }
    CHECK_THROWS_AS(lattice_from_json("{"), error);
    CHECK_THROWS_AS(lattice_from_json("{\"elements\": [\"a\"]}"), error);
}

TEST_CASE("JSON files load through the evaluator") {
    auto l = catalog("N5");
    std::string path = "n5_roundtrip_test.json";
    {
        std::ofstream f(path);
        f << to_json(l);
    }
    Evaluator ev;
    auto back = ev.evaluate("con(" + path + ")");
    CHECK(back->n == 5);
    std::remove(path.c_str());
}

TEST_CASE("DOT export shape") {
    auto dot = to_dot(catalog("M3"));
    CHECK(dot.find("digraph") == 0);
    size_t nodes = 0, edges = 0, pos = 0;
    while ((pos = dot.find("label=", pos)) != std::string::npos) {
        ++nodes;
        ++pos;
    }
    pos = 0;
    while ((pos = dot.find(" -> ", pos)) != std::string::npos) {
        ++edges;
        ++pos;
    }
    CHECK(nodes == 5);
    CHECK(edges == 6);
    CHECK(dot.find("rank=same") != std::string::npos);
    CHECK(to_dot(catalog("M3")) == dot);
}
