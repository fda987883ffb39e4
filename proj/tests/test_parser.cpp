#include "doctest.h"

#include "lodual/parser.hpp"

using namespace lodual;

TEST_CASE("ring block parses") {
    ParsedFile pf = parse_input("ring A\n  gen c 2\nend\n");
    RingPtr r = pf.ring("A");
    REQUIRE(r);
    CHECK(r->rank() == 1);
    CHECK(r->generator_degree(0) == 2);
}

TEST_CASE("odd generator degree is rejected") {
    CHECK_THROWS_AS(parse_input("ring A\n  gen c 3\nend\n"), ParseError);
}

TEST_CASE("module block parses and realizes") {
    const char* text =
        "# A/(c^2) over Q[c]\n"
        "ring A\n"
        "  gen c 2\n"
        "end\n"
        "module M over A\n"
        "  generators 0\n"
        "  relation c^2\n"
        "end\n";
    ParsedFile pf = parse_input(text);
    const auto* m = pf.module("M");
    REQUIRE(m);
    auto h = hilbert_function(*m, DegreeWindow(0, 6));
    CHECK(h[0] == 1);
    CHECK(h[2] == 1);
    CHECK(h[4] == 0);
}

TEST_CASE("mixed-degree relation is rejected with a location") {
    const char* text =
        "ring A\n"
        "  gen x 2\n"
        "  gen y 2\n"
        "end\n"
        "module M over A\n"
        "  generators 0 4\n"
        "  relation x, x\n"
        "end\n";
    try {
        parse_input(text);
        FAIL("expected a ParseError");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).find("relation") != std::string::npos);
    }
}

TEST_CASE("polynomial expressions") {
    RingPtr r = make_ring("A", {{"x", 2}, {"y", 2}});
    PolynomialElement p = parse_polynomial("x^2 - 1/2*x*y + 3*y^2", r);
    PolynomialElement x = PolynomialElement::generator(r, 0);
    PolynomialElement y = PolynomialElement::generator(r, 1);
    PolynomialElement expect = x * x + (x * y).scaled(Rational(-1, 2)) + (y * y).scaled(Rational(3));
    CHECK(p == expect);

    CHECK(parse_polynomial("(x + y)^2", r) ==
          x * x + (x * y).scaled(Rational(2)) + y * y);

    CHECK_THROWS_AS(parse_polynomial("x + z", r), ParseError);
    CHECK_THROWS_AS(parse_polynomial("x +", r), ParseError);
    try {
        parse_polynomial("x * z", r, 5, 10);
    } catch (const ParseError& e) {
        CHECK(e.line() == 5);
        CHECK(e.column() > 10);
    }
}

TEST_CASE("complex block parses with d^2 = 0 enforced") {
    const char* ok =
        "ring A\n"
        "  gen x 2\n"
        "  gen y 2\n"
        "end\n"
        "complex K over A\n"
        "  term 0 : 0\n"
        "  term 1 : 2 2\n"
        "  term 2 : 4\n"
        "  d 1 : x , y\n"
        "  d 2 : -y ; x\n"
        "end\n";
    ParsedFile pf = parse_input(ok);
    const auto* k = pf.complex("K");
    REQUIRE(k);
    CHECK(k->rank(1) == 2);
    WindowedHomology h = homology(*k, DegreeWindow(-4, 6));
    CHECK(h.dim(0, 0) == 1);

    const char* bad =
        "ring A\n"
        "  gen x 2\n"
        "  gen y 2\n"
        "end\n"
        "complex K over A\n"
        "  term 0 : 0\n"
        "  term 1 : 2 2\n"
        "  term 2 : 4\n"
        "  d 1 : x , y\n"
        "  d 2 : y ; x\n"
        "end\n";
    CHECK_THROWS_AS(parse_input(bad), ParseError);
}

TEST_CASE("unknown blocks and missing end are reported") {
    CHECK_THROWS_AS(parse_input("blob X\nend\n"), ParseError);
    CHECK_THROWS_AS(parse_input("ring A\n  gen c 2\n"), ParseError);
    CHECK_THROWS_AS(parse_input("module M over Z\n  generators 0\nend\n"), ParseError);
}
