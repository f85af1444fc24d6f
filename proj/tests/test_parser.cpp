#include "test_helpers.hpp"

using namespace rt;

TEST_CASE("grammar round trips") {
    auto R = QQ({"x", "y"});
    CHECK(P(R, "x^2 + 2*x*y").to_string() == "x^2 + 2*x*y");
    CHECK(P(R, "(x + y)*(x + y)") == P(R, "x^2 + 2*x*y + y^2"));
    CHECK(P(R, "-x + 3").to_string() == "-x + 3");
    CHECK(P(R, "1/2*x").to_string() == "1/2*x");
}

TEST_CASE("syntax errors carry line and column") {
    auto R = QQ({"x", "y"});
    try {
        P(R, "x + $");
        FAIL("expected a parse error");
    } catch (const parse_error& e) {
        CHECK(e.column() == 5);
        CHECK(e.line() == 1);
    }
    CHECK_THROWS_AS(P(R, "x y"), parse_error);       // implicit multiplication
    CHECK_THROWS_AS(P(R, "z + 1"), parse_error);     // unknown variable
    CHECK_THROWS_AS(P(R, "x^"), parse_error);
    CHECK_THROWS_AS(P(R, "(x"), parse_error);
    CHECK_THROWS_AS(P(R, "1/0"), parse_error);
}

TEST_CASE("print-parse is idempotent on random polynomials") {
    RingPtr R = PolyRing::make({"a", "b", "c"}, 0);
    SplitMix64 g(3);
    for (int it = 0; it < 30; ++it) {
        Polynomial p = random_poly(R, 3, g);
        std::string once = p.to_string();
        std::string twice = parse_polynomial(once, R).to_string();
        CHECK(once == twice);
    }
}
