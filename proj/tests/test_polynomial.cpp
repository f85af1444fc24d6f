#include "test_helpers.hpp"

using namespace rt;

TEST_CASE("basic arithmetic identities") {
    auto R = QQ({"x", "y"});
    CHECK(P(R, "(x+y)*(x-y)") == P(R, "x^2 - y^2"));
    Polynomial p = P(R, "3*x^2*y - y + 1/2");
    CHECK((p + (-p)).is_zero());
    CHECK((p - p).is_zero());
    auto F5 = GF(5, {"x"});
    CHECK(P(F5, "2*x") * P(F5, "3*x") == P(F5, "x^2"));
}

TEST_CASE("ring axioms on random triples over Q and F_p") {
    for (long long p : {0LL, 5LL, 32003LL}) {
        RingPtr R = PolyRing::make({"x", "y", "z"}, p);
        SplitMix64 g(42 + static_cast<std::uint64_t>(p));
        for (int it = 0; it < 20; ++it) {
            Polynomial a = random_poly(R, 3, g);
            Polynomial b = random_poly(R, 3, g);
            Polynomial c = random_poly(R, 3, g);
            CHECK((a * b) * c == a * (b * c));
            CHECK(a * (b + c) == a * b + a * c);
            CHECK(a + b == b + a);
            CHECK(a * b == b * a);
        }
    }
}

TEST_CASE("leading terms under the named orders") {
    auto R = QQ({"x", "y"});
    MonomialOrder grevlex = MonomialOrder::grevlex();
    MonomialOrder lex = MonomialOrder::lex();
    Polynomial p = P(R, "x^2*y + x*y^2 + y^3");
    CHECK(Polynomial::monomial_term(R, p.leading_term(grevlex).mon, R->field().one()) ==
          P(R, "x^2*y"));
    Polynomial q = P(R, "y^5 + x");
    CHECK(Polynomial::monomial_term(R, q.leading_term(lex).mon, R->field().one()) == P(R, "x"));
    auto R3 = QQ({"x", "y", "z"});
    Polynomial s = P(R3, "x*z + y^2");
    // grevlex tie-break on degree-2 monomials: last exponent difference wins
    CHECK(Polynomial::monomial_term(R3, s.leading_term(grevlex).mon, R3->field().one()) ==
          P(R3, "y^2"));
}

TEST_CASE("order axiom: LT is multiplicative on random pairs") {
    RingPtr R = PolyRing::make({"x", "y", "z"}, 101);
    MonomialOrder o = MonomialOrder::grevlex();
    SplitMix64 g(7);
    int tested = 0;
    for (int it = 0; it < 40; ++it) {
        Polynomial a = random_poly(R, 3, g);
        Polynomial b = random_poly(R, 3, g);
        if (a.is_zero() || b.is_zero()) continue;
        ++tested;
        Term ta = a.leading_term(o);
        Term tb = b.leading_term(o);
        Term tab = (a * b).leading_term(o);
        CHECK(tab.mon == ta.mon * tb.mon);
    }
    CHECK(tested > 10);
}

TEST_CASE("degree info and weighted gradings") {
    auto R = QQ({"x0", "x1"});
    auto [d1, h1] = P(R, "x0^2 + x1^2").degree_info();
    CHECK(*d1 == 2);
    CHECK(h1);
    auto [d2, h2] = P(R, "x0 + x1^2").degree_info();
    CHECK(*d2 == 2);
    CHECK_FALSE(h2);
    RingPtr W = PolyRing::make({"x", "y"}, 0, {1, 2});
    auto [d3, h3] = P(W, "x*y").degree_info();
    CHECK(*d3 == 3);
    CHECK(h3);
    // zero polynomial: no degree, homogeneous by convention
    auto [d0, h0] = Polynomial::zero(R).degree_info();
    CHECK_FALSE(d0.has_value());
    CHECK(h0);
}

TEST_CASE("canonical form is unique under reparsing") {
    for (long long p : {0LL, 13LL}) {
        RingPtr R = PolyRing::make({"x", "y", "z"}, p);
        SplitMix64 g(99);
        for (int it = 0; it < 25; ++it) {
            Polynomial a = random_poly(R, 4, g);
            std::string s = a.to_string();
            CHECK(parse_polynomial(s, R).to_string() == s);
        }
    }
}

TEST_CASE("coefficient invariants: reduced fractions, canonical residues") {
    FieldCtx Q(0);
    Coeff c = Q.from_fraction(6, -4);
    CHECK(c.rat().get_den() == 2);  // positive denominator
    CHECK(c.rat().get_num() == -3); // gcd reduced
    FieldCtx F7(7);
    CHECK(F7.from_int(-1).res() == 6);
    CHECK(F7.mul(F7.from_int(3), F7.from_int(5)).res() == 1);
    CHECK_THROWS_AS(FieldCtx(6), error);  // non-prime characteristic
}
