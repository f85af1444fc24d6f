#include "test_helpers.hpp"

using namespace rt;

TEST_CASE("residual colon: the linkage instance") {
    auto R = QQ({"x", "y", "z"});
    ResidualInput in =
        make_residual_input(Ambient(R), Ps(R, {"x", "y"}), Ps(R, {"x^2", "y^2"}));
    ColonResult col = residual_colon(in);
    CHECK(col.proper);
    CHECK(col.height_J == 2);
    CHECK(ideal_equal(col.J, Id(R, {"x^2", "x*y", "y^2"})));
}

TEST_CASE("colon by the ideal itself is flagged") {
    auto R = QQ({"x", "y"});
    ResidualInput in = make_residual_input(Ambient(R), Ps(R, {"x", "y"}), Ps(R, {"x", "y"}));
    ColonResult col = residual_colon(in);
    CHECK_FALSE(col.proper);
    CHECK(col.height_J == kHeightInfinity);
}

TEST_CASE("Phi certification: a_j outside I is rejected, quotient lifts work") {
    auto R = QQ({"x", "y"});
    CHECK_THROWS_AS(make_residual_input(Ambient(R), Ps(R, {"x^2"}), Ps(R, {"y^2"})),
                    hypothesis_error);
    // in R = Q[x,y]/(x^2 - y^2): y^2 is in (x^2) via the quotient relation
    Ambient amb(R, Ps(R, {"x^2 - y^2"}));
    ResidualInput in = make_residual_input(amb, Ps(R, {"x^2"}), Ps(R, {"y^2"}));
    // the recorded Phi must certify a = f * Phi modulo the quotient
    Polynomial recomposed = in.Phi[0][0] * in.f[0];
    CHECK(amb.is_zero_in_R(recomposed - in.a[0]));
}

TEST_CASE("classification of the linkage instance") {
    auto R = QQ({"x", "y", "z"});
    ResidualInput in =
        make_residual_input(Ambient(R), Ps(R, {"x", "y"}), Ps(R, {"x^2", "y^2"}));
    ColonResult col = residual_colon(in);
    Classification cls = classify_residual(in, col.J);
    CHECK(cls.algebraic);          // ht(J) = 2 = s
    CHECK_FALSE(cls.geometric);    // ht(I + J) = 2 < s + 1
    CHECK_FALSE(cls.arithmetic);   // Fitt_1(I/a) lands inside (x, y)
    CHECK(cls.ht_I_plus_J == 2);
}

TEST_CASE("a height-deficient colon classifies as none") {
    auto R = QQ({"x", "y", "z"});
    // a = (x^2) inside I = (x, y): J = (x^2):(x,y) has height 1 < s = 1? use
    // s = 2 with a second redundant element to force the height bar
    ResidualInput in = make_residual_input(Ambient(R), Ps(R, {"x", "y"}),
                                           Ps(R, {"x^2", "x*y"}));
    ColonResult col = residual_colon(in);
    Classification cls = classify_residual(in, col.J);
    CHECK(col.height_J < 2);
    CHECK_FALSE(cls.algebraic);
}

TEST_CASE("r-minimal generation") {
    auto R = QQ({"x", "y"});
    RMinResult rm = r_min_generated(Ambient(R), Ps(R, {"x", "y"}), 2);
    CHECK(rm.r_min);
    CHECK(rm.saturation_unit);
    CHECK(rm.radical_match);  // zeta = ht(I) here
    CHECK(ideal_equal(rm.entries_ideal, Id(R, {"x", "y"})));

    auto R3 = QQ({"x", "y", "z"});
    RMinResult ci = r_min_generated(Ambient(R3), Ps(R3, {"x", "y", "z"}), 3);
    CHECK(ci.r_min);

    // non-minimal generators are a precondition violation
    CHECK_THROWS_AS(r_min_generated(Ambient(R), Ps(R, {"x", "y", "x + y"}), 2),
                    hypothesis_error);
}

TEST_CASE("general elements are deterministic and degree-checked") {
    auto R = QQ({"x", "y", "z"});
    std::vector<Polynomial> f = Ps(R, {"x", "y"});
    auto a1 = general_elements(Ambient(R), f, 3, 2, 7);
    auto a2 = general_elements(Ambient(R), f, 3, 2, 7);
    REQUIRE(a1.size() == 3);
    for (std::size_t i = 0; i < a1.size(); ++i) CHECK(a1[i] == a2[i]);
    auto b = general_elements(Ambient(R), f, 3, 2, 8);
    bool differs = false;
    for (std::size_t i = 0; i < a1.size(); ++i)
        if (!(a1[i] == b[i])) differs = true;
    CHECK(differs);
    for (const auto& p : a1) {
        CHECK(p.is_homogeneous());
        CHECK(p.degree() == 2);
    }
    CHECK_THROWS_AS(general_elements(Ambient(R), Ps(R, {"x^2", "y^2"}), 1, 1, 1), error);
}

TEST_CASE("the G_s condition via Fitting heights") {
    auto R = QQ({"x", "y", "z"});
    // (x, y): Fitt_1 = (x, y) of height 2 >= 2: G_s for all s
    for (int s = 2; s <= 4; ++s)
        CHECK(g_condition(Ambient(R), Ps(R, {"x", "y"}), s, false));
    // principal ideals: trivially G_s (no k in range)
    CHECK(g_condition(Ambient(R), Ps(R, {"x"}), 3, false));
    // a 4-generated height-2 ideal fails G_3 style conditions: in
    // R = Q[x1..x4]/((x1,x2) cap (x3,x4)) the maximal-ish ideal
    auto P4 = QQ({"x1", "x2", "x3", "x4"});
    Ideal inter = ideal_intersection(Id(P4, {"x1", "x2"}), Id(P4, {"x3", "x4"}));
    Ambient amb(P4, inter.gens());
    amb.equidim = 1;
    std::vector<Polynomial> gens = Ps(P4, {"x1", "x2", "x3", "x4"});
    CHECK_FALSE(g_condition(amb, gens, 3, false));
    // the minus variant is weaker
    CHECK(g_condition(Ambient(R), Ps(R, {"x", "y"}), 3, true));
}

TEST_CASE("Ex2(i): I = I_1(phi) over the reducible quotient, 4-minimal from height 2") {
    auto P4 = QQ({"x1", "x2", "x3", "x4"});
    Ideal inter = ideal_intersection(Id(P4, {"x1", "x2"}), Id(P4, {"x3", "x4"}));
    Ambient amb(P4, inter.gens());
    amb.equidim = 1;
    std::vector<Polynomial> gens = Ps(P4, {"x1", "x2", "x3", "x4"});
    RMinResult rm = r_min_generated(amb, gens, 2);
    CHECK(rm.r_min);
    CHECK(radical_equal(rm.entries_ideal, Ideal(amb, gens)));
}
