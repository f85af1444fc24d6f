#include "resint/layout.hpp"
#include "test_helpers.hpp"

using namespace rt;

TEST_CASE("F-layout of the linkage parameters") {
    GradedComplexLayout lay = f_complex_layout(2, 2, {1, 1}, {2, 2});
    REQUIRE(lay.length() == 2);
    CHECK(lay.twists[0] == std::vector<int>{0});
    CHECK(lay.twists[1] == std::vector<int>{-2, -2, -2});
    CHECK(lay.twists[2] == std::vector<int>{-3, -3});
    // matches the independently computed minimal resolution of (x^2, xy, y^2)
    auto R = QQ({"x", "y"});
    Resolution res = minimal_free_resolution(
        Subquotient::quotient_by_ideal(Id(R, {"x^2", "x*y", "y^2"})));
    REQUIRE(res.length() == 2);
    std::vector<int> tw1 = res.diffs[0].src().tw;
    std::vector<int> tw2 = res.diffs[1].src().tw;
    for (auto& t : tw1) t = -t;
    for (auto& t : tw2) t = -t;
    std::sort(tw1.begin(), tw1.end());
    std::sort(tw2.begin(), tw2.end());
    CHECK(lay.twists[1] == tw1);
    CHECK(lay.twists[2] == tw2);
}

TEST_CASE("F-layout r=1, s=1 single piece") {
    GradedComplexLayout lay = f_complex_layout(1, 1, {1}, {3});
    REQUIRE(lay.length() == 1);
    CHECK(lay.twists[1] == std::vector<int>{-(3 - 1)});
    // cross-check against a = c * f: resolution of (c) has one twist -deg(c)
    auto R = QQ({"x", "y"});
    Resolution res =
        minimal_free_resolution(Subquotient::quotient_by_ideal(Id(R, {"x^2*y"})));
    CHECK(res.diffs[0].src().tw == std::vector<int>{3});
}

TEST_CASE("F-layout positivity for a spread of parameters") {
    for (int r = 1; r <= 3; ++r)
        for (int s = r; s <= 4; ++s) {
            std::vector<int> d(static_cast<std::size_t>(r), 1);
            std::vector<int> l(static_cast<std::size_t>(s), 2);
            GradedComplexLayout lay = f_complex_layout(r, s, d, l);
            for (int i = 1; i <= s; ++i) CHECK(lay.rank(i) > 0);
        }
}

TEST_CASE("Hilbert identity of the linkage layout") {
    auto R = QQ({"x", "y"});
    GradedComplexLayout lay = f_complex_layout(2, 2, {1, 1}, {2, 2});
    HilbertSeries hs_R = hilbert_series_ring(Ambient(R));
    HilbertSeries hs_tau = hilbert_series_quotient(Id(R, {"x^2", "x*y", "y^2"}));
    HilbertIdentity hi = hilbert_identity_check(lay, hs_R, hs_tau, 20);
    CHECK(hi.holds);
    // a deliberately perturbed layout fails at small n
    GradedComplexLayout bad = lay;
    bad.twists[1][0] = -1;
    HilbertIdentity hb = hilbert_identity_check(bad, hs_R, hs_tau, 20);
    CHECK_FALSE(hb.holds);
    CHECK(hb.first_failure >= 0);
    CHECK(hb.first_failure <= 5);
}

TEST_CASE("ericci of the linkage parameters in the plane") {
    auto R = QQ({"x", "y"});
    EricciResult er = ericci(Ambient(R), {1, 1}, {2, 2}, 1);
    CHECK(er.value == 3);  // e of Q[x,y]/(x^2, xy, y^2)
    CHECK(er.euler_route == 3);
    CHECK(er.generic_route == 3);
}

TEST_CASE("Q-layout coincides with the F-layout for complete intersections") {
    auto R = QQ({"x", "y"});
    ResidualInput in =
        make_residual_input(Ambient(R), Ps(R, {"x", "y"}), Ps(R, {"x^2", "y^2"}));
    GradedComplexLayout Q = q_complex_layout(in);
    GradedComplexLayout F = f_complex_layout(2, 2, {1, 1}, {2, 2});
    REQUIRE(Q.length() == F.length());
    for (int i = 0; i <= Q.length(); ++i)
        CHECK(Q.twists[static_cast<std::size_t>(i)] == F.twists[static_cast<std::size_t>(i)]);
    // and its identity against R/tau holds
    HilbertSeries hs_R = hilbert_series_ring(Ambient(R));
    HilbertSeries hs_tau = hilbert_series_quotient(tau_ideal(in));
    CHECK(hilbert_identity_check(Q, hs_R, hs_tau, 20).holds);
}

TEST_CASE("Q-layout refuses non-proper generator orders") {
    auto R = QQ({"x", "y", "z"});
    ResidualInput in = make_residual_input(Ambient(R), Ps(R, {"x*y", "y*z", "z*x"}),
                                           Ps(R, {"x*y^2", "y*z^2"}));
    CHECK_THROWS_AS(q_complex_layout(in), hypothesis_error);
}
