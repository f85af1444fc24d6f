#include "resint/module.hpp"
#include "resint/oracle.hpp"
#include "test_helpers.hpp"

using namespace rt;

TEST_CASE("oracle membership basics") {
    auto R = QQ({"x", "y"});
    CHECK(oracle::membership(P(R, "y^3"), Ps(R, {"x^2 + y^2", "x*y"}), 3));
    CHECK_FALSE(oracle::membership(P(R, "x"), Ps(R, {"x^2"}), 2));
    CHECK(oracle::membership(Polynomial::zero(R), Ps(R, {"x^2"}), 2));
    CHECK_THROWS_AS(oracle::membership(P(R, "x^9"), Ps(R, {"x^2"}), 3), error);
}

TEST_CASE("oracle hilbert values") {
    auto R = QQ({"x", "y"});
    auto vals = oracle::hilbert(R, Ps(R, {"x^2", "x*y"}), 4);
    CHECK(vals == std::vector<long long>{1, 2, 1, 1, 1});
    auto free_vals = oracle::hilbert(R, {}, 3);
    CHECK(free_vals == std::vector<long long>{1, 2, 3, 4});  // binomials
    // the unit ideal spans every graded piece, degree 0 included
    auto unit_vals = oracle::hilbert(R, Ps(R, {"1"}), 3);
    CHECK(unit_vals == std::vector<long long>{0, 0, 0, 0});
}

TEST_CASE("oracle determinant") {
    auto R = QQ({"x", "y"});
    std::vector<std::vector<Polynomial>> diag{{P(R, "x"), P(R, "0")},
                                              {P(R, "0"), P(R, "y")}};
    CHECK(oracle::determinant(diag) == P(R, "x*y"));
    auto S = QQ({"a", "b", "c", "d"});
    std::vector<std::vector<Polynomial>> m{{P(S, "a"), P(S, "b")}, {P(S, "c"), P(S, "d")}};
    CHECK(oracle::determinant(m) == P(S, "a*d - b*c"));
}

TEST_CASE("oracle determinant matches the engine on a symbolic 3x3") {
    auto R = QQ({"a", "b", "c", "d", "e", "f", "g", "h", "i"});
    std::vector<std::vector<Polynomial>> m{
        {P(R, "a"), P(R, "b"), P(R, "c")},
        {P(R, "d"), P(R, "e"), P(R, "f")},
        {P(R, "g"), P(R, "h"), P(R, "i")}};
    CHECK(oracle::determinant(m) == matrix_determinant(m));
}
