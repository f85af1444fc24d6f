#include "resint/koszul.hpp"
#include "resint/oracle.hpp"
#include "test_helpers.hpp"

using namespace rt;

TEST_CASE("Koszul complex of a regular sequence") {
    auto R = QQ({"x", "y"});
    KoszulData kd = koszul_complex(Ambient(R), Ps(R, {"x", "y"}));
    CHECK(kd.grade == 2);
    CHECK(kd.H_zero[1]);
    CHECK(kd.H_zero[2]);
    CHECK_FALSE(kd.H_zero[0]);  // H_0 = R/(x,y)
    // delta compositions vanish and cycle generators are cycles
    for (int i = 1; i < kd.r; ++i)
        CHECK(compose(kd.differential(i), kd.differential(i + 1)).is_zero());
    for (int i = 1; i <= kd.r; ++i) {
        GradedMap zk = GradedMap::from_mvecs(
            kd.K[static_cast<std::size_t>(i)], kd.Z[static_cast<std::size_t>(i)],
            std::vector<int>(kd.Z[static_cast<std::size_t>(i)].size(), 0));
        // columns multiply to zero under delta_i
        GradedMap dz = compose(kd.differential(i), zk);
        for (const auto& col : dz.cols())
            for (const auto& p : col) CHECK(p.is_zero());
    }
}

TEST_CASE("Koszul homology of (x, x) over Q[x]") {
    auto R = QQ({"x"});
    KoszulData kd = koszul_complex(Ambient(R), Ps(R, {"x", "x"}));
    CHECK_FALSE(kd.H_zero[1]);  // H_1 = R/(x)
    Subquotient H1 = kd.homology(1);
    HilbertSeries hs = hilbert_series_subquotient(H1);
    CHECK(series_dimension(hs) == 0);
    CHECK(series_multiplicity(hs) == 1);
    CHECK(kd.grade == 1);
}

TEST_CASE("grade detection matches the Ext route on polynomial ambients") {
    auto R = QQ({"x", "y", "z"});
    KoszulData kd = koszul_complex(Ambient(R), Ps(R, {"x*y", "x*z"}));
    CHECK(kd.grade == 1);
    CHECK(kd.grade == grade_of(Id(R, {"x*y", "x*z"})));
    // unit ideal: all homology vanishes, grade = infinity sentinel
    KoszulData ku = koszul_complex(Ambient(R), Ps(R, {"x", "x + 1"}));
    CHECK(ku.grade == kHeightInfinity);
}

TEST_CASE("proper sequences") {
    auto R = QQ({"x", "y", "z"});
    // regular sequences are proper
    CHECK(proper_sequence_check(Ambient(R), Ps(R, {"x", "y", "z"})).proper);
    // (xy, yz, zx) in this order is NOT proper: H_1(xy, yz) = R/(y) up to
    // shift and zx does not annihilate it
    ProperSeqResult ps = proper_sequence_check(Ambient(R), Ps(R, {"x*y", "y*z", "z*x"}));
    CHECK_FALSE(ps.proper);
    CHECK_FALSE(ps.witness.empty());
    // generic combinations of the same ideal are proper (grade 2 on the
    // first two generic elements kills all positive homology early)
    CHECK(proper_sequence_check(
              Ambient(R),
              Ps(R, {"x*y + y*z", "y*z + z*x", "z*x - x*y"}))
              .proper);
    // order sensitivity in a quotient ring: (x, y) vs (y, x) in Q[x,y]/(xy)
    auto P2 = QQ({"x", "y"});
    Ambient amb(P2, Ps(P2, {"x*y"}));
    ProperSeqResult fwd = proper_sequence_check(amb, Ps(P2, {"x", "y"}));
    ProperSeqResult rev = proper_sequence_check(amb, Ps(P2, {"y", "x"}));
    // H_1(x) = ann(x) = (y) in R; y * (y) = (y^2) != 0 in boundaries? the
    // result is order-dependent by definition; just pin both values
    CHECK(fwd.proper == rev.proper);  // symmetric here, both multiply into ann
}

TEST_CASE("sliding depth") {
    auto R = QQ({"x", "y", "z"});
    // complete intersection: SD holds (H_0 = R/I is CM of dim d - r)
    CHECK(sliding_depth_check(Ambient(R), Ps(R, {"x", "y"}), 0, SlidingVariant::SD).holds);
    // (x^2, xy, y^2) in Q[x,y]: depth(H_1) computed explicitly
    auto R2 = QQ({"x", "y"});
    KoszulData kd = koszul_complex(Ambient(R2), Ps(R2, {"x^2", "x*y", "y^2"}));
    CHECK(kd.grade == 2);
    Subquotient H1 = kd.homology(1);
    CHECK_FALSE(subquotient_is_zero(H1));
    DepthInfo di = depth_pd_reg(H1);
    // d - r + i + 0 = 2 - 3 + 1 = 0: SD asks depth(H_1) >= 0, always true;
    // SDC_1 asks depth(Z_1) >= 1
    SlidingDepthResult sd = sliding_depth_check(Ambient(R2), Ps(R2, {"x^2", "x*y", "y^2"}), 0,
                                                SlidingVariant::SD);
    CHECK(sd.holds == (di.depth >= 0));
    SlidingDepthResult sdc = sliding_depth_check(Ambient(R2), Ps(R2, {"x^2", "x*y", "y^2"}), 1,
                                                 SlidingVariant::SDC);
    CHECK(sdc.holds);  // Z_1 is a second syzygy, depth >= 1 over Q[x,y]
}

TEST_CASE("wedge machinery") {
    auto S = QQ({"a", "b", "c", "d"});
    // zeta_1 ^ ... ^ zeta_r recovers the determinant as a top wedge
    WedgeElement z1, z2;
    z1.r = z2.r = 2;
    z1.k = z2.k = 1;
    z1.comps[{0}] = P(S, "a");
    z1.comps[{1}] = P(S, "c");
    z2.comps[{0}] = P(S, "b");
    z2.comps[{1}] = P(S, "d");
    CHECK(wedge_coefficient({z1, z2}, S) == P(S, "a*d - b*c"));
    // repeated basis vector: antisymmetry kills it
    WedgeElement e0;
    e0.r = 2;
    e0.k = 1;
    e0.comps[{0}] = P(S, "1");
    CHECK(wedge_coefficient({e0, e0}, S).is_zero());
    // sign bookkeeping: (x e_1 + y e_2) ^ e_1 = -y e_1^e_2
    auto R = QQ({"x", "y"});
    WedgeElement v, e1;
    v.r = e1.r = 2;
    v.k = e1.k = 1;
    v.comps[{0}] = P(R, "x");
    v.comps[{1}] = P(R, "y");
    e1.comps[{0}] = P(R, "1");
    CHECK(wedge_coefficient({v, e1}, R) == P(R, "-y"));
    // degree mismatch is an error
    CHECK_THROWS_AS(wedge_coefficient({v}, R), error);
    // bilinear and alternating on random degree-1 elements
    SplitMix64 g(13);
    for (int it = 0; it < 10; ++it) {
        WedgeElement a, b;
        a.r = b.r = 2;
        a.k = b.k = 1;
        a.comps[{0}] = random_poly(R, 1, g);
        a.comps[{1}] = random_poly(R, 1, g);
        b.comps[{0}] = random_poly(R, 1, g);
        b.comps[{1}] = random_poly(R, 1, g);
        Polynomial ab = wedge_coefficient({a, b}, R);
        Polynomial ba = wedge_coefficient({b, a}, R);
        CHECK(ab == -ba);
        CHECK(wedge_coefficient({a, a}, R).is_zero());
    }
}

TEST_CASE("top wedge of Koszul cycles reduces to determinants on regular sequences") {
    auto R = QQ({"x", "y"});
    // for the regular sequence (x, y), Z_1 = 0 beyond boundaries and the
    // classical determinant of Phi columns agrees with the wedge coefficient
    std::vector<std::vector<Polynomial>> Phi{{P(R, "x"), P(R, "0")},
                                             {P(R, "0"), P(R, "y")}};
    WedgeElement za, zb;
    za.r = zb.r = 2;
    za.k = zb.k = 1;
    za.comps[{0}] = Phi[0][0];
    zb.comps[{1}] = Phi[1][1];
    CHECK(wedge_coefficient({za, zb}, R) == matrix_determinant(Phi));
}
