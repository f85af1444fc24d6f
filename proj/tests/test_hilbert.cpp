#include "resint/hilbert.hpp"
#include "resint/oracle.hpp"
#include "test_helpers.hpp"

using namespace rt;

TEST_CASE("series of polynomial rings and small quotients") {
    auto R = QQ({"x", "y"});
    HilbertSeries hs = hilbert_series_ring(Ambient(R));
    CHECK(hs.coef == std::vector<mpz_class>{1});
    CHECK(hs.denom_weights == std::vector<int>{1, 1});
    CHECK(series_dimension(hs) == 2);

    HilbertSeries q = hilbert_series_quotient(Id(R, {"x^2", "x*y"}));
    std::vector<long long> expect{1, 2, 1, 1, 1, 1};
    for (int n = 0; n <= 5; ++n) CHECK(hilbert_function(q, n) == expect[static_cast<std::size_t>(n)]);
}

TEST_CASE("hypersurface ambient: numerator 1 - z^2, dim 5, e = 2") {
    auto P6 = QQ({"x0", "x1", "x2", "x3", "x4", "x5"});
    Ambient amb(P6, Ps(P6, {"x0^2 + x1^2"}));
    HilbertSeries hs = hilbert_series_ring(amb);
    CHECK(hs.off == 0);
    CHECK(hs.coef == std::vector<mpz_class>{1, 0, -1});
    CHECK(series_dimension(hs) == 5);
    CHECK(series_multiplicity(hs) == 2);
}

TEST_CASE("hilbert function agrees with the oracle on small instances") {
    for (long long p : {0LL, 101LL}) {
        RingPtr R = PolyRing::make({"x", "y", "z"}, p);
        SplitMix64 g(static_cast<std::uint64_t>(31 + p));
        for (int it = 0; it < 6; ++it) {
            std::vector<Polynomial> gens;
            for (int k = 0; k < 2; ++k) {
                Polynomial h = random_homog(R, 1 + static_cast<int>(g.below(2)), g);
                if (!h.is_zero()) gens.push_back(h);
            }
            HilbertSeries hs = hilbert_series_quotient(Ideal(Ambient(R), gens));
            auto vals = oracle::hilbert(R, gens, 8);
            for (int n = 0; n <= 8; ++n)
                CHECK(hilbert_function(hs, n) == vals[static_cast<std::size_t>(n)]);
        }
    }
}

TEST_CASE("dimension and multiplicity conventions") {
    auto R = QQ({"x", "y"});
    // the zero module
    HilbertSeries z = hilbert_series_quotient(Id(R, {"1"}));
    CHECK(series_dimension(z) == -1);
    // a field
    HilbertSeries k = hilbert_series_quotient(Id(R, {"x", "y"}));
    CHECK(series_dimension(k) == 0);
    CHECK(series_multiplicity(k) == 1);
    // weighted gradings refuse multiplicity
    RingPtr W = PolyRing::make({"x", "y"}, 0, {1, 2});
    HilbertSeries hw = hilbert_series_ring(Ambient(W));
    CHECK_THROWS_AS(series_multiplicity(hw), error);
    CHECK(series_dimension(hw) == 2);
}

TEST_CASE("multiplicity is invariant under passing to the leading-term ideal") {
    RingPtr R = PolyRing::make({"x", "y", "z"}, 101);
    SplitMix64 g(8);
    for (int it = 0; it < 5; ++it) {
        std::vector<Polynomial> gens;
        for (int k = 0; k < 2; ++k) {
            Polynomial h = random_homog(R, 2, g);
            if (!h.is_zero()) gens.push_back(h);
        }
        if (gens.empty()) continue;
        Ideal I(Ambient(R), gens);
        HilbertSeries direct = hilbert_series_quotient(I);
        // leading-term route: monomial ideal of the basis leads
        GroebnerBasis G = groebner_basis(I);
        std::vector<Monomial> leads;
        for (const auto& e : G.elements()) leads.push_back(e.leading_term().mon);
        HilbertSeries lt = hilbert_series_monomial_quotient(R, leads);
        CHECK(series_dimension(direct) == series_dimension(lt));
        if (series_dimension(direct) >= 0)
            CHECK(series_multiplicity(direct) == series_multiplicity(lt));
    }
}

TEST_CASE("subquotient series via the difference formula") {
    auto R = QQ({"x", "y"});
    // I/a for I = (x,y), a = (x^2,y^2): HF = 2, 2, 0, ... wait: compute honestly
    Subquotient M = Subquotient::ideal_pair(Id(R, {"x", "y"}), Id(R, {"x^2", "y^2"}));
    HilbertSeries hs = hilbert_series_subquotient(M);
    // degree 1: x, y; degree 2: xy only (x^2, y^2 die); degree >= 3: nothing
    CHECK(hilbert_function(hs, 0) == 0);
    CHECK(hilbert_function(hs, 1) == 2);
    CHECK(hilbert_function(hs, 2) == 1);
    CHECK(hilbert_function(hs, 3) == 0);
}
