// Engine-vs-oracle agreement sweep: Groebner membership and Hilbert
// functions against the brute-force harness on small instances.

#include <iostream>

#include "resint/hilbert.hpp"
#include "resint/oracle.hpp"
#include "resint/prng.hpp"
#include "resint/residual.hpp"

using namespace resint;

namespace {

Polynomial random_homog(const RingPtr& R, int degree, SplitMix64& g) {
    std::vector<Term> ts;
    const FieldCtx& K = R->field();
    for (const auto& m : monomials_of_degree(R, degree)) {
        long long c = K.is_rational()
                          ? g.range(-3, 3)
                          : static_cast<long long>(
                                g.below(static_cast<std::uint64_t>(R->characteristic())));
        Coeff cf = K.from_int(c);
        if (!K.is_zero(cf)) ts.push_back({m, cf});
    }
    return Polynomial::from_terms(R, std::move(ts));
}

struct Sweep {
    long long membership_checks = 0;
    long long hilbert_checks = 0;
    long long disagreements = 0;
};

void check_instance(Sweep& sw, const RingPtr& R, const std::vector<Polynomial>& gens,
                    int D) {
    Ideal I(Ambient(R), gens);
    GroebnerBasis G = groebner_basis(I);
    // membership of every monomial up to degree D, enough to separate ideals
    for (int n = 0; n <= D; ++n) {
        for (const auto& m : monomials_of_degree(R, n)) {
            Polynomial probe = Polynomial::monomial_term(R, m, R->field().one());
            bool engine = normal_form(probe, G).is_zero();
            bool oracle_says = oracle::membership(probe, gens, D);
            ++sw.membership_checks;
            if (engine != oracle_says) {
                ++sw.disagreements;
                std::cerr << "membership disagreement on " << probe.to_string() << "\n";
                return;
            }
        }
    }
    HilbertSeries hs = hilbert_series_quotient(I);
    auto vals = oracle::hilbert(R, gens, D);
    for (int n = 0; n <= D; ++n) {
        ++sw.hilbert_checks;
        if (hilbert_function(hs, n) != vals[static_cast<std::size_t>(n)]) {
            ++sw.disagreements;
            std::cerr << "hilbert disagreement at degree " << n << "\n";
            return;
        }
    }
}

}  // namespace

int main() {
    Sweep sw;
    // exhaustive fixture sweep over Q: named small ideals in <= 4 variables
    {
        RingPtr R2 = PolyRing::make({"x", "y"}, 0);
        RingPtr R3 = PolyRing::make({"x", "y", "z"}, 0);
        RingPtr R4 = PolyRing::make({"x", "y", "z", "w"}, 0);
        auto mk = [](const RingPtr& R, std::initializer_list<std::string> ss) {
            std::vector<Polynomial> out;
            for (const auto& s : ss) out.push_back(parse_polynomial(s, R));
            return out;
        };
        std::vector<std::pair<RingPtr, std::vector<Polynomial>>> fixtures = {
            {R2, mk(R2, {"x^2 + y^2", "x*y"})},
            {R2, mk(R2, {"x^2", "x*y", "y^2"})},
            {R2, mk(R2, {"x^3 - y^3"})},
            {R2, mk(R2, {"x^2 - y^2", "x^3"})},
            {R2, mk(R2, {"x", "y"})},
            {R3, mk(R3, {"x*y", "y*z", "z*x"})},
            {R3, mk(R3, {"x^2 - y*z", "y^2 - x*z"})},
            {R3, mk(R3, {"x + y + z", "x*y + y*z + z*x", "x*y*z"})},
            {R3, mk(R3, {"x^2*y - z^3"})},
            {R3, mk(R3, {"x^2", "y^2", "z^2"})},
            {R4, mk(R4, {"x*w - y*z", "x*z - y^2", "y*w - z^2"})},
            {R4, mk(R4, {"x*y", "z*w"})},
            {R4, mk(R4, {"x + y", "z^2 - w^2"})},
        };
        for (const auto& [R, gens] : fixtures) {
            int D = R->nvars() >= 4 ? 5 : 6;
            check_instance(sw, R, gens, D);
            if (sw.disagreements) break;
        }
    }
    // randomized prime-field sweep
    if (!sw.disagreements) {
        SplitMix64 g(777);
        for (int it = 0; it < 60 && !sw.disagreements; ++it) {
            int nv = 2 + static_cast<int>(g.below(3));
            std::vector<std::string> vars;
            for (int i = 0; i < nv; ++i) vars.push_back("x" + std::to_string(i + 1));
            RingPtr R = PolyRing::make(vars, 101);
            std::vector<Polynomial> gens;
            int k = 1 + static_cast<int>(g.below(3));
            for (int i = 0; i < k; ++i) {
                Polynomial h = random_homog(R, 1 + static_cast<int>(g.below(3)), g);
                if (!h.is_zero()) gens.push_back(h);
            }
            if (gens.empty()) continue;
            check_instance(sw, R, gens, nv >= 4 ? 4 : 6);
        }
    }
    std::cout << "oracle sweep: " << sw.membership_checks << " membership checks, "
              << sw.hilbert_checks << " hilbert checks, " << sw.disagreements
              << " disagreements\n";
    return sw.disagreements == 0 ? 0 : 1;
}
