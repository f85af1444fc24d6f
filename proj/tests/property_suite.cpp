// Randomized property sweep for the Kitt/tau layer: chain inclusions,
// radical collapse, the two tau routes, the mu bound and generator
// invariance, over small prime-field instances.

#include <iostream>

#include "resint/kitt.hpp"
#include "resint/prng.hpp"

using namespace resint;

namespace {

constexpr long long kP = 101;

Polynomial random_homog(const RingPtr& R, int degree, SplitMix64& g) {
    std::vector<Term> ts;
    const FieldCtx& K = R->field();
    for (const auto& m : monomials_of_degree(R, degree)) {
        Coeff cf = K.from_int(static_cast<long long>(g.below(static_cast<std::uint64_t>(kP))));
        if (!K.is_zero(cf)) ts.push_back({m, cf});
    }
    return Polynomial::from_terms(R, std::move(ts));
}

struct Stats {
    long long instances = 0;
    long long skipped = 0;
    long long invariance_checked = 0;
    long long violations = 0;
};

void fail(Stats& st, const std::string& what, std::uint64_t seed) {
    ++st.violations;
    std::cerr << "VIOLATION (seed " << seed << "): " << what << "\n";
}

void run_instance(Stats& st, std::uint64_t seed) {
    SplitMix64 g(seed);
    int nv = 2 + static_cast<int>(g.below(3));  // 2..4 variables
    std::vector<std::string> vars;
    for (int i = 0; i < nv; ++i) vars.push_back("x" + std::to_string(i + 1));
    RingPtr R = PolyRing::make(vars, kP);
    Ambient amb(R);
    int r = 1 + static_cast<int>(g.below(3));  // 1..3 generators
    int s = std::max<int>(1, r - 1 + static_cast<int>(g.below(3)));
    if (s > 3) s = 3;
    std::vector<Polynomial> f;
    int dmax = 1;
    for (int i = 0; i < r; ++i) {
        int d = 1 + static_cast<int>(g.below(2));  // degrees 1..2
        dmax = std::max(dmax, d);
        Polynomial h = random_homog(R, d, g);
        if (h.is_zero()) { ++st.skipped; return; }
        f.push_back(h);
    }
    int L = dmax + static_cast<int>(g.below(2));  // target degree <= 3
    std::vector<Polynomial> a;
    std::vector<std::vector<Polynomial>> Phi(static_cast<std::size_t>(r));
    for (int j = 0; j < s; ++j) {
        Polynomial aj = Polynomial::zero(R);
        for (int i = 0; i < r; ++i) {
            int cd = L - f[static_cast<std::size_t>(i)].degree();
            Polynomial c = cd >= 0 ? random_homog(R, cd, g) : Polynomial::zero(R);
            Phi[static_cast<std::size_t>(i)].push_back(c);
            aj = aj + c * f[static_cast<std::size_t>(i)];
        }
        if (aj.is_zero()) { ++st.skipped; return; }
        a.push_back(aj);
    }
    ResidualInput in;
    in.amb = amb;
    in.f = f;
    in.a = a;
    in.Phi = Phi;
    for (const auto& p : f) in.d.push_back(p.degree());
    for (const auto& p : a) in.l.push_back(p.degree());
    // standing hypothesis: grade(I) >= 1 (automatic in a domain with f != 0)
    ++st.instances;

    Ideal J = ideal_colon(in.a_ideal(), in.I_ideal());
    bool J_proper = !is_unit_ideal(J);
    KittChain chain = kitt_chain(in);

    // ascending chain, a inside Kitt, Kitt inside J when proper
    for (std::size_t i = 0; i + 1 < chain.levels.size(); ++i)
        if (!ideal_contains(chain.levels[i + 1], chain.levels[i]))
            return fail(st, "Kitt chain not ascending", seed);
    if (!ideal_contains(chain.full(), in.a_ideal()))
        return fail(st, "a not inside Kitt", seed);
    if (J_proper && !ideal_contains(J, chain.full()))
        return fail(st, "Kitt not inside J", seed);

    // radical collapse rad(J) = rad(Kitt_1) = rad(Kitt)
    if (J_proper) {
        if (!radical_equal(J, chain.level(std::min(1, in.r()))))
            return fail(st, "rad(J) != rad(Kitt_1)", seed);
        if (!radical_equal(J, chain.full()))
            return fail(st, "rad(J) != rad(Kitt)", seed);
    }

    // tau = a + Kitt_0 through both routes
    Ideal t1 = tau_ideal(in);
    Ideal t2 = tau_ideal_wedge_route(in);
    if (!ideal_equal(t1, t2)) return fail(st, "tau routes disagree", seed);
    Ideal t3 = ideal_sum(in.a_ideal(), chain.level(0));
    if (!ideal_equal(t1, t3)) return fail(st, "tau != a + Kitt_0", seed);

    // mu(tau) <= s + C(s, r)
    long long bound = s;
    if (r <= s) {
        long long b = 1;
        for (int i = 0; i < r; ++i) b = b * (s - i) / (i + 1);
        bound += b;
    }
    if (minimal_generator_count(t1) > bound) return fail(st, "mu(tau) bound violated", seed);

    // generator invariance on a subsample
    if (st.instances % 5 == 0) {
        ++st.invariance_checked;
        std::vector<Polynomial> f2 = f;
        if (r >= 2) {
            Coeff c = R->field().from_int(1 + static_cast<long long>(g.below(kP - 1)));
            // keep generators homogeneous: only mix equal degrees, else scale
            if (f2[0].degree() == f2[1].degree()) f2[0] = f2[0] + f2[1].scale(c);
            else f2[0] = f2[0].scale(c);
            std::swap(f2[0], f2[static_cast<std::size_t>(r - 1)]);
        }
        std::vector<Polynomial> a2 = a;
        if (s >= 2) {
            Coeff c = R->field().from_int(1 + static_cast<long long>(g.below(kP - 1)));
            a2[0] = a2[0] + a2[1].scale(c);
        }
        try {
            ResidualInput in2 = make_residual_input(amb, f2, a2);
            KittChain chain2 = kitt_chain(in2);
            if (!ideal_equal(chain.full(), chain2.full()))
                return fail(st, "Kitt changed under generator change", seed);
        } catch (const hypothesis_error&) {
            // division put some a outside I only if the transform was bad;
            // cannot happen for unimodular changes
            return fail(st, "unimodular change rejected", seed);
        }
    }
}

}  // namespace

int main() {
    Stats st;
    std::uint64_t seed = 20240801;
    const long long target = 500;
    while (st.instances < target) {
        try {
            run_instance(st, seed++);
        } catch (const resource_limit_error& e) {
            ++st.skipped;
        } catch (const error& e) {
            std::cerr << "unexpected error (seed " << seed - 1 << "): " << e.what() << "\n";
            ++st.violations;
        }
        if (st.violations) break;
    }
    std::cout << "property suite: " << st.instances << " instances, " << st.skipped
              << " degenerate skips, " << st.invariance_checked << " invariance checks, "
              << st.violations << " violations\n";
    return st.violations == 0 ? 0 : 1;
}
