#include "resint/residual.hpp"

#include <functional>
#include <sstream>

#include "resint/prng.hpp"

namespace resint {

std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int degree) {
    std::vector<Monomial> out;
    Monomial cur(ring->nvars());
    const auto& w = ring->weights();
    // lexicographic backtracking over exponent vectors
    std::function<void(std::size_t, int)> rec = [&](std::size_t v, int rem) {
        if (v + 1 == ring->nvars()) {
            if (rem % w[v] == 0) {
                cur.e[v] = rem / w[v];
                out.push_back(cur);
                cur.e[v] = 0;
            }
            return;
        }
        for (int e = rem / w[v]; e >= 0; --e) {
            cur.e[v] = e;
            rec(v + 1, rem - e * w[v]);
        }
        cur.e[v] = 0;
    };
    if (degree == 0) {
        out.push_back(cur);
        return out;
    }
    if (degree < 0 || ring->nvars() == 0) return out;
    rec(0, degree);
    return out;
}

std::vector<Polynomial> general_elements(const Ambient& amb, const std::vector<Polynomial>& f,
                                         int count, int degree, std::uint64_t seed,
                                         std::vector<std::vector<Polynomial>>* coeffs) {
    const RingPtr& P = amb.P;
    const FieldCtx& K = P->field();
    int r = static_cast<int>(f.size());
    int min_deg = -1;
    std::vector<int> d(f.size());
    for (std::size_t t = 0; t < f.size(); ++t) {
        if (!f[t].is_homogeneous() || f[t].is_zero())
            throw error("general elements need nonzero homogeneous generators");
        d[t] = f[t].degree();
        if (min_deg < 0 || d[t] < min_deg) min_deg = d[t];
    }
    if (degree < min_deg)
        throw error("requested degree " + std::to_string(degree) +
                    " is below every generator degree");
    if (coeffs) coeffs->assign(static_cast<std::size_t>(r), {});
    std::vector<Polynomial> out;
    for (int j = 0; j < count; ++j) {
        Polynomial aj = Polynomial::zero(P);
        for (int t = 0; t < r; ++t) {
            int cd = degree - d[static_cast<std::size_t>(t)];
            Polynomial c = Polynomial::zero(P);
            if (cd >= 0) {
                auto mons = monomials_of_degree(P, cd);
                std::vector<Term> ts;
                for (std::size_t m = 0; m < mons.size(); ++m) {
                    SplitMix64 g(mix_seed(seed, (static_cast<std::uint64_t>(j) << 40) ^
                                                    (static_cast<std::uint64_t>(t) << 20) ^ m));
                    Coeff cf = K.is_rational() ? K.from_int(g.range(-5, 5))
                                               : K.from_int(static_cast<long long>(
                                                     g.below(static_cast<std::uint64_t>(
                                                         P->characteristic()))));
                    if (!K.is_zero(cf)) ts.push_back({mons[m], cf});
                }
                c = Polynomial::from_terms(P, std::move(ts));
            }
            if (coeffs) (*coeffs)[static_cast<std::size_t>(t)].push_back(c);
            aj = aj + c * f[static_cast<std::size_t>(t)];
        }
        out.push_back(aj);
    }
    return out;
}

namespace {

void check_grade_positive(const Ambient& amb, const std::vector<Polynomial>& f,
                          const GBConfig& cfg) {
    // grade(I) >= 1 iff (0 :_R I) = 0
    Ideal zero(amb, {});
    Ideal ann = ideal_colon(zero, Ideal(amb, f), cfg);
    for (const auto& g : ann.gens())
        if (!amb.is_zero_in_R(g, cfg))
            throw hypothesis_error("grade(I) = 0: the standing hypothesis grade >= 1 fails");
}

}  // namespace

ResidualInput make_residual_input(const Ambient& amb, std::vector<Polynomial> f,
                                  std::vector<Polynomial> a, const GBConfig& cfg) {
    ResidualInput in;
    in.amb = amb;
    in.f = std::move(f);
    in.a = std::move(a);
    for (const auto& g : in.f) {
        if (g.is_zero() || !g.is_homogeneous())
            throw error("residual input expects nonzero homogeneous f generators");
        in.d.push_back(g.degree());
    }
    for (const auto& g : in.a) {
        if (g.is_zero() || !g.is_homogeneous())
            throw error("residual input expects nonzero homogeneous a generators");
        in.l.push_back(g.degree());
    }
    check_grade_positive(amb, in.f, cfg);
    // Phi by deterministic division: a_j = sum_i phi_ij f_i  (mod Q)
    ModOrder plain;
    std::vector<MVec> cols;
    for (const auto& g : in.f) cols.push_back(MVec::from_poly(g, 0, amb.P, plain));
    std::vector<MVec> qrels = ambient_quotient_rels(amb, 1);
    in.Phi.assign(in.f.size(), std::vector<Polynomial>(in.a.size(), Polynomial::zero(amb.P)));
    for (std::size_t j = 0; j < in.a.size(); ++j) {
        MVec v = MVec::from_poly(in.a[j], 0, amb.P, plain);
        auto u = module_lift(amb.P, 1, cols, qrels, v, cfg);
        if (!u) throw hypothesis_error("a_" + std::to_string(j + 1) + " is not in I");
        for (std::size_t i = 0; i < in.f.size(); ++i) in.Phi[i][j] = (*u)[i];
    }
    return in;
}

ResidualInput make_residual_input_general(const Ambient& amb, std::vector<Polynomial> f,
                                          int count, int degree, std::uint64_t seed,
                                          const GBConfig& cfg) {
    ResidualInput in;
    in.amb = amb;
    in.f = std::move(f);
    for (const auto& g : in.f) {
        if (g.is_zero() || !g.is_homogeneous())
            throw error("residual input expects nonzero homogeneous f generators");
        in.d.push_back(g.degree());
    }
    check_grade_positive(amb, in.f, cfg);
    std::vector<std::vector<Polynomial>> c;
    in.a = general_elements(amb, in.f, count, degree, seed, &c);
    in.Phi = std::move(c);
    in.l.assign(static_cast<std::size_t>(count), degree);
    in.seed = seed;
    in.seeded_general = true;
    return in;
}

ColonResult residual_colon(const ResidualInput& in, const GBConfig& cfg) {
    ColonResult res{ideal_colon(in.a_ideal(), in.I_ideal(), cfg)};
    if (is_unit_ideal(res.J, cfg)) {
        res.proper = false;
        res.height_J = kHeightInfinity;
        return res;
    }
    res.height_J = height(res.J, cfg);
    return res;
}

Classification classify_residual(const ResidualInput& in, const Ideal& J, const GBConfig& cfg) {
    Classification c;
    bool unit = is_unit_ideal(J, cfg);
    c.ht_J = unit ? kHeightInfinity : height(J, cfg);
    c.algebraic = !unit && c.ht_J >= in.s();
    Ideal IJ = ideal_sum(in.I_ideal(), J);
    c.ht_I_plus_J = is_unit_ideal(IJ, cfg) ? kHeightInfinity : height(IJ, cfg);
    c.geometric = c.algebraic && c.ht_I_plus_J >= in.s() + 1;
    Ideal fitt1 = fitting_ideal(Subquotient::ideal_pair(in.I_ideal(), in.a_ideal()), 1, cfg);
    Ideal locus = ideal_sum(fitt1, IJ);
    c.ht_fitt_locus = is_unit_ideal(locus, cfg) ? kHeightInfinity : height(locus, cfg);
    c.arithmetic = c.algebraic && c.ht_fitt_locus >= in.s() + 1;
    if (c.geometric && !c.arithmetic)
        throw internal_check_error("geometric residual failed the arithmetic encoding");
    return c;
}

RMinResult r_min_generated(const Ambient& amb, const std::vector<Polynomial>& f, int zeta,
                           const GBConfig& cfg) {
    RMinResult out;
    Ideal I(amb, f);
    // the given generators must be minimal
    auto trimmed = trim_generators(amb, f, cfg);
    if (trimmed.size() != f.size())
        throw hypothesis_error("generators of I are not minimal (" +
                               std::to_string(trimmed.size()) + " of " +
                               std::to_string(f.size()) + " survive trimming)");
    GradedMap phi = presentation(Subquotient::ideal_as_module(I), cfg);
    std::vector<Polynomial> entries;
    for (int i = 0; i < phi.rows(); ++i)
        for (int j = 0; j < phi.ncols(); ++j)
            if (!phi.entry(i, j).is_zero()) entries.push_back(phi.entry(i, j));
    out.entries_ideal = Ideal(amb, entries);
    out.ht_I = height(I, cfg);
    out.ht_entries =
        is_unit_ideal(out.entries_ideal, cfg) ? kHeightInfinity : height(out.entries_ideal, cfg);
    Ideal T = ideal_saturation(I, out.entries_ideal, cfg);
    out.saturation_unit = is_unit_ideal(T, cfg);
    int dimR = dim_of_ring(amb, cfg);
    out.r_min = out.saturation_unit || zeta > dimR;
    std::ostringstream diag;
    diag << "ht(I) = " << out.ht_I << ", ht(I_1(phi)) = "
         << (out.ht_entries == kHeightInfinity ? std::string("inf")
                                               : std::to_string(out.ht_entries))
         << ", sat(I, I_1(phi)) " << (out.saturation_unit ? "= (1)" : "proper");
    if (zeta == out.ht_I) {
        out.radical_match = radical_equal(I, out.entries_ideal, cfg);
        diag << ", rad(I) " << (out.radical_match ? "=" : "!=") << " rad(I_1(phi))";
    }
    if (!out.r_min)
        diag << "; some prime of height >= " << zeta
             << " over I avoids I_1(phi): not r-minimally generated from height " << zeta;
    out.diagnostics = diag.str();
    return out;
}

bool g_condition(const Ambient& amb, const std::vector<Polynomial>& f, int s, bool minus,
                 const GBConfig& cfg) {
    Ideal I(amb, f);
    Subquotient M = Subquotient::ideal_as_module(I);
    for (int k = 1; k <= s - 1; ++k) {
        Ideal Fk = fitting_ideal(M, k, cfg);
        int ht = is_unit_ideal(Fk, cfg) ? kHeightInfinity : height(Fk, cfg);
        int bound = minus ? k : k + 1;
        if (ht < bound) return false;
    }
    return true;
}

}  // namespace resint
