#include "resint/ideal.hpp"

#include <algorithm>
#include <sstream>

namespace resint {

namespace {

ModOrder rank1(const MonomialOrder& o) {
    ModOrder m;
    m.mono = o;
    return m;
}

std::vector<MVec> to_mvecs(const std::vector<Polynomial>& ps, const RingPtr& ring,
                           const ModOrder& ord) {
    std::vector<MVec> vs;
    vs.reserve(ps.size());
    for (const auto& p : ps)
        if (!p.is_zero()) vs.push_back(MVec::from_poly(p, 0, ring, ord));
    return vs;
}

}  // namespace

bool Ambient::same_as(const Ambient& o) const {
    if (!P || !o.P || !P->same_as(*o.P)) return false;
    if (quotient.size() != o.quotient.size()) return false;
    for (std::size_t i = 0; i < quotient.size(); ++i)
        if (quotient[i] != o.quotient[i]) return false;
    return true;
}

std::string Ambient::signature() const {
    std::ostringstream out;
    out << P->signature();
    if (is_quotient()) {
        out << "/(";
        for (std::size_t i = 0; i < quotient.size(); ++i) {
            if (i) out << ",";
            out << quotient[i].to_string();
        }
        out << ")";
    }
    return out.str();
}

Polynomial Ambient::reduce(const Polynomial& p, const GBConfig& cfg) const {
    if (!is_quotient() || p.is_zero()) return p;
    ModOrder ord = rank1(MonomialOrder::grevlex());
    ModuleBasis mb = module_groebner(P, ord, 1, to_mvecs(quotient, P, ord), cfg);
    return mb.normal_form(MVec::from_poly(p, 0, P, ord)).component(0, P);
}

GroebnerBasis::GroebnerBasis(Ambient amb, MonomialOrder ord, ModuleBasis mb)
    : amb_(std::move(amb)), ord_(ord), mb_(std::move(mb)) {
    for (const auto& v : mb_.elems()) elems_.push_back(v.component(0, amb_.P));
}

Polynomial GroebnerBasis::reduce(const Polynomial& p) const {
    check_same_ring(p.ring(), amb_.P);
    if (p.is_zero()) return p;
    return mb_.normal_form(MVec::from_poly(p, 0, amb_.P, mb_.order())).component(0, amb_.P);
}

bool GroebnerBasis::contains_one() const { return mb_.rank() > 0 && mb_.contains_unit_row(0); }

GroebnerBasis groebner_basis(const Ideal& I, const MonomialOrder& ord, const GBConfig& cfg) {
    const Ambient& amb = I.ambient();
    ModOrder mo = rank1(ord);
    std::vector<Polynomial> gens = I.gens();
    gens.insert(gens.end(), amb.quotient.begin(), amb.quotient.end());
    ModuleBasis mb = module_groebner(amb.P, mo, 1, to_mvecs(gens, amb.P, mo), cfg);
    return GroebnerBasis(amb, ord, std::move(mb));
}

Polynomial normal_form(const Polynomial& p, const GroebnerBasis& G) { return G.reduce(p); }

bool ideal_membership(const Polynomial& p, const Ideal& I, const GBConfig& cfg) {
    check_same_ring(p.ring(), I.ambient().P);
    return groebner_basis(I, MonomialOrder::grevlex(), cfg).reduce(p).is_zero();
}

bool ideal_contains(const Ideal& big, const Ideal& small, const GBConfig& cfg) {
    if (!big.ambient().same_as(small.ambient()))
        throw ring_mismatch_error("ideal containment across different ambients");
    GroebnerBasis G = groebner_basis(big, MonomialOrder::grevlex(), cfg);
    for (const auto& g : small.gens())
        if (!G.reduce(g).is_zero()) return false;
    return true;
}

bool ideal_equal(const Ideal& I, const Ideal& J, const GBConfig& cfg) {
    return ideal_contains(I, J, cfg) && ideal_contains(J, I, cfg);
}

bool is_unit_ideal(const Ideal& I, const GBConfig& cfg) {
    return groebner_basis(I, MonomialOrder::grevlex(), cfg).contains_one();
}

Ideal ideal_sum(const Ideal& A, const Ideal& B) {
    if (!A.ambient().same_as(B.ambient()))
        throw ring_mismatch_error("ideal sum across different ambients");
    std::vector<Polynomial> gens = A.gens();
    gens.insert(gens.end(), B.gens().begin(), B.gens().end());
    return Ideal(A.ambient(), std::move(gens));
}

RingPtr extend_ring(const RingPtr& P, const std::vector<std::string>& names,
                    const std::vector<int>& weights,
                    const std::vector<int>& second_weights_all) {
    std::vector<std::string> vars = P->vars();
    vars.insert(vars.end(), names.begin(), names.end());
    std::vector<int> w = P->weights();
    w.insert(w.end(), weights.begin(), weights.end());
    std::vector<int> w2 = second_weights_all;
    if (w2.empty() && P->bigraded()) {
        w2 = P->second_weights();
        w2.resize(vars.size(), 0);
    }
    return PolyRing::make(vars, P->characteristic(), w, w2);
}

Polynomial promote(const Polynomial& p, const RingPtr& ext) {
    std::vector<int> map(p.ring()->nvars());
    for (std::size_t i = 0; i < map.size(); ++i) map[i] = static_cast<int>(i);
    return p.map_vars(ext, map);
}

Polynomial restrict_poly(const Polynomial& p, const RingPtr& P) {
    std::vector<int> map(p.ring()->nvars(), -1);
    for (std::size_t i = 0; i < P->nvars(); ++i) map[i] = static_cast<int>(i);
    return p.map_vars(P, map);
}

namespace {

// intersection of two plain ideals of P via one tag variable
std::vector<Polynomial> intersection_in_P(const RingPtr& P, const std::vector<Polynomial>& U,
                                          const std::vector<Polynomial>& V,
                                          const GBConfig& cfg) {
    RingPtr ext = extend_ring(P, {"@w"}, {1});
    int widx = static_cast<int>(ext->nvars()) - 1;
    Polynomial w = Polynomial::variable(ext, widx);
    Polynomial one_minus_w = Polynomial::one(ext) - w;
    std::vector<Polynomial> gens;
    for (const auto& g : U)
        if (!g.is_zero()) gens.push_back(promote(g, ext) * w);
    for (const auto& g : V)
        if (!g.is_zero()) gens.push_back(promote(g, ext) * one_minus_w);
    MonomialOrder elim = MonomialOrder::elimination({widx});
    ModOrder mo = rank1(elim);
    ModuleBasis mb = module_groebner(ext, mo, 1, to_mvecs(gens, ext, mo), cfg);
    std::vector<Polynomial> out;
    for (const auto& v : mb.elems()) {
        Polynomial g = v.component(0, ext);
        bool uses_w = false;
        for (const auto& t : g.terms())
            if (t.mon.e[static_cast<std::size_t>(widx)]) { uses_w = true; break; }
        if (!uses_w) out.push_back(restrict_poly(g, P));
    }
    return out;
}

std::vector<Polynomial> lifted_gens(const Ideal& A) {
    std::vector<Polynomial> g = A.gens();
    g.insert(g.end(), A.ambient().quotient.begin(), A.ambient().quotient.end());
    return g;
}

}  // namespace

Ideal ideal_intersection(const Ideal& A, const Ideal& B, const GBConfig& cfg) {
    if (!A.ambient().same_as(B.ambient()))
        throw ring_mismatch_error("intersection across different ambients");
    const Ambient& amb = A.ambient();
    return Ideal(amb, intersection_in_P(amb.P, lifted_gens(A), lifted_gens(B), cfg));
}

namespace {

// A :_R b = image of ((A + Q) :_P b); the inner intersection is with the
// principal ideal (b) of P itself
Ideal colon_single(const Ideal& A, const Polynomial& b, const GBConfig& cfg) {
    const Ambient& amb = A.ambient();
    std::vector<Polynomial> inter = intersection_in_P(amb.P, lifted_gens(A), {b}, cfg);
    std::vector<Polynomial> out;
    for (const auto& g : inter) out.push_back(g.exact_divide(b));
    return Ideal(amb, std::move(out));
}

}  // namespace

Ideal ideal_colon(const Ideal& A, const Ideal& B, const GBConfig& cfg) {
    if (!A.ambient().same_as(B.ambient()))
        throw ring_mismatch_error("colon across different ambients");
    const Ambient& amb = A.ambient();
    std::vector<Polynomial> bs;
    for (const auto& b : B.gens()) {
        Polynomial r = amb.reduce(b, cfg);
        if (!r.is_zero()) bs.push_back(b);
    }
    if (bs.empty())  // colon by the zero ideal
        return Ideal(amb, {Polynomial::one(amb.P)});
    Ideal acc = colon_single(A, bs[0], cfg);
    for (std::size_t i = 1; i < bs.size(); ++i)
        acc = ideal_intersection(acc, colon_single(A, bs[i], cfg), cfg);
    return acc;
}

Ideal ideal_saturation(const Ideal& A, const Ideal& B, const GBConfig& cfg) {
    Ideal cur = A;
    for (;;) {
        Ideal next = ideal_colon(cur, B, cfg);
        if (ideal_contains(cur, next, cfg)) return cur;
        cur = next;
    }
}

Ideal eliminate(const Ideal& I, const std::vector<int>& var_indices, const GBConfig& cfg) {
    const Ambient& amb = I.ambient();
    std::vector<Polynomial> gens = I.gens();
    gens.insert(gens.end(), amb.quotient.begin(), amb.quotient.end());
    MonomialOrder elim = MonomialOrder::elimination(var_indices);
    ModOrder mo = rank1(elim);
    ModuleBasis mb = module_groebner(amb.P, mo, 1, to_mvecs(gens, amb.P, mo), cfg);
    std::vector<char> drop(amb.P->nvars(), 0);
    for (int v : var_indices) drop[static_cast<std::size_t>(v)] = 1;
    std::vector<Polynomial> out;
    for (const auto& v : mb.elems()) {
        Polynomial g = v.component(0, amb.P);
        bool uses = false;
        for (const auto& t : g.terms())
            for (std::size_t k = 0; k < drop.size() && !uses; ++k)
                if (drop[k] && t.mon.e[k]) uses = true;
        if (!uses) out.push_back(g);
    }
    return Ideal(Ambient(amb.P), std::move(out));
}

bool radical_membership(const Polynomial& p, const Ideal& I, const GBConfig& cfg) {
    check_same_ring(p.ring(), I.ambient().P);
    if (p.is_zero()) return true;
    const Ambient& amb = I.ambient();
    // Rabinowitsch: p in rad(I) iff 1 in (I, 1 - y*p) in P[y]
    RingPtr ext = extend_ring(amb.P, {"@y"}, {1});
    std::vector<Polynomial> gens;
    for (const auto& g : I.gens()) gens.push_back(promote(g, ext));
    for (const auto& q : amb.quotient) gens.push_back(promote(q, ext));
    Polynomial y = Polynomial::variable(ext, static_cast<int>(ext->nvars()) - 1);
    gens.push_back(Polynomial::one(ext) - y * promote(p, ext));
    ModOrder mo = rank1(MonomialOrder::grevlex());
    ModuleBasis mb = module_groebner(ext, mo, 1, to_mvecs(gens, ext, mo), cfg);
    return mb.contains_unit_row(0);
}

bool radical_contains(const Ideal& A, const Ideal& B, const GBConfig& cfg) {
    if (!A.ambient().same_as(B.ambient()))
        throw ring_mismatch_error("radical containment across different ambients");
    for (const auto& b : B.gens())
        if (!radical_membership(b, A, cfg)) return false;
    return true;
}

bool radical_equal(const Ideal& A, const Ideal& B, const GBConfig& cfg) {
    return radical_contains(A, B, cfg) && radical_contains(B, A, cfg);
}

std::vector<Polynomial> trim_generators(const Ambient& amb, std::vector<Polynomial> gens,
                                        const GBConfig& cfg) {
    std::vector<Polynomial> nz;
    for (auto& g : gens) {
        Polynomial r = amb.reduce(g, cfg);
        if (r.is_zero()) continue;
        if (!r.is_homogeneous()) throw error("trim_generators expects homogeneous input");
        nz.push_back(std::move(r));
    }
    std::sort(nz.begin(), nz.end(), [](const Polynomial& a, const Polynomial& b) {
        if (a.degree() != b.degree()) return a.degree() < b.degree();
        return poly_cmp(a, b) < 0;
    });
    std::vector<Polynomial> kept;
    for (const auto& g : nz) {
        if (kept.empty()) { kept.push_back(g); continue; }
        if (ideal_membership(g, Ideal(amb, kept), cfg)) continue;
        kept.push_back(g);
    }
    return kept;
}

}  // namespace resint
