#include "resint/hilbert.hpp"

#include <algorithm>
#include <sstream>

namespace resint {

namespace {

void check_same_denoms(const HilbertSeries& a, const HilbertSeries& b) {
    if (a.denom_weights != b.denom_weights)
        throw error("Hilbert series over different denominators");
}

// minimal monomial generators (drop anything divisible by another)
std::vector<Monomial> interreduce(std::vector<Monomial> gens) {
    std::vector<Monomial> out;
    std::sort(gens.begin(), gens.end(), [](const Monomial& a, const Monomial& b) {
        if (a.total() != b.total()) return a.total() < b.total();
        return a.e < b.e;
    });
    gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
    for (const auto& m : gens) {
        bool red = false;
        for (const auto& k : out)
            if (k.divides(m)) { red = true; break; }
        if (!red) out.push_back(m);
    }
    return out;
}

// numerator polynomial as coefficient map degree -> coeff
using NumPoly = std::map<int, mpz_class>;

NumPoly np_one() { return {{0, 1}}; }

NumPoly np_mul(const NumPoly& a, const NumPoly& b) {
    NumPoly r;
    for (const auto& [da, ca] : a)
        for (const auto& [db, cb] : b) r[da + db] += ca * cb;
    return r;
}

NumPoly np_add(NumPoly a, const NumPoly& b) {
    for (const auto& [d, c] : b) a[d] += c;
    return a;
}

NumPoly np_shift_scale(const NumPoly& a, int shift) {
    NumPoly r;
    for (const auto& [d, c] : a) r[d + shift] = c;
    return r;
}

// N(I) with HS(P/I) = N / prod(1 - z^{w_i}); Bigatti-style pivot splitting
NumPoly hilbert_num(const PolyRing& ring, std::vector<Monomial> gens) {
    gens = interreduce(std::move(gens));
    if (gens.empty()) return np_one();
    if (gens.size() == 1 && gens[0].is_one()) return {};
    // base case: pairwise coprime => complete intersection
    bool coprime = true;
    for (std::size_t i = 0; i < gens.size() && coprime; ++i)
        for (std::size_t j = i + 1; j < gens.size() && coprime; ++j)
            if (!gens[i].coprime(gens[j])) coprime = false;
    if (coprime) {
        NumPoly acc = np_one();
        for (const auto& m : gens) {
            NumPoly f{{0, 1}, {ring.degree(m), -1}};
            acc = np_mul(acc, f);
        }
        return acc;
    }
    // pivot: most frequent variable, exponent = min positive occurrence
    std::vector<int> freq(ring.nvars(), 0);
    for (const auto& m : gens)
        for (std::size_t v = 0; v < ring.nvars(); ++v)
            if (m.e[v]) ++freq[v];
    std::size_t pv = 0;
    for (std::size_t v = 1; v < ring.nvars(); ++v)
        if (freq[v] > freq[pv]) pv = v;
    int pe = 0;
    for (const auto& m : gens)
        if (m.e[pv] > 0 && (pe == 0 || m.e[pv] < pe)) pe = m.e[pv];
    Monomial pivot(ring.nvars());
    pivot.e[pv] = pe;
    // I = (I + (pivot)) "+" z^deg(pivot) * (I : pivot)
    std::vector<Monomial> plus = gens;
    plus.push_back(pivot);
    std::vector<Monomial> colon;
    colon.reserve(gens.size());
    for (const auto& m : gens) {
        Monomial q(ring.nvars());
        for (std::size_t v = 0; v < ring.nvars(); ++v)
            q.e[v] = std::max(0, m.e[v] - pivot.e[v]);
        colon.push_back(q);
    }
    NumPoly a = hilbert_num(ring, std::move(plus));
    NumPoly b = hilbert_num(ring, std::move(colon));
    return np_add(a, np_shift_scale(b, ring.degree(pivot)));
}

HilbertSeries from_numpoly(const RingPtr& ring, const NumPoly& np, int extra_shift = 0) {
    HilbertSeries hs;
    hs.denom_weights = ring->weights();
    if (np.empty()) return hs;
    int lo = np.begin()->first + extra_shift;
    int hi = np.rbegin()->first + extra_shift;
    hs.off = lo;
    hs.coef.assign(static_cast<std::size_t>(hi - lo + 1), 0);
    for (const auto& [d, c] : np) hs.coef[static_cast<std::size_t>(d + extra_shift - lo)] = c;
    hs.normalize();
    return hs;
}

// leading-term monomials per component of a reduced module basis
std::vector<std::vector<Monomial>> lead_monomials_by_comp(const ModuleBasis& mb, int rank) {
    std::vector<std::vector<Monomial>> out(static_cast<std::size_t>(rank));
    for (const auto& g : mb.elems()) {
        const MTerm& lt = g.lead();
        out[static_cast<std::size_t>(lt.comp)].push_back(lt.mon);
    }
    return out;
}

HilbertSeries hs_of_free_quotient(const Ambient& amb, const FreeModule& F,
                                  const std::vector<MVec>& sub, const GBConfig& cfg) {
    ModuleBasis mb = submodule_basis(amb.P, F.rank(), sub,
                                     ambient_quotient_rels(amb, F.rank()), cfg);
    auto leads = lead_monomials_by_comp(mb, F.rank());
    HilbertSeries acc;
    acc.denom_weights = amb.P->weights();
    for (int c = 0; c < F.rank(); ++c) {
        NumPoly n = hilbert_num(*amb.P, leads[static_cast<std::size_t>(c)]);
        HilbertSeries piece = from_numpoly(amb.P, n, F.tw[static_cast<std::size_t>(c)]);
        acc = hs_add(acc, piece);
    }
    return acc;
}

}  // namespace

HilbertSeries hilbert_series_free_quotient(const RingPtr& ring, const FreeModule& F,
                                           const std::vector<MVec>& sub, const GBConfig& cfg) {
    return hs_of_free_quotient(Ambient(ring), F, sub, cfg);
}

std::string HilbertSeries::to_string() const {
    std::ostringstream out;
    out << "(";
    bool first = true;
    for (std::size_t i = 0; i < coef.size(); ++i) {
        if (coef[i] == 0) continue;
        mpz_class c = coef[i];
        int d = off + static_cast<int>(i);
        if (!first) out << (c > 0 ? " + " : " - ");
        else if (c < 0) out << "-";
        first = false;
        mpz_class a = abs(c);
        if (a != 1 || d == 0) out << a.get_str();
        if (d != 0) {
            if (a != 1) out << "*";
            out << "z";
            if (d != 1) out << "^" << d;
        }
    }
    if (first) out << "0";
    out << ") / (";
    for (std::size_t i = 0; i < denom_weights.size(); ++i) {
        if (i) out << "*";
        out << "(1-z";
        if (denom_weights[i] != 1) out << "^" << denom_weights[i];
        out << ")";
    }
    out << ")";
    return out.str();
}

HilbertSeries hs_add(const HilbertSeries& a, const HilbertSeries& b) {
    if (a.num_is_zero()) return b;
    if (b.num_is_zero()) return a;
    check_same_denoms(a, b);
    HilbertSeries r;
    r.denom_weights = a.denom_weights;
    r.off = std::min(a.off, b.off);
    int hi = std::max(a.off + static_cast<int>(a.coef.size()),
                      b.off + static_cast<int>(b.coef.size()));
    r.coef.assign(static_cast<std::size_t>(hi - r.off), 0);
    for (std::size_t i = 0; i < a.coef.size(); ++i)
        r.coef[static_cast<std::size_t>(a.off - r.off) + i] += a.coef[i];
    for (std::size_t i = 0; i < b.coef.size(); ++i)
        r.coef[static_cast<std::size_t>(b.off - r.off) + i] += b.coef[i];
    r.normalize();
    return r;
}

HilbertSeries hs_sub(const HilbertSeries& a, const HilbertSeries& b) {
    HilbertSeries nb = b;
    for (auto& c : nb.coef) c = -c;
    if (a.num_is_zero()) return nb;
    return hs_add(a, nb);
}

HilbertSeries hs_shift(HilbertSeries a, int d) {
    a.off += d;
    return a;
}

HilbertSeries hs_mul_laurent(const HilbertSeries& a, const std::map<int, long long>& poly) {
    HilbertSeries acc;
    acc.denom_weights = a.denom_weights;
    for (const auto& [d, c] : poly) {
        if (!c) continue;
        HilbertSeries piece = hs_shift(a, d);
        mpz_class cz(static_cast<long>(c));
        for (auto& x : piece.coef) x *= cz;
        acc = acc.num_is_zero() ? piece : hs_add(acc, piece);
    }
    return acc;
}

HilbertSeries hilbert_series_monomial_quotient(const RingPtr& ring, std::vector<Monomial> gens) {
    return from_numpoly(ring, hilbert_num(*ring, std::move(gens)));
}

HilbertSeries hilbert_series_ring(const Ambient& amb, const GBConfig& cfg) {
    return hilbert_series_quotient(Ideal(amb, {}), cfg);
}

HilbertSeries hilbert_series_quotient(const Ideal& J, const GBConfig& cfg) {
    const Ambient& amb = J.ambient();
    for (const auto& g : J.gens())
        if (!g.is_zero() && !g.is_homogeneous())
            throw error("Hilbert series requires homogeneous input");
    GroebnerBasis G = groebner_basis(J, MonomialOrder::grevlex(), cfg);
    std::vector<Monomial> leads;
    for (const auto& g : G.elements())
        if (!g.is_zero()) leads.push_back(g.leading_term().mon);
    return hilbert_series_monomial_quotient(amb.P, std::move(leads));
}

HilbertSeries hilbert_series_free(const FreeModule& F) {
    HilbertSeries acc;
    acc.denom_weights = F.ring->weights();
    for (int c = 0; c < F.rank(); ++c) {
        HilbertSeries piece;
        piece.denom_weights = acc.denom_weights;
        piece.off = F.tw[static_cast<std::size_t>(c)];
        piece.coef = {1};
        acc = hs_add(acc, piece);
    }
    return acc;
}

HilbertSeries hilbert_series_subquotient(const Subquotient& M, const GBConfig& cfg) {
    for (const auto& g : M.gens)
        if (!g.homogeneous(M.amb.P, M.F.tw))
            throw error("Hilbert series requires graded input");
    for (const auto& r : M.rels)
        if (!r.homogeneous(M.amb.P, M.F.tw))
            throw error("Hilbert series requires graded input");
    // HS(U/V) = HS(F/V) - HS(F/U) for V <= U <= F
    std::vector<MVec> U = M.gens;
    U.insert(U.end(), M.rels.begin(), M.rels.end());
    HilbertSeries hs_FV = hs_of_free_quotient(M.amb, M.F, M.rels, cfg);
    HilbertSeries hs_FU = hs_of_free_quotient(M.amb, M.F, U, cfg);
    return hs_sub(hs_FV, hs_FU);
}

HilbertSeries hilbert_series_euler(const Resolution& res) {
    HilbertSeries acc = hilbert_series_free(res.F0);
    for (int i = 0; i < res.length(); ++i) {
        HilbertSeries piece =
            hilbert_series_free(res.diffs[static_cast<std::size_t>(i)].src());
        acc = (i % 2 == 0) ? hs_sub(acc, piece) : hs_add(acc, piece);
    }
    return acc;
}

long long hilbert_function(const HilbertSeries& hs, int n) {
    if (hs.num_is_zero()) return 0;
    if (n < hs.off) return 0;
    std::size_t len = static_cast<std::size_t>(n - hs.off) + 1;
    std::vector<mpz_class> c(len, 0);
    for (std::size_t i = 0; i < hs.coef.size() && i < len; ++i) c[i] = hs.coef[i];
    for (int w : hs.denom_weights)
        for (std::size_t i = static_cast<std::size_t>(w); i < len; ++i)
            c[i] += c[i - static_cast<std::size_t>(w)];
    return static_cast<long long>(c[len - 1].get_si());
}

int series_dimension(const HilbertSeries& hs) {
    if (hs.num_is_zero()) return -1;
    std::vector<mpz_class> c = hs.coef;
    int vanish = 0;
    for (;;) {
        mpz_class at1 = 0;
        for (const auto& x : c) at1 += x;
        if (at1 != 0) break;
        // divide by (1 - z): prefix sums, degree drops by one
        std::vector<mpz_class> q(c.size() ? c.size() - 1 : 0, 0);
        mpz_class run = 0;
        for (std::size_t i = 0; i + 1 < c.size(); ++i) {
            run += c[i];
            q[i] = run;
        }
        c = std::move(q);
        ++vanish;
        if (c.empty()) break;
    }
    return static_cast<int>(hs.denom_weights.size()) - vanish;
}

long long series_multiplicity(const HilbertSeries& hs) {
    for (int w : hs.denom_weights)
        if (w != 1)
            throw error("multiplicity is only defined here for standard gradings");
    if (hs.num_is_zero()) return 0;
    std::vector<mpz_class> c = hs.coef;
    for (;;) {
        mpz_class at1 = 0;
        for (const auto& x : c) at1 += x;
        if (at1 != 0) return static_cast<long long>(at1.get_si());
        std::vector<mpz_class> q(c.size() ? c.size() - 1 : 0, 0);
        mpz_class run = 0;
        for (std::size_t i = 0; i + 1 < c.size(); ++i) {
            run += c[i];
            q[i] = run;
        }
        c = std::move(q);
        if (c.empty()) return 0;
    }
}

int krull_dim(const Subquotient& M, const GBConfig& cfg) {
    return series_dimension(hilbert_series_subquotient(M, cfg));
}

long long multiplicity(const Subquotient& M, const GBConfig& cfg) {
    HilbertSeries hs = hilbert_series_subquotient(M, cfg);
    long long e = series_multiplicity(hs);
    return e < 0 ? -e : e;
}

}  // namespace resint
