#include "resint/layout.hpp"

#include <functional>
#include <sstream>

#include "resint/prng.hpp"

namespace resint {

namespace {

// compositions beta in Z^r, beta_i >= 1, |beta| = m
std::vector<std::vector<int>> positive_compositions(int m, int r) {
    std::vector<std::vector<int>> out;
    if (r <= 0 || m < r) return out;
    std::vector<int> cur(static_cast<std::size_t>(r), 1);
    std::function<void(int, int)> rec = [&](int pos, int rem) {
        if (pos == r - 1) {
            cur[static_cast<std::size_t>(pos)] = rem;
            out.push_back(cur);
            return;
        }
        for (int v = 1; v <= rem - (r - pos - 1); ++v) {
            cur[static_cast<std::size_t>(pos)] = v;
            rec(pos + 1, rem - v);
        }
    };
    rec(0, m);
    return out;
}

int sum_over(const std::vector<int>& vals, const std::vector<int>& idx) {
    int s = 0;
    for (int i : idx) s += vals[static_cast<std::size_t>(i)];
    return s;
}

}  // namespace

GradedComplexLayout f_complex_layout(int r, int s, const std::vector<int>& d,
                                     const std::vector<int>& l) {
    if (r < 1 || s < 1) throw error("layout needs r, s >= 1");
    if (static_cast<int>(d.size()) != r || static_cast<int>(l.size()) != s)
        throw error("degree lists must have lengths r and s");
    GradedComplexLayout lay;
    lay.kind = "F";
    lay.twists.assign(static_cast<std::size_t>(s) + 1, {});
    lay.twists[0] = {0};
    for (int i = 1; i <= s; ++i) {
        std::vector<int>& tw = lay.twists[static_cast<std::size_t>(i)];
        for (int p = 0; p <= r - 1; ++p) {
            int q = r + i - 1 - p;
            if (q < 0 || q > s) continue;
            // Koszul subset D (|D| = p+1 when p >= 1, empty when p = 0),
            // gamma subset E (|E| = q), t-shift j', inverse exponents beta
            std::vector<std::vector<int>> Ds =
                p == 0 ? std::vector<std::vector<int>>{{}} : subsets_of_size(r, p + 1);
            std::vector<int> jprimes;
            if (p == 0) jprimes.push_back(0);
            else
                for (int jp = 1; jp <= p; ++jp) jprimes.push_back(jp);
            for (const auto& D : Ds)
                for (const auto& E : subsets_of_size(s, q))
                    for (int jp : jprimes)
                        for (const auto& beta : positive_compositions(jp + q, r)) {
                            int shift = 0;
                            for (int k = 0; k < r; ++k)
                                shift += beta[static_cast<std::size_t>(k)] *
                                         d[static_cast<std::size_t>(k)];
                            tw.push_back(-(sum_over(d, D) + sum_over(l, E) - shift));
                        }
        }
        std::sort(tw.begin(), tw.end());
        if (tw.empty())
            throw internal_check_error("F-layout produced an empty term at index " +
                                       std::to_string(i));
    }
    return lay;
}

GradedComplexLayout q_complex_layout(const ResidualInput& in, const GBConfig& cfg) {
    const int r = in.r();
    const int s = in.s();
    // properness is order-sensitive; the theorem only needs some proper
    // generating sequence, and permutations leave the construction data
    // (degrees, Sym(I), the Koszul cycles up to iso) unchanged
    std::vector<Polynomial> f = in.f;
    std::sort(f.begin(), f.end(), [](const Polynomial& a, const Polynomial& b) {
        return poly_cmp(a, b) < 0;
    });
    std::vector<Polynomial> proper_f;
    std::string first_witness;
    std::vector<Polynomial> candidate = in.f;
    ProperSeqResult ps0 = proper_sequence_check(in.amb, candidate, cfg);
    if (ps0.proper) proper_f = candidate;
    else {
        first_witness = ps0.witness;
        do {
            if (f == in.f) continue;
            ProperSeqResult ps = proper_sequence_check(in.amb, f, cfg);
            if (ps.proper) { proper_f = f; break; }
        } while (std::next_permutation(f.begin(), f.end(),
                                       [](const Polynomial& a, const Polynomial& b) {
                                           return poly_cmp(a, b) < 0;
                                       }));
    }
    if (proper_f.empty())
        throw hypothesis_error("Q-layout needs a proper sequence (no generator order works): " +
                               first_witness);
    SymBetti sb;
    if (in.amb.is_quotient()) {
        auto bounded = sym_betti_bounded(in.amb, proper_f, r - 1, cfg);
        if (!bounded)
            throw hypothesis_error(
                "Sym(I) has no S-free resolution of length <= r-1 over this base");
        sb = *bounded;
    } else {
        sb = sym_bigraded_betti(in.amb, proper_f, cfg);
    }
    if (sb.pd > r - 1)
        throw hypothesis_error("pd_S(Sym I) = " + std::to_string(sb.pd) +
                               " exceeds r-1; sliding-depth hypotheses fail");
    if (sb.t_regularity != 0)
        throw hypothesis_error("t-regularity of Sym(I) is " +
                               std::to_string(sb.t_regularity) + ", not 0");
    GradedComplexLayout lay;
    lay.kind = "Q";
    lay.twists.assign(static_cast<std::size_t>(s) + 1, {});
    lay.twists[0] = {0};
    for (int i = 1; i <= s; ++i) {
        std::vector<int>& tw = lay.twists[static_cast<std::size_t>(i)];
        for (const auto& [key, count] : sb.betti.entries) {
            int h = key.first;             // homological index of the Betti piece
            int a = key.second[0];         // R-twist
            int jt = key.second.size() > 1 ? key.second[1] : 0;  // t-twist
            int q = r + i - 1 - h;
            if (q < 0 || q > s) continue;
            for (const auto& E : subsets_of_size(s, q))
                for (const auto& beta : positive_compositions(jt + q, r)) {
                    int shift = 0;
                    for (int k = 0; k < r; ++k)
                        shift += beta[static_cast<std::size_t>(k)] *
                                 in.d[static_cast<std::size_t>(k)];
                    for (int c = 0; c < count; ++c)
                        tw.push_back(-(a + sum_over(in.l, E) - shift));
                }
        }
        std::sort(tw.begin(), tw.end());
    }
    return lay;
}

HilbertIdentity hilbert_identity_check(const GradedComplexLayout& layout,
                                       const HilbertSeries& hs_R, const HilbertSeries& hs_M,
                                       int n_max) {
    HilbertIdentity res;
    for (int n = 0; n <= n_max; ++n) {
        long long lhs = hilbert_function(hs_M, n);
        long long rhs = 0;
        for (int i = 0; i <= layout.length(); ++i) {
            long long piece = 0;
            // a stored twist a stands for R(a), whose values sit at n + a
            for (int a : layout.twists[static_cast<std::size_t>(i)])
                piece += hilbert_function(hs_R, n + a);
            rhs += (i % 2 == 0) ? piece : -piece;
        }
        if (lhs != rhs) {
            res.holds = false;
            res.first_failure = n;
            return res;
        }
    }
    return res;
}

namespace {

long long euler_multiplicity(const GradedComplexLayout& lay, const HilbertSeries& hs_R,
                             int expected_dim) {
    std::map<int, long long> laurent;
    // HS(R(a)) = z^{-a} HS(R)
    for (int i = 0; i <= lay.length(); ++i)
        for (int a : lay.twists[static_cast<std::size_t>(i)])
            laurent[-a] += (i % 2 == 0) ? 1 : -1;
    HilbertSeries chi = hs_mul_laurent(hs_R, laurent);
    if (series_dimension(chi) != expected_dim)
        throw internal_check_error("Euler-characteristic series has unexpected dimension");
    long long e = series_multiplicity(chi);
    return e < 0 ? -e : e;
}

}  // namespace

EricciResult ericci(const Ambient& amb, const std::vector<int>& d, const std::vector<int>& l,
                    std::uint64_t seed, const GBConfig& cfg) {
    if (!amb.P->standard_graded())
        throw error("ericci needs a standard graded ring");
    const int r = static_cast<int>(d.size());
    const int s = static_cast<int>(l.size());
    HilbertSeries hs_R = hilbert_series_ring(amb, cfg);
    int dimR = series_dimension(hs_R);
    GradedComplexLayout lay = f_complex_layout(r, s, d, l);
    EricciResult out;
    out.euler_route = euler_multiplicity(lay, hs_R, dimR - s);
    const int max_attempts = 8;
    std::string failures;
    for (int attempt = 0; attempt < max_attempts; ++attempt) {
        std::uint64_t sd = seed + static_cast<std::uint64_t>(attempt);
        // generic complete intersection of degrees d
        std::vector<Polynomial> fci;
        {
            std::vector<Polynomial> units{Polynomial::one(amb.P)};
            for (int t = 0; t < r; ++t) {
                auto gen = general_elements(amb, units, 1, d[static_cast<std::size_t>(t)],
                                            mix_seed(sd, static_cast<std::uint64_t>(t) + 17));
                fci.push_back(gen[0]);
            }
        }
        try {
            KoszulData kd = koszul_complex(amb, fci, cfg);
            if (kd.grade != r) {
                failures += " seed " + std::to_string(sd) + ": candidate not a regular sequence;";
                continue;
            }
            ResidualInput in;
            in.amb = amb;
            in.f = fci;
            in.d = d;
            in.seed = sd;
            in.seeded_general = true;
            in.Phi.assign(static_cast<std::size_t>(r), {});
            for (int j = 0; j < s; ++j) {
                std::vector<std::vector<Polynomial>> c;
                auto aj = general_elements(amb, fci, 1, l[static_cast<std::size_t>(j)],
                                           mix_seed(sd, 1000 + static_cast<std::uint64_t>(j)), &c);
                in.a.push_back(aj[0]);
                in.l.push_back(l[static_cast<std::size_t>(j)]);
                for (int i = 0; i < r; ++i)
                    in.Phi[static_cast<std::size_t>(i)].push_back(
                        c[static_cast<std::size_t>(i)][0]);
            }
            ColonResult col = residual_colon(in, cfg);
            if (!col.proper || col.height_J < s) {
                failures += " seed " + std::to_string(sd) + ": colon not an s-residual;";
                continue;
            }
            HilbertSeries hs_J = hilbert_series_quotient(col.J, cfg);
            if (series_dimension(hs_J) != dimR - s) {
                failures += " seed " + std::to_string(sd) + ": wrong residual dimension;";
                continue;
            }
            long long e = series_multiplicity(hs_J);
            out.generic_route = e < 0 ? -e : e;
            out.seed_used = sd;
            if (out.generic_route != out.euler_route) {
                failures += " seed " + std::to_string(sd) + ": routes disagree (" +
                            std::to_string(out.generic_route) + " vs " +
                            std::to_string(out.euler_route) + ");";
                continue;
            }
            out.value = out.euler_route;
            return out;
        } catch (const resource_limit_error&) {
            throw;
        } catch (const error& e) {
            failures += " seed " + std::to_string(sd) + ": " + e.what() + ";";
        }
    }
    throw internal_check_error("ericci routes never agreed:" + failures);
}

}  // namespace resint
