#pragma once

#include <gmpxx.h>

#include <map>

#include "resint/module.hpp"

namespace resint {

// Series num(z) / prod_i (1 - z^{w_i}), num an integer Laurent polynomial
// (coef[i] is the coefficient of z^{off+i}).
struct HilbertSeries {
    int off = 0;
    std::vector<mpz_class> coef;
    std::vector<int> denom_weights;

    bool num_is_zero() const {
        for (const auto& c : coef) if (c != 0) return false;
        return true;
    }
    void normalize() {
        std::size_t lead = 0;
        while (lead < coef.size() && coef[lead] == 0) ++lead;
        if (lead) {
            coef.erase(coef.begin(), coef.begin() + static_cast<std::ptrdiff_t>(lead));
            off += static_cast<int>(lead);
        }
        while (!coef.empty() && coef.back() == 0) coef.pop_back();
        if (coef.empty()) off = 0;
    }
    std::string to_string() const;
};

HilbertSeries hs_add(const HilbertSeries& a, const HilbertSeries& b);
HilbertSeries hs_sub(const HilbertSeries& a, const HilbertSeries& b);
HilbertSeries hs_shift(HilbertSeries a, int d);  // multiply by z^d
// multiply the numerator by an integer Laurent polynomial
HilbertSeries hs_mul_laurent(const HilbertSeries& a, const std::map<int, long long>& poly);

// numerator of P/(monomial ideal) via the pivot recursion
HilbertSeries hilbert_series_monomial_quotient(const RingPtr& ring,
                                               std::vector<Monomial> gens);

HilbertSeries hilbert_series_ring(const Ambient& amb, const GBConfig& cfg = {});   // R = P/Q
HilbertSeries hilbert_series_quotient(const Ideal& J, const GBConfig& cfg = {});   // R/J
HilbertSeries hilbert_series_free(const FreeModule& F);
// F / span(sub) over the polynomial ring itself
HilbertSeries hilbert_series_free_quotient(const RingPtr& ring, const FreeModule& F,
                                           const std::vector<MVec>& sub,
                                           const GBConfig& cfg = {});
HilbertSeries hilbert_series_subquotient(const Subquotient& M, const GBConfig& cfg = {});
// alternating sum over the free modules of a resolution (Euler characteristic)
HilbertSeries hilbert_series_euler(const Resolution& res);

long long hilbert_function(const HilbertSeries& hs, int n);

// pole order at z = 1; -1 for the zero module
int series_dimension(const HilbertSeries& hs);
// normalized leading coefficient; standard grading only (weights all 1)
long long series_multiplicity(const HilbertSeries& hs);

int krull_dim(const Subquotient& M, const GBConfig& cfg = {});
long long multiplicity(const Subquotient& M, const GBConfig& cfg = {});

}  // namespace resint
