#include "resint/hilbert.hpp"

#include <cstdio>
#include <cstdlib>

namespace resint {

// Kernel generators of a graded map, truncated by a Hilbert-series stopping
// rule: the series of the kernel is known beforehand from plain bases, and
// the degree-by-degree run stops once the collected syzygies generate a
// submodule with that series. This keeps Buchberger from completing the
// (much larger) full basis of the kernel.
std::vector<MVec> graded_syzygy_generators(const RingPtr& P, const FreeModule& F,
                                           const std::vector<MVec>& cols,
                                           const std::vector<MVec>& extra,
                                           const GBConfig& cfg) {
    std::vector<int> col_tw;
    col_tw.reserve(cols.size());
    for (const auto& c : cols) {
        if (c.is_zero() || !c.homogeneous(P, F.tw))
            throw error("graded syzygies expect nonzero homogeneous columns");
        col_tw.push_back(c.degree(P, F.tw));
    }
    for (const auto& q : extra)
        if (!q.homogeneous(P, F.tw))
            throw error("graded syzygies expect homogeneous relations");
    // HS(ker) = sum_j z^{tw_j} HS(P) - HS(image in F / span(extra))
    HilbertSeries hs_extra = hilbert_series_free_quotient(P, F, extra, cfg);
    std::vector<MVec> all = cols;
    all.insert(all.end(), extra.begin(), extra.end());
    HilbertSeries hs_all = hilbert_series_free_quotient(P, F, all, cfg);
    HilbertSeries hs_image = hs_sub(hs_extra, hs_all);
    FreeModule source(P, col_tw);
    HilbertSeries hs_kernel = hs_sub(hilbert_series_free(source), hs_image);
    if (hs_kernel.num_is_zero()) return {};
    const bool debug = std::getenv("RESINT_DEBUG") != nullptr;
    auto matches = [&](int level, const std::vector<MVec>& found) {
        if (found.empty()) return false;
        HilbertSeries hs_q = hilbert_series_free_quotient(P, source, found, cfg);
        HilbertSeries span = hs_sub(hilbert_series_free(source), hs_q);
        bool ok = hs_sub(span, hs_kernel).num_is_zero();
        if (debug)
            std::fprintf(stderr, "[syz] level %d: %zu found, %s\n", level, found.size(),
                         ok ? "kernel complete" : "kernel incomplete");
        return ok;
    };
    return module_syzygies_with_stop(
        P, F.rank(), cols, extra, cfg,
        [&](int level, const std::vector<MVec>& found) { return matches(level, found); });
}

}  // namespace resint
