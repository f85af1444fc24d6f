#pragma once

#include <map>
#include <optional>

#include "resint/ideal.hpp"

namespace resint {

// Graded free module: rank many basis slots, a twist per slot (and a second
// twist when the ring is bigraded).
struct FreeModule {
    RingPtr ring;
    std::vector<int> tw;    // first-grading twists
    std::vector<int> tw2;   // second-grading twists (empty unless bigraded)

    FreeModule() = default;
    FreeModule(RingPtr r, std::vector<int> twists, std::vector<int> twists2 = {})
        : ring(std::move(r)), tw(std::move(twists)), tw2(std::move(twists2)) {}
    static FreeModule of_rank(RingPtr r, int rank, int twist = 0) {
        return FreeModule(std::move(r), std::vector<int>(static_cast<std::size_t>(rank), twist));
    }
    int rank() const { return static_cast<int>(tw.size()); }
};

// Map of graded free modules; columns are images of source basis elements.
class GradedMap {
public:
    GradedMap() = default;
    GradedMap(FreeModule src, FreeModule dst, std::vector<std::vector<Polynomial>> cols)
        : src_(std::move(src)), dst_(std::move(dst)), cols_(std::move(cols)) {}

    const FreeModule& src() const { return src_; }
    const FreeModule& dst() const { return dst_; }
    const std::vector<std::vector<Polynomial>>& cols() const { return cols_; }
    const Polynomial& entry(int row, int col) const {
        return cols_[static_cast<std::size_t>(col)][static_cast<std::size_t>(row)];
    }
    int rows() const { return dst_.rank(); }
    int ncols() const { return src_.rank(); }

    bool is_graded() const;            // entries homogeneous of the twist difference
    bool is_zero() const;
    GradedMap transpose() const;       // Hom(-, R): twists negate and swap
    std::vector<MVec> columns_as_mvecs() const;

    static GradedMap from_mvecs(const FreeModule& dst, const std::vector<MVec>& cols,
                                const std::vector<int>& col_tw,
                                const std::vector<int>& col_tw2 = {});

    std::string to_string() const;

private:
    FreeModule src_, dst_;
    std::vector<std::vector<Polynomial>> cols_;
};

// compose(f, g) = f after g  (g: A->B, f: B->C)
GradedMap compose(const GradedMap& f, const GradedMap& g);

// M = span(gens)/span(rels) inside a free module over R = P/Q.
struct Subquotient {
    Ambient amb;
    FreeModule F;
    std::vector<MVec> gens;
    std::vector<MVec> rels;

    static Subquotient quotient_by_ideal(const Ideal& I);       // R/I
    static Subquotient ideal_as_module(const Ideal& I);         // I inside R^1
    static Subquotient ideal_pair(const Ideal& I, const Ideal& a);  // I/a
    static Subquotient cokernel(const GradedMap& pres, const Ambient& amb);
};

// Q * e_c relations for a free module of the given rank
std::vector<MVec> ambient_quotient_rels(const Ambient& amb, int rank);

// minimal homogeneous generators of the span of vs modulo extra relations
std::vector<MVec> module_trim(const Ambient& amb, const FreeModule& F, std::vector<MVec> vs,
                              const std::vector<MVec>& extra_rels, const GBConfig& cfg = {});

bool subquotient_is_zero(const Subquotient& M, const GBConfig& cfg = {});

// kernel of a map as a new map ker -> src (generators as columns)
GradedMap syzygy_kernel(const GradedMap& f, const Ambient& amb, const GBConfig& cfg = {});

// generators of { u : sum u_j cols_j in span(extra) } for homogeneous data
// over the polynomial ring, truncated by a Hilbert-series stopping rule
std::vector<MVec> graded_syzygy_generators(const RingPtr& P, const FreeModule& F,
                                           const std::vector<MVec>& cols,
                                           const std::vector<MVec>& extra,
                                           const GBConfig& cfg = {});

// presentation R^m -> R^n of M over its own ambient R (graded: minimalized)
GradedMap presentation(const Subquotient& M, const GBConfig& cfg = {});
// presentation of M restricted to a module over the polynomial ambient P
GradedMap presentation_over_P(const Subquotient& M, const GBConfig& cfg = {});

struct Resolution {
    Ambient amb;                 // ring the resolution lives over
    FreeModule F0;
    std::vector<GradedMap> diffs;  // d1: F1->F0, d2: F2->F1, ...
    int length() const { return static_cast<int>(diffs.size()); }
    const FreeModule& module_at(int i) const {
        return i == 0 ? F0 : diffs[static_cast<std::size_t>(i - 1)].src();
    }
};

// minimal graded free resolution over the polynomial ambient P
Resolution minimal_free_resolution(const Subquotient& M, const GBConfig& cfg = {});

// resolution of coker(F0 <- relations) by iterated Schreyer frames, then
// minimized by unit pruning; the generators of F0 must be minimal
Resolution schreyer_resolution(const FreeModule& F0, const std::vector<MVec>& gens,
                               const std::vector<MVec>& relations, const GBConfig& cfg = {});
// minimal graded resolution over R = P/Q, surrendered after max_len steps
// (nullopt when the kernel is still nonzero there)
std::optional<Resolution> minimal_free_resolution_bounded(const Subquotient& M, int max_len,
                                                          const GBConfig& cfg = {});

// graded Betti numbers: (homological index, twists) -> rank
struct BettiTable {
    std::map<std::pair<int, std::vector<int>>, int> entries;
    int pd() const {
        int m = 0;
        for (const auto& [k, v] : entries) m = std::max(m, k.first);
        return m;
    }
    int regularity() const {  // max(first twist - homological index)
        int r = 0;
        bool any = false;
        for (const auto& [k, v] : entries) {
            (void)v;
            int val = k.second[0] - k.first;
            if (!any || val > r) r = val;
            any = true;
        }
        return any ? r : 0;
    }
};
BettiTable betti_table(const Resolution& res);

Polynomial matrix_determinant(const std::vector<std::vector<Polynomial>>& m);
Ideal minors_ideal(const Ambient& amb, const std::vector<std::vector<Polynomial>>& m, int t);
// Fitt_i(M) = ideal of (n - i)-minors of an n-generator presentation
Ideal fitting_ideal(const Subquotient& M, int i, const GBConfig& cfg = {});

// homology of a chain of maps d1: F1->F0, ..., dk: Fk->F(k-1); returns
// H_0..H_k with a decided is-zero flag per position
struct HomologyResult {
    std::vector<Subquotient> H;
    std::vector<bool> zero;
};
HomologyResult complex_homology(const std::vector<GradedMap>& maps, const Ambient& amb,
                                const GBConfig& cfg = {});

// Ext^i_P(M, P) for graded M over the polynomial ambient of M's ring
Subquotient ext_module(const Subquotient& M, int i, const GBConfig& cfg = {});

}  // namespace resint
