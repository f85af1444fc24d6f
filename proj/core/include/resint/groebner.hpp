#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "resint/modvec.hpp"

namespace resint {

struct GBConfig {
    int max_degree = 120;          // hard cap on any leading-term degree handled
    long long max_pairs = 2000000; // hard cap on S-pairs processed
};

// Reduced Groebner basis of a submodule of a free module R^rank.
class ModuleBasis {
public:
    ModuleBasis() = default;
    ModuleBasis(RingPtr ring, ModOrder ord, int rank, std::vector<MVec> elems,
                std::vector<MVec> transcript = {})
        : ring_(std::move(ring)), ord_(ord), rank_(rank), elems_(std::move(elems)),
          transcript_(std::move(transcript)) {
        index_by_component();
    }

    const RingPtr& ring() const { return ring_; }
    const ModOrder& order() const { return ord_; }
    int rank() const { return rank_; }
    const std::vector<MVec>& elems() const { return elems_; }
    // kernel elements collected during a main-elimination run (raw, they are
    // generators and not part of the reducing basis)
    const std::vector<MVec>& transcript() const { return transcript_; }
    bool contains_unit_row(int comp) const;  // e.g. detecting the unit ideal

    MVec normal_form(MVec v) const;
    MVec normal_form_skipping(MVec v, int skip) const;

    // every S-pair of basis elements reduces to zero (self-certification)
    bool verify() const;

private:
    void index_by_component();
    friend ModuleBasis module_groebner(const RingPtr&, const ModOrder&, int,
                                       std::vector<MVec>, const GBConfig&);
    RingPtr ring_;
    ModOrder ord_;
    int rank_ = 0;
    std::vector<MVec> elems_;
    std::vector<MVec> transcript_;
    std::vector<std::vector<int>> by_comp_;
};

// Buchberger with the product criterion (rank-1 block only; it is not sound
// for modules), the chain criterion, and sugar selection. Deterministic.
ModuleBasis module_groebner(const RingPtr& ring, const ModOrder& ord, int rank,
                            std::vector<MVec> gens, const GBConfig& cfg = {});

// Kernel of the map R^a -> R^b/(quotient rels) whose columns are `cols`.
// Returned vectors live in R^a. Computed through a tagged basis: generators
// (col_j, e_j) in R^(b+a) under a main-block elimination order.
std::vector<MVec> module_syzygies(const RingPtr& ring, int rank_b,
                                  const std::vector<MVec>& cols,
                                  const std::vector<MVec>& quotient_rels,
                                  const GBConfig& cfg = {});

// same computation, but after each completed sugar level the callback sees
// the kernel elements found so far (already shifted into R^a); returning
// true stops the run. Results of stopped runs are not cached.
std::vector<MVec> module_syzygies_with_stop(
    const RingPtr& ring, int rank_b, const std::vector<MVec>& cols,
    const std::vector<MVec>& quotient_rels, const GBConfig& cfg,
    const std::function<bool(int, const std::vector<MVec>&)>& level_done);

// Express v as a combination of cols modulo quotient_rels; nullopt if v is
// not in the span. Deterministic (fixed reduction strategy).
std::optional<std::vector<Polynomial>> module_lift(const RingPtr& ring, int rank_b,
                                                   const std::vector<MVec>& cols,
                                                   const std::vector<MVec>& quotient_rels,
                                                   const MVec& v, const GBConfig& cfg = {});

// Basis of the submodule generated by cols + quotient_rels (plain order).
ModuleBasis submodule_basis(const RingPtr& ring, int rank_b, const std::vector<MVec>& cols,
                            const std::vector<MVec>& quotient_rels, const GBConfig& cfg = {});

// On-disk basis cache keyed by a content hash of (ring, order, generators);
// atomic writes, safe under concurrent processes. Empty path disables.
void set_disk_cache_directory(const std::string& dir);

struct CacheStats {
    long long memory_hits = 0;
    long long disk_hits = 0;
    long long misses = 0;
};
CacheStats cache_stats();
void reset_cache_stats();
bool disk_cache_active();
// drops every memoized basis (tests use this to emulate a fresh process)
void clear_basis_cache();

}  // namespace resint
