#include "resint/groebner.hpp"

#include "internal_geobucket.hpp"

#include <json.hpp>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <map>
#include <memory>
#include <mutex>
#include <optional>
#include <set>
#include <shared_mutex>
#include <sstream>
#include <tuple>

namespace resint {

std::string MVec::to_string(const RingPtr& ring) const {
    std::ostringstream out;
    for (std::size_t i = 0; i < ts_.size(); ++i) {
        if (i) out << " + ";
        out << ring->field().to_string(ts_[i].coef);
        for (std::size_t v = 0; v < ts_[i].mon.e.size(); ++v)
            if (ts_[i].mon.e[v]) out << "*" << ring->vars()[v] << "^" << ts_[i].mon.e[v];
        out << "<" << ts_[i].comp << ">";
    }
    if (ts_.empty()) out << "0";
    return out.str();
}

void ModuleBasis::index_by_component() {
    by_comp_.assign(static_cast<std::size_t>(rank_), {});
    for (std::size_t i = 0; i < elems_.size(); ++i)
        by_comp_[static_cast<std::size_t>(elems_[i].lead().comp)].push_back(static_cast<int>(i));
}

bool ModuleBasis::contains_unit_row(int comp) const {
    for (int i : by_comp_[static_cast<std::size_t>(comp)]) {
        const MTerm& lt = elems_[static_cast<std::size_t>(i)].lead();
        if (lt.mon.is_one()) return true;
    }
    return false;
}

namespace {

std::vector<MTerm> scaled_terms(const MVec& g, const Monomial& m, const Coeff& c,
                                const FieldCtx& K, bool skip_lead) {
    std::vector<MTerm> out;
    const auto& ts = g.terms();
    out.reserve(ts.size());
    for (std::size_t i = skip_lead ? 1 : 0; i < ts.size(); ++i)
        out.push_back({ts[i].mon * m, ts[i].comp, K.mul(ts[i].coef, c)});
    return out;
}

}  // namespace

MVec ModuleBasis::normal_form(MVec v) const { return normal_form_skipping(std::move(v), -1); }

// full normal form; `skip` excludes one basis element (interreduction)
MVec ModuleBasis::normal_form_skipping(MVec v, int skip) const {
    const FieldCtx& K = ring_->field();
    std::vector<MTerm> remainder;
    Geobucket acc(ring_, ord_);
    acc.add(std::vector<MTerm>(v.terms()));
    MTerm lt;
    while (acc.pop_lead(lt)) {
        const MVec* red = nullptr;
        for (int i : by_comp_[static_cast<std::size_t>(lt.comp)]) {
            if (i == skip) continue;
            const MVec& g = elems_[static_cast<std::size_t>(i)];
            if (g.lead().mon.divides(lt.mon)) { red = &g; break; }
        }
        if (!red) {
            remainder.push_back(lt);
            continue;
        }
        Monomial m = lt.mon / red->lead().mon;
        Coeff c = K.neg(K.div(lt.coef, red->lead().coef));
        acc.add(scaled_terms(*red, m, c, K, true));
    }
    return MVec::make(ring_, ord_, std::move(remainder));
}

namespace {

struct PairKey {
    int sugar;
    int lcm_deg;
    int i, j;
    bool operator<(const PairKey& o) const {
        return std::tie(sugar, lcm_deg, i, j) < std::tie(o.sugar, o.lcm_deg, o.i, o.j);
    }
};

struct Engine {
    const RingPtr& ring;
    const ModOrder& ord;
    int rank;
    const GBConfig& cfg;
    std::vector<MVec> basis;
    std::vector<int> sugar;
    std::vector<std::vector<int>> by_comp;
    std::set<PairKey> pending;
    std::map<std::pair<int, int>, Monomial> lcms;
    std::vector<MVec> transcript;
    long long processed = 0;
    // in main-elimination mode the tag block is a Schreyer transcript: pairs
    // between two tag-lead elements only complete a basis nobody reads, and
    // the elements themselves must stay raw to keep generating the kernel
    bool transcript_mode = false;

    Engine(const RingPtr& r, const ModOrder& o, int rk, const GBConfig& c)
        : ring(r), ord(o), rank(rk), cfg(c), by_comp(static_cast<std::size_t>(rk)) {
        transcript_mode = o.n_main >= 0;
    }

    bool tag_lead(const MVec& v) const {
        return ord.n_main >= 0 && v.lead().comp >= ord.n_main;
    }

    int term_sugar(const MVec& v) const {
        int s = 0;
        for (const auto& t : v.terms()) s = std::max(s, ring->degree(t.mon));
        return s;
    }

    bool pair_pending(int a, int b) const {
        if (a > b) std::swap(a, b);
        return lcms.count({a, b}) > 0;
    }

    void add_pairs(int t) {
        const MTerm& lt = basis[static_cast<std::size_t>(t)].lead();
        if (transcript_mode && lt.comp >= ord.n_main) return;  // tag-tag pairs
        for (int i : by_comp[static_cast<std::size_t>(lt.comp)]) {
            if (i == t) continue;
            const MTerm& li = basis[static_cast<std::size_t>(i)].lead();
            Monomial L = Monomial::lcm(li.mon, lt.mon);
            // product criterion: sound for the ideal case only
            if (rank == 1 && ord.n_main < 0 && li.mon.coprime(lt.mon)) continue;
            int sug = std::max(sugar[static_cast<std::size_t>(i)] + ring->degree(L / li.mon),
                               sugar[static_cast<std::size_t>(t)] + ring->degree(L / lt.mon));
            pending.insert({sug, ring->degree(L), i, t});
            lcms.emplace(std::make_pair(i, t), L);
        }
    }

    // chain criterion: skip (i,j) when some k divides the lcm and both
    // side pairs were already treated
    bool chain_skippable(int i, int j, const Monomial& L) const {
        int comp = basis[static_cast<std::size_t>(i)].lead().comp;
        for (int k : by_comp[static_cast<std::size_t>(comp)]) {
            if (k == i || k == j) continue;
            if (!basis[static_cast<std::size_t>(k)].lead().mon.divides(L)) continue;
            if (!pair_pending(std::min(i, k), std::max(i, k)) &&
                !pair_pending(std::min(j, k), std::max(j, k)))
                return true;
        }
        return false;
    }

    // top reduction only; tails are cleaned once at the end
    std::pair<MVec, int> reduce_top(MVec v, int sug) {
        const FieldCtx& K = ring->field();
        Geobucket acc(ring, ord);
        acc.add(std::vector<MTerm>(v.terms()));
        MTerm lt;
        while (acc.pop_lead(lt)) {
            if (ring->degree(lt.mon) > cfg.max_degree)
                throw resource_limit_error("degree limit " + std::to_string(cfg.max_degree) +
                                           " exceeded during reduction");
            const MVec* red = nullptr;
            int red_idx = -1;
            for (int i : by_comp[static_cast<std::size_t>(lt.comp)]) {
                const MVec& g = basis[static_cast<std::size_t>(i)];
                if (g.lead().mon.divides(lt.mon)) { red = &g; red_idx = i; break; }
            }
            if (!red) {
                std::vector<MTerm> rest = acc.drain();
                rest.insert(rest.begin(), lt);
                return {MVec::make(ring, ord, std::move(rest)), sug};
            }
            Monomial m = lt.mon / red->lead().mon;
            Coeff c = K.neg(K.div(lt.coef, red->lead().coef));
            sug = std::max(sug, sugar[static_cast<std::size_t>(red_idx)] + ring->degree(m));
            acc.add(scaled_terms(*red, m, c, K, true));
        }
        return {MVec(), sug};
    }

    void append(MVec v, int sug) {
        v = v.monic(ring);
        // transcript mode: a vector whose lead fell into the tag block is a
        // finished kernel element; it never reduces anything again
        if (transcript_mode && v.lead().comp >= ord.n_main) {
            transcript.push_back(std::move(v));
            return;
        }
        basis.push_back(std::move(v));
        sugar.push_back(sug);
        int t = static_cast<int>(basis.size()) - 1;
        by_comp[static_cast<std::size_t>(basis.back().lead().comp)].push_back(t);
        add_pairs(t);
    }

    // level_done(D, kernel-elements-so-far): all pairs of sugar <= D finished;
    // returning true stops the run (degree truncation for graded inputs)
    std::function<bool(int, const std::vector<MVec>&)> level_done;

    bool fire_level_done(int level) {
        if (!level_done) return false;
        return level_done(level, transcript);
    }

    void run(std::vector<MVec> gens) {
        // deterministic input order: ascending leads
        std::sort(gens.begin(), gens.end(), [&](const MVec& a, const MVec& b) {
            if (a.is_zero() || b.is_zero()) return b.is_zero() < a.is_zero();
            return ord.cmp(a.lead(), b.lead(), *ring) < 0;
        });
        for (auto& g : gens) {
            if (g.is_zero()) continue;
            if (ring->degree(g.lead().mon) > cfg.max_degree)
                throw resource_limit_error("input degree exceeds limit " +
                                           std::to_string(cfg.max_degree));
            int in_sugar = term_sugar(g);
            auto [nf, sug] = reduce_top(std::move(g), in_sugar);
            if (!nf.is_zero()) append(std::move(nf), sug);
        }
        const bool debug = std::getenv("RESINT_DEBUG") != nullptr;
        int current_level = pending.empty() ? -1 : pending.begin()->sugar;
        while (!pending.empty()) {
            if (pending.begin()->sugar > current_level) {
                if (fire_level_done(current_level)) return;
                current_level = pending.begin()->sugar;
            }
            if (++processed > cfg.max_pairs)
                throw resource_limit_error("S-pair limit " + std::to_string(cfg.max_pairs) +
                                           " exceeded");
            if (debug && processed % 100 == 0) {
                long long terms = 0;
                std::size_t biggest = 0;
                for (const auto& b : basis) {
                    terms += static_cast<long long>(b.terms().size());
                    biggest = std::max(biggest, b.terms().size());
                }
                std::fprintf(stderr,
                             "[gb] pairs=%lld basis=%zu pending=%zu terms=%lld max=%zu\n",
                             processed, basis.size(), pending.size(), terms, biggest);
            }
            PairKey pk = *pending.begin();
            pending.erase(pending.begin());
            Monomial L = lcms.at({pk.i, pk.j});
            lcms.erase({pk.i, pk.j});
            if (ring->degree(L) > cfg.max_degree)
                throw resource_limit_error("degree limit " + std::to_string(cfg.max_degree) +
                                           " exceeded (S-pair lcm)");
            if (chain_skippable(pk.i, pk.j, L)) continue;
            const MVec& gi = basis[static_cast<std::size_t>(pk.i)];
            const MVec& gj = basis[static_cast<std::size_t>(pk.j)];
            const FieldCtx& K = ring->field();
            MVec s = gi.mul_term(L / gi.lead().mon, K.inv(gi.lead().coef), ring)
                         .sub(gj.mul_term(L / gj.lead().mon, K.inv(gj.lead().coef), ring),
                              ring, ord);
            auto tpair = std::chrono::steady_clock::now();
            auto [nf, sug] = reduce_top(std::move(s), pk.sugar);
            if (debug) {
                double dt = std::chrono::duration<double>(std::chrono::steady_clock::now() -
                                                          tpair)
                                .count();
                if (dt > 0.5)
                    std::fprintf(stderr, "[gb] slow pair (%d,%d) sugar=%d lcmdeg=%d: %.2fs -> %zu terms\n",
                                 pk.i, pk.j, pk.sugar, pk.lcm_deg, dt,
                                 nf.terms().size());
            }
            if (!nf.is_zero()) append(std::move(nf), sug);
        }
        fire_level_done(current_level);
    }

    std::vector<MVec> reduced() {
        // minimal: drop elements whose lead is divisible by another lead
        std::vector<int> keep;
        for (std::size_t i = 0; i < basis.size(); ++i) {
            bool redundant = false;
            for (std::size_t j = 0; j < basis.size() && !redundant; ++j) {
                if (i == j) continue;
                const MTerm& li = basis[i].lead();
                const MTerm& lj = basis[j].lead();
                if (li.comp != lj.comp || !lj.mon.divides(li.mon)) continue;
                if (li.mon == lj.mon) redundant = j < i;  // keep the first of equals
                else redundant = true;
            }
            if (!redundant) keep.push_back(static_cast<int>(i));
        }
        std::vector<MVec> out;
        out.reserve(keep.size());
        for (int i : keep) out.push_back(basis[static_cast<std::size_t>(i)]);
        // full tail reduction against the minimal set (leads are pairwise
        // non-divisible, so one pass with self-exclusion suffices)
        ModuleBasis tmp(ring, ord, rank, out);
        std::vector<MVec> final_set;
        final_set.reserve(out.size());
        for (std::size_t i = 0; i < out.size(); ++i)
            final_set.push_back(
                tmp.normal_form_skipping(out[i], static_cast<int>(i)).monic(ring));
        std::sort(final_set.begin(), final_set.end(), [&](const MVec& a, const MVec& b) {
            return ord.cmp(a.lead(), b.lead(), *ring) < 0;
        });
        return final_set;
    }

    std::vector<MVec> sorted_transcript() {
        std::sort(transcript.begin(), transcript.end(), [&](const MVec& a, const MVec& b) {
            return ord.cmp(a.lead(), b.lead(), *ring) < 0;
        });
        return transcript;
    }
};

// process-wide basis cache; concurrent readers, single writer
class BasisCache {
public:
    static BasisCache& instance() {
        static BasisCache c;
        return c;
    }
    std::shared_ptr<const ModuleBasis> find(const std::string& key) {
        std::shared_lock lk(mu_);
        auto it = map_.find(key);
        return it == map_.end() ? nullptr : it->second;
    }
    void store(const std::string& key, std::shared_ptr<const ModuleBasis> b) {
        std::unique_lock lk(mu_);
        map_.emplace(key, std::move(b));
    }
    void clear() {
        std::unique_lock lk(mu_);
        map_.clear();
    }
    void set_dir(const std::string& d) {
        std::unique_lock lk(mu_);
        dir_ = d;
    }
    std::string dir() {
        std::shared_lock lk(mu_);
        return dir_;
    }
    CacheStats stats() {
        std::shared_lock lk(mu_);
        return stats_;
    }
    void reset_stats() {
        std::unique_lock lk(mu_);
        stats_ = CacheStats{};
    }
    void bump_memory() {
        std::unique_lock lk(mu_);
        ++stats_.memory_hits;
    }
    void bump_disk() {
        std::unique_lock lk(mu_);
        ++stats_.disk_hits;
    }
    void bump_miss() {
        std::unique_lock lk(mu_);
        ++stats_.misses;
    }

private:
    std::shared_mutex mu_;
    std::map<std::string, std::shared_ptr<const ModuleBasis>> map_;
    std::string dir_;
    CacheStats stats_;
};

std::string cache_key(const RingPtr& ring, const ModOrder& ord, int rank,
                      const std::vector<MVec>& gens) {
    std::ostringstream out;
    out << ring->signature() << "|" << ord.signature() << "|rk" << rank << "|";
    std::vector<std::string> ss;
    ss.reserve(gens.size());
    for (const auto& g : gens) ss.push_back(g.to_string(ring));
    std::sort(ss.begin(), ss.end());
    for (const auto& s : ss) out << s << ";";
    return out.str();
}

std::string fnv1a_hex(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    std::ostringstream out;
    out << std::hex << h;
    return out.str();
}

}  // namespace

bool ModuleBasis::verify() const {
    const FieldCtx& K = ring_->field();
    for (std::size_t i = 0; i < elems_.size(); ++i)
        for (std::size_t j = i + 1; j < elems_.size(); ++j) {
            const MTerm& li = elems_[i].lead();
            const MTerm& lj = elems_[j].lead();
            if (li.comp != lj.comp) continue;
            Monomial L = Monomial::lcm(li.mon, lj.mon);
            MVec s = elems_[i].mul_term(L / li.mon, K.inv(li.coef), ring_)
                         .sub(elems_[j].mul_term(L / lj.mon, K.inv(lj.coef), ring_),
                              ring_, ord_);
            if (!normal_form(std::move(s)).is_zero()) return false;
        }
    return true;
}

namespace {

// disk format: {"key": ..., "elements": [[[exps...],comp,"coef"],...]}
std::string disk_path(const std::string& dir, const std::string& key) {
    return dir + "/" + fnv1a_hex(key) + ".json";
}

nlohmann::json mvecs_to_json(const std::vector<MVec>& vs, const FieldCtx& K) {
    nlohmann::json es = nlohmann::json::array();
    for (const auto& v : vs) {
        nlohmann::json ts = nlohmann::json::array();
        for (const auto& t : v.terms())
            ts.push_back({t.mon.e, t.comp, K.to_string(t.coef)});
        es.push_back(ts);
    }
    return es;
}

std::optional<std::vector<MVec>> mvecs_from_json(const nlohmann::json& es, const RingPtr& ring,
                                                 const ModOrder& ord) {
    std::vector<MVec> elems;
    const FieldCtx& K = ring->field();
    for (const auto& ev : es) {
        std::vector<MTerm> ts;
        for (const auto& tv : ev) {
            Monomial m(tv.at(0).get<std::vector<int>>());
            if (m.nvars() != ring->nvars()) return std::nullopt;
            int comp = tv.at(1).get<int>();
            std::string cs = tv.at(2).get<std::string>();
            Coeff c = K.is_rational() ? Coeff::rational(mpq_class(cs))
                                      : K.from_int(std::stoll(cs));
            ts.push_back({std::move(m), comp, std::move(c)});
        }
        elems.push_back(MVec::make(ring, ord, std::move(ts)));
    }
    return elems;
}

void disk_store(const std::string& dir, const std::string& key, const RingPtr& ring,
                const ModuleBasis& mb) {
    nlohmann::json j;
    j["key"] = key;
    j["elements"] = mvecs_to_json(mb.elems(), ring->field());
    j["transcript"] = mvecs_to_json(mb.transcript(), ring->field());
    std::string tmp = disk_path(dir, key) + ".tmp" + std::to_string(::getpid());
    {
        std::ofstream out(tmp);
        if (!out) return;  // cache is best-effort
        out << j.dump();
    }
    ::rename(tmp.c_str(), disk_path(dir, key).c_str());
}

std::optional<ModuleBasis> disk_load(const std::string& dir, const std::string& key,
                                     const RingPtr& ring, const ModOrder& ord, int rank) {
    std::ifstream in(disk_path(dir, key));
    if (!in) return std::nullopt;
    nlohmann::json j;
    try {
        in >> j;
        if (j.at("key").get<std::string>() != key) return std::nullopt;
        auto elems = mvecs_from_json(j.at("elements"), ring, ord);
        auto transcript = mvecs_from_json(j.at("transcript"), ring, ord);
        if (!elems || !transcript) return std::nullopt;
        return ModuleBasis(ring, ord, rank, std::move(*elems), std::move(*transcript));
    } catch (...) {
        return std::nullopt;
    }
}

}  // namespace

ModuleBasis module_groebner(const RingPtr& ring, const ModOrder& ord, int rank,
                            std::vector<MVec> gens, const GBConfig& cfg) {
    std::string key = cache_key(ring, ord, rank, gens);
    auto& cache = BasisCache::instance();
    if (auto hit = cache.find(key)) {
        cache.bump_memory();
        return *hit;
    }
    std::string dir = cache.dir();
    if (!dir.empty()) {
        if (auto mb = disk_load(dir, key, ring, ord, rank)) {
            cache.bump_disk();
            cache.store(key, std::make_shared<const ModuleBasis>(*mb));
            return *mb;
        }
    }
    cache.bump_miss();
    Engine e(ring, ord, rank, cfg);
    e.run(std::move(gens));
    ModuleBasis mb(ring, ord, rank, e.reduced(), e.sorted_transcript());
    cache.store(key, std::make_shared<const ModuleBasis>(mb));
    if (!dir.empty()) disk_store(dir, key, ring, mb);
    return mb;
}

void set_disk_cache_directory(const std::string& dir) {
    BasisCache::instance().set_dir(dir);
}

CacheStats cache_stats() { return BasisCache::instance().stats(); }

void reset_cache_stats() { BasisCache::instance().reset_stats(); }

bool disk_cache_active() { return !BasisCache::instance().dir().empty(); }

void clear_basis_cache() { BasisCache::instance().clear(); }

namespace {

// tagged generators (col_j, e_{rank_b + j}) plus quotient relations in the
// main block; the main block dominates, so main-free elements read off the
// kernel and normal forms read off lifts
ModuleBasis tagged_basis(const RingPtr& ring, int rank_b, const std::vector<MVec>& cols,
                         const std::vector<MVec>& quotient_rels, const GBConfig& cfg);

}  // namespace

namespace {

std::vector<MVec> shift_to_source(const std::vector<MVec>& raw, const RingPtr& ring,
                                  int rank_b) {
    ModOrder plain;
    std::vector<MVec> out;
    for (const auto& g : raw) {
        if (g.is_zero() || g.min_comp() < rank_b) continue;
        std::vector<MTerm> ts;
        for (const auto& t : g.terms()) ts.push_back({t.mon, t.comp - rank_b, t.coef});
        out.push_back(MVec::make(ring, plain, std::move(ts)));
    }
    return out;
}

std::vector<MVec> tagged_gens(const RingPtr& ring, int rank_b, const std::vector<MVec>& cols,
                              const std::vector<MVec>& quotient_rels, const ModOrder& ord) {
    std::vector<MVec> gens;
    gens.reserve(cols.size() + quotient_rels.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
        std::vector<MTerm> ts;
        for (const auto& t : cols[j].terms()) ts.push_back(t);
        ts.push_back({Monomial(ring->nvars()), rank_b + static_cast<int>(j), ring->field().one()});
        gens.push_back(MVec::make(ring, ord, std::move(ts)));
    }
    for (const auto& q : quotient_rels) {
        std::vector<MTerm> ts;
        for (const auto& t : q.terms()) ts.push_back(t);
        gens.push_back(MVec::make(ring, ord, std::move(ts)));
    }
    return gens;
}

ModuleBasis tagged_basis(const RingPtr& ring, int rank_b, const std::vector<MVec>& cols,
                         const std::vector<MVec>& quotient_rels, const GBConfig& cfg) {
    ModOrder ord;
    ord.n_main = rank_b;
    int total = rank_b + static_cast<int>(cols.size());
    return module_groebner(ring, ord, total,
                           tagged_gens(ring, rank_b, cols, quotient_rels, ord), cfg);
}

}  // namespace

std::vector<MVec> module_syzygies(const RingPtr& ring, int rank_b,
                                  const std::vector<MVec>& cols,
                                  const std::vector<MVec>& quotient_rels,
                                  const GBConfig& cfg) {
    ModuleBasis mb = tagged_basis(ring, rank_b, cols, quotient_rels, cfg);
    return shift_to_source(mb.transcript(), ring, rank_b);
}

std::vector<MVec> module_syzygies_with_stop(
    const RingPtr& ring, int rank_b, const std::vector<MVec>& cols,
    const std::vector<MVec>& quotient_rels, const GBConfig& cfg,
    const std::function<bool(int, const std::vector<MVec>&)>& level_done) {
    ModOrder ord;
    ord.n_main = rank_b;
    int total = rank_b + static_cast<int>(cols.size());
    Engine e(ring, ord, total, cfg);
    if (level_done)
        e.level_done = [&](int level, const std::vector<MVec>& raw) {
            return level_done(level, shift_to_source(raw, ring, rank_b));
        };
    e.run(tagged_gens(ring, rank_b, cols, quotient_rels, ord));
    return shift_to_source(e.transcript, ring, rank_b);
}

std::optional<std::vector<Polynomial>> module_lift(const RingPtr& ring, int rank_b,
                                                   const std::vector<MVec>& cols,
                                                   const std::vector<MVec>& quotient_rels,
                                                   const MVec& v, const GBConfig& cfg) {
    ModuleBasis mb = tagged_basis(ring, rank_b, cols, quotient_rels, cfg);
    std::vector<MTerm> ts;
    for (const auto& t : v.terms()) ts.push_back(t);
    MVec nf = mb.normal_form(MVec::make(ring, mb.order(), std::move(ts)));
    for (const auto& t : nf.terms())
        if (t.comp < rank_b) return std::nullopt;
    std::vector<Polynomial> u;
    u.reserve(cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j)
        u.push_back(-nf.component(rank_b + static_cast<int>(j), ring));
    return u;
}

ModuleBasis submodule_basis(const RingPtr& ring, int rank_b, const std::vector<MVec>& cols,
                            const std::vector<MVec>& quotient_rels, const GBConfig& cfg) {
    std::vector<MVec> gens = cols;
    gens.insert(gens.end(), quotient_rels.begin(), quotient_rels.end());
    ModOrder ord;
    return module_groebner(ring, ord, rank_b, std::move(gens), cfg);
}

}  // namespace resint
