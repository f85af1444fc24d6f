#include "resint/kitt.hpp"

#include <sstream>

namespace resint {

namespace {

// gamma wedges: zeta_j = sum_i Phi[i][j] e_i
std::vector<WedgeElement> zeta_elements(const ResidualInput& in) {
    std::vector<WedgeElement> zs;
    for (int j = 0; j < in.s(); ++j) {
        WedgeElement z;
        z.r = in.r();
        z.k = 1;
        for (int i = 0; i < in.r(); ++i) {
            const Polynomial& c = in.Phi[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            if (!c.is_zero()) z.comps[{i}] = c;
        }
        zs.push_back(std::move(z));
    }
    return zs;
}

// multisets of cycle generators (index a >= 1, generator g) with total
// exterior degree `need`, parts bounded by `max_part`; odd-degree cycles
// never repeat (their square is zero)
struct CyclePick {
    int a;
    int g;
};

void enumerate_cycles(const KoszulData& kd, int max_part, int need, std::size_t start_a,
                      std::size_t start_g, std::vector<CyclePick>& cur,
                      const std::function<void(const std::vector<CyclePick>&)>& emit) {
    if (need == 0) {
        emit(cur);
        return;
    }
    for (std::size_t a = start_a; a <= static_cast<std::size_t>(std::min(max_part, need)); ++a) {
        const auto& gens = kd.Z[a];
        std::size_t g0 = (a == start_a) ? start_g : 0;
        for (std::size_t g = g0; g < gens.size(); ++g) {
            bool repeat = !cur.empty() && cur.back().a == static_cast<int>(a) &&
                          cur.back().g == static_cast<int>(g);
            if (repeat && a % 2 == 1) continue;  // odd wedge squares vanish
            cur.push_back({static_cast<int>(a), static_cast<int>(g)});
            enumerate_cycles(kd, max_part, need - static_cast<int>(a), a, g, cur, emit);
            cur.pop_back();
        }
    }
}

}  // namespace

KittChain kitt_chain(const ResidualInput& in, const GBConfig& cfg) {
    const Ambient& amb = in.amb;
    const RingPtr& P = amb.P;
    int r = in.r();
    int s = in.s();
    KoszulData kd = koszul_complex(amb, in.f, cfg);
    std::vector<WedgeElement> zetas = zeta_elements(in);
    KittChain chain;
    for (int level = 0; level <= r; ++level) {
        std::vector<Polynomial> gens;
        std::vector<std::string> prov;
        std::vector<std::string> seen;
        for (int q = std::max(0, r - level * r); q <= std::min(s, r); ++q) {
            int cyc_deg = r - q;
            if (cyc_deg > level * r) continue;  // cannot be filled with parts <= level
            for (const auto& E : subsets_of_size(s, q)) {
                std::vector<CyclePick> cur;
                auto emit = [&](const std::vector<CyclePick>& picks) {
                    std::vector<WedgeElement> ws;
                    for (int e : E) ws.push_back(zetas[static_cast<std::size_t>(e)]);
                    for (const auto& p : picks)
                        ws.push_back(kd.cycle_as_wedge(p.a, p.g));
                    if (ws.empty()) return;
                    Polynomial c = wedge_coefficient(ws, P);
                    c = amb.reduce(c, cfg);
                    if (c.is_zero()) return;
                    std::string key = c.to_string();
                    for (const auto& k : seen)
                        if (k == key) return;
                    seen.push_back(key);
                    std::ostringstream origin;
                    origin << "E={";
                    for (std::size_t i = 0; i < E.size(); ++i)
                        origin << (i ? "," : "") << E[i] + 1;
                    origin << "}";
                    for (const auto& p : picks) origin << " Z" << p.a << "[" << p.g << "]";
                    gens.push_back(c);
                    prov.push_back(origin.str());
                };
                if (cyc_deg == 0) {
                    if (q > 0) {
                        std::vector<CyclePick> none;
                        emit(none);
                    }
                } else if (level >= 1) {
                    enumerate_cycles(kd, level, cyc_deg, 1, 0, cur, emit);
                }
            }
        }
        // ascending chain: also carry every generator from the previous level
        if (!chain.levels.empty()) {
            const Ideal& prev = chain.levels.back();
            for (std::size_t g = 0; g < prev.gens().size(); ++g) {
                std::string key = prev.gens()[g].to_string();
                bool dup = false;
                for (const auto& k : seen)
                    if (k == key) { dup = true; break; }
                if (!dup) {
                    gens.push_back(prev.gens()[g]);
                    prov.push_back(chain.provenance.back()[g]);
                    seen.push_back(key);
                }
            }
        }
        chain.levels.emplace_back(amb, gens);
        chain.provenance.push_back(std::move(prov));
    }
    return chain;
}

Ideal tau_ideal(const ResidualInput& in, const GBConfig& cfg) {
    const Ambient& amb = in.amb;
    std::vector<Polynomial> gens = in.a;
    Ideal minors = minors_ideal(amb, in.Phi, in.r());
    for (const auto& m : minors.gens()) gens.push_back(m);
    (void)cfg;
    return Ideal(amb, std::move(gens));
}

Ideal tau_ideal_wedge_route(const ResidualInput& in, const GBConfig& cfg) {
    const Ambient& amb = in.amb;
    std::vector<Polynomial> gens = in.a;
    std::vector<WedgeElement> zetas = zeta_elements(in);
    for (const auto& E : subsets_of_size(in.s(), in.r())) {
        std::vector<WedgeElement> ws;
        for (int e : E) ws.push_back(zetas[static_cast<std::size_t>(e)]);
        Polynomial c = amb.reduce(wedge_coefficient(ws, amb.P), cfg);
        if (!c.is_zero()) gens.push_back(c);
    }
    return Ideal(amb, std::move(gens));
}

int minimal_generator_count(const Ideal& I, const GBConfig& cfg) {
    return static_cast<int>(trim_generators(I.ambient(), I.gens(), cfg).size());
}

}  // namespace resint
