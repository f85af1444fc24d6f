#pragma once

#include "resint/residual.hpp"

namespace resint {

// Kitt filtration: Kitt_i = < Gamma . <Z_0..Z_i> >_r, an ascending chain with
// Kitt_0 = I_r(Phi) and Kitt_r = Kitt(a, I).
struct KittChain {
    std::vector<Ideal> levels;                         // Kitt_0 .. Kitt_r
    std::vector<std::vector<std::string>> provenance;  // generator origins per level
    const Ideal& full() const { return levels.back(); }
    const Ideal& level(int i) const { return levels[static_cast<std::size_t>(i)]; }
};

KittChain kitt_chain(const ResidualInput& in, const GBConfig& cfg = {});

// tau = a + I_r(Phi) via Laplace minors
Ideal tau_ideal(const ResidualInput& in, const GBConfig& cfg = {});
// independent route: top gamma-wedge coefficients instead of minors
Ideal tau_ideal_wedge_route(const ResidualInput& in, const GBConfig& cfg = {});

// minimal generator count of a homogeneous ideal
int minimal_generator_count(const Ideal& I, const GBConfig& cfg = {});

}  // namespace resint
