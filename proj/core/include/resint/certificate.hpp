#pragma once

#include "resint/layout.hpp"

namespace resint {

struct CertCheck {
    std::string name;
    bool pass = false;
    bool advisory = false;  // reported, not required for issuing
    std::string evidence;
};

// Bundle of hypothesis and conclusion checks behind "J admits a free
// approach": tau is carried along with its provenance.
struct FreeApproachCertificate {
    bool issued = false;
    Ideal tau;
    Ideal J;
    std::vector<CertCheck> hypotheses;
    std::vector<CertCheck> checks;
    std::string failure_summary;  // names of failed checks, diagnostic mode
};

FreeApproachCertificate free_approach_certificate(const ResidualInput& in,
                                                  const GBConfig& cfg = {});

struct RegularityBound {
    int lhs = 0;  // Reg(R/tau)
    int rhs = 0;  // Reg(R) + dim(R_0) + sigma(a) - (s-r+1)*beg(I/a) - s
    bool holds = false;
    bool hypotheses_ok = true;
    std::string note;
};
// the regularity bound for R/tau over a Cohen-Macaulay graded ambient
RegularityBound regularity_bound_check(const ResidualInput& in, const Ideal& tau,
                                       const GBConfig& cfg = {});

}  // namespace resint
