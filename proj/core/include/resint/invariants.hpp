#pragma once

#include <limits>

#include "resint/hilbert.hpp"

namespace resint {

inline constexpr int kHeightInfinity = std::numeric_limits<int>::max();

int dim_of_ring(const Ambient& amb, const GBConfig& cfg = {});
int dim_of_quotient(const Ideal& J, const GBConfig& cfg = {});  // dim R/J

// ht(J) = dim R - dim(R/J). Needs an equidimensional ambient; quotient
// ambients are verified through the Ext profile of P/Q unless asserted.
int height(const Ideal& J, const GBConfig& cfg = {});

struct DepthInfo {
    bool zero_module = false;
    int pd = 0;       // over the polynomial ambient P
    int depth = 0;    // dim P - pd (Auslander-Buchsbaum)
    int reg = 0;      // max over Betti of (twist - homological index)
};
DepthInfo depth_pd_reg(const Subquotient& M, const GBConfig& cfg = {});
DepthInfo depth_pd_reg(const Ideal& J, const GBConfig& cfg = {});  // of R/J as P-module

// dim Ext^i_P(M, P) for i = 0..dim P (-1 marks a vanishing Ext)
std::vector<int> ext_dimension_profile(const Subquotient& M, const GBConfig& cfg = {});

// min { i : Ext^i_P(P/J, P) != 0 }; polynomial ambient only
int grade_of(const Ideal& J, const GBConfig& cfg = {});

bool serre_condition(const Subquotient& M, int k, const GBConfig& cfg = {});
bool serre_condition_ring(const Ambient& amb, int k, const GBConfig& cfg = {});
bool cohen_macaulay(const Subquotient& M, const GBConfig& cfg = {});

bool unmixed_check(const Subquotient& M, const GBConfig& cfg = {});
bool unmixed_check(const Ideal& J, const GBConfig& cfg = {});  // of R/J

struct InvariantReport {
    int dim = -1;
    long long mult = 0;
    int depth = 0;
    int pd = 0;
    int reg = 0;
    int height_J = 0;
    std::string method_dim = "hilbert-series pole order";
    std::string method_mult = "hilbert-polynomial leading coefficient";
    std::string method_depth = "Auslander-Buchsbaum over P";
    std::string method_height = "dim R - dim R/J";
};
InvariantReport invariant_report(const Ideal& J, const GBConfig& cfg = {});

}  // namespace resint
