#pragma once

#include <cstdint>

#include "resint/symalg.hpp"

namespace resint {

// The standing data of a residual computation: I = (f_1..f_r), a = (a_1..a_s)
// inside I, and the matrix Phi with [a] = [f] * Phi.
struct ResidualInput {
    Ambient amb;
    std::vector<Polynomial> f;
    std::vector<Polynomial> a;
    std::vector<std::vector<Polynomial>> Phi;  // r rows, s columns
    std::vector<int> d;                        // deg f_t
    std::vector<int> l;                        // deg a_t
    std::uint64_t seed = 0;
    bool seeded_general = false;

    int r() const { return static_cast<int>(f.size()); }
    int s() const { return static_cast<int>(a.size()); }
    Ideal I_ideal() const { return Ideal(amb, f); }
    Ideal a_ideal() const { return Ideal(amb, a); }
};

// all monomials of the given (weighted) degree, deterministic order
std::vector<Monomial> monomials_of_degree(const RingPtr& ring, int degree);

// seeded general elements a_j = sum_t c_tj f_t, c_tj dense random of the
// complementary degree; identical output for identical seeds
std::vector<Polynomial> general_elements(const Ambient& amb, const std::vector<Polynomial>& f,
                                         int count, int degree, std::uint64_t seed,
                                         std::vector<std::vector<Polynomial>>* coeffs = nullptr);

// explicit a: Phi recovered by deterministic division against a basis of I;
// throws hypothesis_error when some a_j is not in I or grade(I) = 0
ResidualInput make_residual_input(const Ambient& amb, std::vector<Polynomial> f,
                                  std::vector<Polynomial> a, const GBConfig& cfg = {});
ResidualInput make_residual_input_general(const Ambient& amb, std::vector<Polynomial> f,
                                          int count, int degree, std::uint64_t seed,
                                          const GBConfig& cfg = {});

struct ColonResult {
    Ideal J;
    int height_J = 0;   // kHeightInfinity when J = (1)
    bool proper = true; // false flags "not residual: colon is unit ideal"
};
ColonResult residual_colon(const ResidualInput& in, const GBConfig& cfg = {});

struct Classification {
    bool algebraic = false;
    bool geometric = false;
    bool arithmetic = false;
    int ht_J = 0;
    int ht_I_plus_J = 0;
    int ht_fitt_locus = 0;  // ht(Fitt_1(I/a) + I + J)
};
Classification classify_residual(const ResidualInput& in, const Ideal& J,
                                 const GBConfig& cfg = {});

struct RMinResult {
    bool r_min = false;
    bool saturation_unit = false;
    bool radical_match = false;  // rad(I) = rad(I_1(phi)), filled when zeta = ht(I)
    int ht_I = 0;
    int ht_entries = 0;  // ht(I_1(phi))
    std::string diagnostics;
    Ideal entries_ideal;
};
// is I r-minimally generated from height zeta (Fitting criterion)
RMinResult r_min_generated(const Ambient& amb, const std::vector<Polynomial>& f, int zeta,
                           const GBConfig& cfg = {});

// G_s (minus = false): ht(Fitt_k(I)) >= k+1 for 1 <= k <= s-1;
// G_s^- shifts the bound down by one
bool g_condition(const Ambient& amb, const std::vector<Polynomial>& f, int s, bool minus,
                 const GBConfig& cfg = {});

}  // namespace resint
