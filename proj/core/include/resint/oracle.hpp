#pragma once

#include "resint/polynomial.hpp"

namespace resint::oracle {

// Brute-force validators used to mint expected values for the engines. They
// deliberately do not reuse the Groebner machinery: monomials come from an
// odometer enumeration and membership from a plain row reduction.

// p in span{ m * g : deg(m g) = deg p } over the degree-D truncation; all
// data homogeneous, quotient generators just join the generator list
bool membership(const Polynomial& p, const std::vector<Polynomial>& gens, int degree_bound);

// codimension of the generated subspace in each graded piece, n = 0..D
std::vector<long long> hilbert(const RingPtr& ring, const std::vector<Polynomial>& gens, int D);

// cofactor expansion along the first column
Polynomial determinant(const std::vector<std::vector<Polynomial>>& m);

}  // namespace resint::oracle
