#pragma once

#include <cstdint>

#include "gf2up/factor.hpp"
#include "gf2up/poly.hpp"

namespace gf2up {

struct DivisorProfile {
  uint64_t omega;     // number of distinct irreducible factors
  bool is_even_poly;  // has a root in GF(2), i.e. divisible by x or x+1
  Poly sigma;         // sum of all monic divisors
  Poly sigma_star;    // sum of all unitary divisors
};

// Sum of all unitary divisors: product of 1 + P^k over the primary parts
// P^k of a. Nonconstant input required.
Poly sigma_star(const Poly& a);

// Sum of all monic divisors: product of 1 + P + ... + P^k over primary
// parts, each factor accumulated by Horner. Nonconstant input required.
Poly sigma(const Poly& a);

bool is_unitary_perfect(const Poly& a);  // sigma_star(a) == a
bool is_perfect(const Poly& a);          // sigma(a) == a

// Number of distinct irreducible factors; omega(1) = 0, zero is an error.
uint64_t omega(const Poly& a);

// Whether d is a unitary divisor of a: d | a and gcd(d, a/d) = 1.
bool unitary_divisor_check(const Poly& d, const Poly& a);

DivisorProfile divisor_profile(const Poly& a);

// Same computations on an existing factorization (used when the caller
// already factored the input).
Poly sigma_star_of(const Factorization& f);
Poly sigma_of(const Factorization& f);

}  // namespace gf2up
