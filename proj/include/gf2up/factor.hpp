#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "gf2up/poly.hpp"

namespace gf2up {

// Seed for the equal-degree splitting randomness. Any fixed value works;
// the canonical ordering of Factorization makes the output independent of
// the split order in any case.
inline constexpr uint64_t kDefaultFactorSeed = 1;

// Complete factorization into irreducibles: pairwise distinct primes,
// sorted canonically (degree, then coefficient bits), product of
// prime^multiplicity equal to the input.
struct Factorization {
  std::vector<std::pair<Poly, unsigned>> factors;

  Poly product() const;
  uint64_t total_multiplicity() const;
  // Multiplicity of p, or 0 when p is not a factor.
  unsigned multiplicity_of(const Poly& p) const;
  // Display form, e.g. "x^3(x+1)^2(x^2+x+1)".
  std::string to_string() const;
};

// Square-free decomposition (characteristic-2 form: zero derivative means
// perfect square, recurse through the square root), then distinct-degree
// and equal-degree splitting. Nonconstant input required.
Factorization factor(const Poly& a, uint64_t seed = kDefaultFactorSeed);

// Rabin's criterion: x^{2^d} = x mod a and gcd(x^{2^{d/l}} + x, a) = 1 for
// every prime l dividing d = deg(a). Degree-1 polynomials are irreducible,
// constants are not, zero is an error.
bool is_irreducible(const Poly& a);

// Whether 1 + x + ... + x^m is irreducible, decided arithmetically:
// m + 1 prime and 2 of multiplicative order m modulo m + 1. Must agree
// with is_irreducible(complete_poly(m)) for every m.
bool complete_irreducible_criterion(uint64_t m);

// Least e >= 1 with base^e = 1 (mod modulus); arguments must be coprime,
// modulus >= 2.
uint64_t mult_order(uint64_t base, uint64_t modulus);

// Deterministic trial-division primality (supporting routine).
bool is_prime_u64(uint64_t n);

// The k-th cyclotomic polynomial reduced mod 2, k odd (even indices alias
// odd ones in characteristic 2 and are rejected). Computed by iterated
// exact division of x^k + 1.
Poly cyclotomic(uint64_t k);

// The reducibility claim for x^{8n} + x^k + 1 with 8n > k >= 1; always
// true, present so the lemma suite can cross-check it against factor().
bool swan_trinomial_reducible(uint64_t n, uint64_t k);

}  // namespace gf2up
