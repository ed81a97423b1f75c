#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gf2up/poly.hpp"

namespace gf2up {

struct SearchHit {
  Poly poly;
  uint64_t omega;
  std::optional<std::string> label;  // classification label, absent if none

  bool operator==(const SearchHit&) const = default;
};

struct SearchReport {
  uint64_t max_degree = 0;  // coverage bound (complete below this degree)
  std::vector<SearchHit> hits;  // canonically sorted, no duplicates
  uint64_t candidates_tested = 0;
  std::chrono::milliseconds elapsed{0};
};

struct SearchOptions {
  unsigned jobs = 1;
  // Ceiling on the brute-force degree (2^{d+1} candidate masks).
  uint64_t degree_limit = 28;
  // Largest odd part enumerated for the x / x+1 exponents in the
  // structured search.
  uint64_t odd_part_max = 25;
  uint64_t seed = 1;
};

// Tests sigma_star(A) = A over every monic nonconstant polynomial of
// degree <= max_degree (assume_even = false), or only over multiples of
// x(x+1) (assume_even = true; justified by the no-odd result and verified
// empirically by the unpruned mode). The report is identical for any
// worker count.
SearchReport brute_force_search(uint64_t max_degree, bool assume_even,
                                const SearchOptions& opts = {});

// Enumerates the candidate shapes x^h(x+1)^k, x^h(x+1)^k P^{2^l} and
// x^h(x+1)^k P^{2^l u} Q^{2^m} (u in {1, 3}; u = 3 only with
// Q = 1 + P + P^2), with h, k = 2^a c for odd c and all 2-power indices
// <= max_exp_log. P ranges over the irreducible pool of degree
// <= max_prime_degree; Q additionally over shape-derived candidates
// (odd-part complete polynomials, their conjugates and cofactors by P).
// Survivors of the exponent-balance equations are verified with the full
// factorization-based sigma_star.
SearchReport structured_search(uint64_t max_prime_degree, uint64_t max_exp_log,
                               const SearchOptions& opts = {});

// Hit sets agree on the common scope: degree at most the smaller
// max_degree, omega between 2 and 4.
bool cross_check(const SearchReport& a, const SearchReport& b);

// All irreducible polynomials of degree 2..max_degree (all of which are
// nonzero at 0 and 1), canonically sorted.
std::vector<Poly> candidate_prime_pool(uint64_t max_degree);

// {"max_degree", "hits": [{"poly","hex","degree","omega","label"}],
//  "candidates_tested", "elapsed_ms"}; with include_timing = false the
// elapsed_ms field is emitted as 0 so reports compare byte-for-byte.
std::string report_to_json(const SearchReport& r, bool include_timing = true);

}  // namespace gf2up
