#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "gf2up/search.hpp"

namespace gf2up {

// Bounded executable renderings of the supporting results. Every check is
// monotone in its bounds and independent of the classification table.
struct LemmaBounds {
  uint64_t lemma24_h_max = 256;
  uint64_t lemma25_n_max = 6;
  uint64_t lemma25_p_deg_max = 8;
  uint64_t lemma26_h_max = 300;
  uint64_t lemma28_l_max = 12;
  uint64_t lemma28_r_max = 6;
  uint64_t cor35_r_max = 6;
  uint64_t swan_n_max = 8;
  uint64_t dickson_m_max = 256;
  uint64_t cyclo_k_max = 105;
  uint64_t cyclo_subst_s_max = 21;
  uint64_t search_degree = 14;  // brute-force degree feeding the 2.1 check
};

struct LemmaResult {
  std::string lemma_id;
  std::string range_description;
  bool passed = false;
  // Present exactly when passed is false; replayable through the core
  // modules.
  std::optional<std::string> counterexample;
  uint64_t checked_count = 0;
};

// i) complete polynomials are self-reverse; ii) two-prime splittings pair
// up under reversal; iii) the only self-reverse irreducibles of the form
// x^a(x+1)^b + 1 (a, b >= 1) are 1+x+x^2 and 1+x+...+x^4.
LemmaResult check_lemma_2_4(uint64_t h_max);

// Over even indices 2n <= 2*n_max and irreducibles P with
// deg(P) <= p_deg_max:
// i) 1+P+...+P^{2n} is never a proper prime power; ii) repeated prime
// factors of it have degree < deg(P); iii) among complete polynomials of
// even degree splitting into exactly two primes with one a conjugated
// complete polynomial, only (degree 8, 1+x+x^2, 1+x^3+x^6) occurs;
// iv) every prime factor has the form x^a(x+1)^b+1 exactly for degrees
// 2, 4, 6; v) the self-conjugate complete polynomials of degree
// h <= 2^n_max are exactly those with h+2 a power of two.
LemmaResult check_lemma_2_5(uint64_t n_max, uint64_t p_deg_max);

// Divisibility of 1+x+...+x^h by 1+x+x^2 forces h = 2 mod 3; by
// 1+x+...+x^4 forces h = 4 mod 5.
LemmaResult check_lemma_2_6(uint64_t h_max);

// i) 1+x^5+...+(x^5)^l irreducible iff l = 4; ii) the degree-3*2^r
// complete polynomial irreducible iff r = 2; iii) degree 5*2^r iff r = 1.
LemmaResult check_lemma_2_8(uint64_t l_max, uint64_t r_max);

// x^{2^r} + x^{2^r - 1} + 1 irreducible iff r in {1, 2}.
LemmaResult check_corollary_3_5(uint64_t r_max);

// x^{8n} + x^k + 1 reducible for all 1 <= k < 8n, verified through
// factor() and cross-checked against swan_trinomial_reducible.
LemmaResult check_swan(uint64_t n_max);

// For every hit of a search report, the number of primary parts attaining
// the minimal exponent*degree value is even.
LemmaResult check_lemma_2_1(const SearchReport& report);

// complete_irreducible_criterion(m) agrees with a direct irreducibility
// test of the degree-m complete polynomial.
LemmaResult check_dickson_agreement(uint64_t m_max);

// For odd k, the product of cyclotomic(d) over the divisors d of k equals
// x^k + 1.
LemmaResult check_cyclotomic_product(uint64_t k_max);

// For odd primes s != 5: cyclotomic(s) evaluated at x^5 equals
// cyclotomic(s) * cyclotomic(5s).
LemmaResult check_cyclotomic_substitution(uint64_t s_max);

// Runs every check above (generating the brute-force report for the 2.1
// check internally) and aggregates the results in a fixed order.
std::vector<LemmaResult> run_all(const LemmaBounds& bounds = {});

// One key=value assignment per line, '#' comments; unknown keys are
// rejected. Missing keys keep their defaults.
LemmaBounds parse_lemma_bounds(const std::string& text);

// One JSON object per result: {"lemma_id","range","verdict",
// "counterexample","checked_count"}.
std::string lemma_result_to_json(const LemmaResult& r);

}  // namespace gf2up
