#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "gf2up/poly.hpp"

namespace gf2up {

// One row of the classification table of unitary perfect polynomials with
// at most four distinct prime factors: every unitary perfect A with
// omega(A) <= 4 is F(base^{2^n}) for exactly one entry, with F the
// identity or the conjugation x -> x+1.
struct ClassEntry {
  std::string label;  // "Thm3.1-i" ... "Thm4.1-xii"
  std::vector<std::pair<Poly, unsigned>> factored;  // base, factored form
  Poly base;                                        // multiplied out
  int omega;
  bool self_conjugate;
};

// The 16 base entries (one with omega 2, three with omega 3, twelve with
// omega 4). Bases are stored factored in source and multiplied out once at
// first use.
const std::vector<ClassEntry>& theorem_table();

// All F(base^{2^n}) with F in {identity, conjugate} of degree at most
// max_degree, deduplicated, canonically sorted. max_degree must be at
// least the base degree.
std::vector<Poly> orbit(const ClassEntry& entry, uint64_t max_degree);

struct Classification {
  std::string label;
  uint64_t n;       // the 2-power exponent that was peeled
  bool conjugated;  // whether the match required conjugating
};

// Peels the maximal 2-power (repeated square roots), then compares the
// core and its conjugate against the 16 bases. Absent when a is in no
// orbit. Nonconstant input required.
std::optional<Classification> classify(const Poly& a);

}  // namespace gf2up
