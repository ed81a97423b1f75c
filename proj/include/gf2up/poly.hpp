#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace gf2up {

// Operations refuse to build polynomials of degree beyond this.
inline constexpr uint64_t kMaxPolyDegree = uint64_t(1) << 32;

// A polynomial over GF(2), one coefficient per bit: bit i of the flattened
// word sequence is the coefficient of x^i (so word 0 bit 0 is the constant
// term). Canonical form: no trailing all-zero words, hence equal
// polynomials are bitwise identical. Every nonzero polynomial is monic.
// Values are immutable in practice; all operations return fresh objects.
class Poly {
 public:
  Poly() = default;  // the zero polynomial

  static Poly zero() { return Poly{}; }
  static Poly one();
  static Poly x();
  static Poly monomial(uint64_t degree);  // x^degree
  static Poly from_words(std::vector<uint64_t> words);

  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }

  // The zero polynomial has no degree ("minus infinity"); degree() returns
  // kNegInfDegree for it. Callers that must distinguish use is_zero().
  static constexpr int64_t kNegInfDegree = -1;
  int64_t degree() const;

  bool coeff(uint64_t i) const;
  uint64_t weight() const;  // number of nonzero coefficients
  std::span<const uint64_t> words() const { return words_; }

  Poly operator+(const Poly& rhs) const;  // coefficientwise XOR
  Poly& operator+=(const Poly& rhs);
  Poly operator*(const Poly& rhs) const;  // word-parallel carry-less product
  Poly operator/(const Poly& rhs) const;
  Poly operator%(const Poly& rhs) const;

  Poly shifted_up(uint64_t k) const;    // multiply by x^k
  Poly shifted_down(uint64_t k) const;  // drop coefficients below x^k
  Poly truncated(uint64_t k) const;     // keep coefficients below x^k

  bool operator==(const Poly&) const = default;
  bool operator<(const Poly& rhs) const;

 private:
  explicit Poly(std::vector<uint64_t> w) : words_(std::move(w)) { trim(); }
  void trim();

  std::vector<uint64_t> words_;
};

// Canonical order: by degree, ties broken by the coefficient bits read as
// an integer. Used everywhere a deterministic order is required.
bool canonical_less(const Poly& a, const Poly& b);

struct DivRem {
  Poly quotient;
  Poly remainder;
};

// a = quotient * b + remainder with deg(remainder) < deg(b). b must be
// nonzero.
DivRem divrem(const Poly& a, const Poly& b);

// Monic gcd; gcd(a, 0) = a. Both zero is an error.
Poly gcd(Poly a, Poly b);

// Per-bit shift-and-xor reference multiplication. Kept as the permanent
// oracle for the packed product (tests and the bench subcommand).
Poly mul_naive(const Poly& a, const Poly& b);

// Frobenius square: coefficient of x^{2i} in the result is coefficient of
// x^i in a.
Poly square(const Poly& a);

// Inverse of square when it exists: returns r with square(r) == a, absent
// when a has a nonzero odd-index coefficient.
std::optional<Poly> try_sqrt(const Poly& a);

// Repeated-squaring exponentiation; 0^0 = 1 by convention. Exponents that
// would push the result degree past kMaxPolyDegree raise resource_error.
Poly pow(const Poly& base, uint64_t exponent);

// Formal derivative (in characteristic 2 only odd-index terms survive).
Poly derivative(const Poly& a);

// The substitution x -> x+1; an involutive ring automorphism.
Poly conjugate(const Poly& a);

// Coefficient reversal x^m a(1/x). Requires a nonzero constant term so the
// degree is preserved and the map is an involution.
Poly reverse(const Poly& a);

// 1 + x + ... + x^h.
Poly complete_poly(uint64_t h);

// The substitution x -> x^k (k >= 1, coefficient dilation).
Poly substitute_x_pow(const Poly& a, uint64_t k);

// (a(0), a(1)): constant coefficient and parity of the coefficient count.
std::pair<bool, bool> eval_at_01(const Poly& a);

// Text grammar (whitespace ignored, duplicate terms XOR together):
//   poly := '0' | term ('+' term)*        term := '1' | 'x' | 'x' '^' uint
// plus whole-string literals '0b...' / '0x...' with the most significant
// bit holding the highest degree. format_poly emits the descending term
// sum ("x^3+x+1"); parse(format(a)) == a.
Poly parse_poly(std::string_view text);
std::string format_poly(const Poly& a);
std::string to_hex(const Poly& a);

}  // namespace gf2up
