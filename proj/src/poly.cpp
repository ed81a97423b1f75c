#include "gf2up/poly.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cctype>
#include <stdexcept>

#include "gf2up/errors.hpp"
#include "mul_kernels.hpp"

namespace gf2up {
namespace {

constexpr uint64_t kOddMask = 0xaaaaaaaaaaaaaaaaULL;

// Pack the even-index bits of a byte into 4 bits.
constexpr std::array<uint8_t, 256> kCompressEven = [] {
  std::array<uint8_t, 256> t{};
  for (unsigned v = 0; v < 256; ++v) {
    uint8_t c = 0;
    for (unsigned i = 0; i < 4; ++i)
      if (v & (1u << (2 * i))) c |= uint8_t(1u << i);
    t[v] = c;
  }
  return t;
}();

constexpr std::array<uint8_t, 256> kRevByte = [] {
  std::array<uint8_t, 256> t{};
  for (unsigned v = 0; v < 256; ++v) {
    uint8_t r = 0;
    for (unsigned i = 0; i < 8; ++i)
      if (v & (1u << i)) r |= uint8_t(1u << (7 - i));
    t[v] = r;
  }
  return t;
}();

inline uint32_t compress_even(uint64_t w) {
  uint32_t r = 0;
  for (int j = 0; j < 8; ++j)
    r |= uint32_t(kCompressEven[(w >> (8 * j)) & 0xff]) << (4 * j);
  return r;
}

inline uint64_t bitrev64(uint64_t w) {
  uint64_t r = 0;
  for (int j = 0; j < 8; ++j)
    r |= uint64_t(kRevByte[(w >> (8 * j)) & 0xff]) << (8 * (7 - j));
  return r;
}

// dst ^= src << k. Contributions past the end of dst must be zero by the
// caller's degree bookkeeping; they are skipped.
void xor_shl(std::vector<uint64_t>& dst, std::span<const uint64_t> src,
             uint64_t k) {
  const std::size_t wo = k >> 6;
  const unsigned bo = unsigned(k & 63);
  if (bo == 0) {
    for (std::size_t i = 0; i < src.size() && wo + i < dst.size(); ++i)
      dst[wo + i] ^= src[i];
    return;
  }
  for (std::size_t i = 0; i < src.size(); ++i) {
    if (wo + i < dst.size()) dst[wo + i] ^= src[i] << bo;
    if (wo + i + 1 < dst.size()) dst[wo + i + 1] ^= src[i] >> (64 - bo);
  }
}

// Highest set bit index <= from, or -1.
int64_t top_bit_below(const std::vector<uint64_t>& w, int64_t from) {
  if (from < 0) return -1;
  int64_t wi = from >> 6;
  if (wi >= int64_t(w.size())) {
    wi = int64_t(w.size()) - 1;
    from = wi * 64 + 63;
  }
  unsigned bo = unsigned(from & 63);
  uint64_t v = w[std::size_t(wi)];
  if (bo != 63) v &= (uint64_t(2) << bo) - 1;
  while (true) {
    if (v != 0) return wi * 64 + 63 - std::countl_zero(v);
    if (--wi < 0) return -1;
    v = w[std::size_t(wi)];
  }
}

uint64_t conj_word(uint64_t w) {
  uint64_t res = 0, p = 1;  // p = (x+1)^i
  while (w != 0) {
    if (w & 1) res ^= p;
    w >>= 1;
    p ^= p << 1;
  }
  return res;
}

}  // namespace

void Poly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

Poly Poly::one() { return Poly{{1}}; }

Poly Poly::x() { return Poly{{2}}; }

Poly Poly::monomial(uint64_t degree) {
  if (degree > kMaxPolyDegree)
    throw resource_error("monomial: degree exceeds the 2^32 ceiling");
  std::vector<uint64_t> w(std::size_t(degree >> 6) + 1, 0);
  w.back() = uint64_t(1) << (degree & 63);
  return Poly{std::move(w)};
}

Poly Poly::from_words(std::vector<uint64_t> words) {
  return Poly{std::move(words)};
}

int64_t Poly::degree() const {
  if (words_.empty()) return kNegInfDegree;
  return int64_t(words_.size()) * 64 - 1 - std::countl_zero(words_.back());
}

bool Poly::coeff(uint64_t i) const {
  const std::size_t wi = std::size_t(i >> 6);
  if (wi >= words_.size()) return false;
  return (words_[wi] >> (i & 63)) & 1;
}

uint64_t Poly::weight() const {
  uint64_t n = 0;
  for (uint64_t w : words_) n += uint64_t(std::popcount(w));
  return n;
}

Poly Poly::operator+(const Poly& rhs) const {
  Poly r = *this;
  r += rhs;
  return r;
}

Poly& Poly::operator+=(const Poly& rhs) {
  if (rhs.words_.size() > words_.size()) words_.resize(rhs.words_.size(), 0);
  for (std::size_t i = 0; i < rhs.words_.size(); ++i) words_[i] ^= rhs.words_[i];
  trim();
  return *this;
}

Poly Poly::operator*(const Poly& rhs) const {
  if (is_zero() || rhs.is_zero()) return {};
  std::vector<uint64_t> out(words_.size() + rhs.words_.size(), 0);
  detail::mul_words(out.data(), words_.data(), words_.size(), rhs.words_.data(),
                    rhs.words_.size());
  return Poly{std::move(out)};
}

Poly Poly::operator/(const Poly& rhs) const { return divrem(*this, rhs).quotient; }

Poly Poly::operator%(const Poly& rhs) const { return divrem(*this, rhs).remainder; }

Poly Poly::shifted_up(uint64_t k) const {
  if (is_zero() || k == 0) return *this;
  std::vector<uint64_t> out(words_.size() + std::size_t(k >> 6) + 1, 0);
  xor_shl(out, words_, k);
  return Poly{std::move(out)};
}

Poly Poly::shifted_down(uint64_t k) const {
  if (k == 0) return *this;
  const std::size_t wo = std::size_t(k >> 6);
  if (wo >= words_.size()) return {};
  const unsigned bo = unsigned(k & 63);
  std::vector<uint64_t> out(words_.begin() + std::ptrdiff_t(wo), words_.end());
  if (bo != 0) {
    for (std::size_t i = 0; i + 1 < out.size(); ++i)
      out[i] = (out[i] >> bo) | (out[i + 1] << (64 - bo));
    out.back() >>= bo;
  }
  return Poly{std::move(out)};
}

Poly Poly::truncated(uint64_t k) const {
  const std::size_t wo = std::size_t(k >> 6);
  if (wo >= words_.size()) return *this;
  std::vector<uint64_t> out(words_.begin(), words_.begin() + std::ptrdiff_t(wo));
  const unsigned bo = unsigned(k & 63);
  if (bo != 0) out.push_back(words_[wo] & ((uint64_t(1) << bo) - 1));
  return Poly{std::move(out)};
}

bool Poly::operator<(const Poly& rhs) const { return canonical_less(*this, rhs); }

bool canonical_less(const Poly& a, const Poly& b) {
  if (a.degree() != b.degree()) return a.degree() < b.degree();
  const auto aw = a.words(), bw = b.words();
  for (std::size_t i = aw.size(); i-- > 0;)
    if (aw[i] != bw[i]) return aw[i] < bw[i];
  return false;
}

DivRem divrem(const Poly& a, const Poly& b) {
  if (b.is_zero()) throw std::domain_error("divrem: division by the zero polynomial");
  const int64_t da = a.degree(), db = b.degree();
  if (da < db) return {Poly::zero(), a};
  std::vector<uint64_t> rem(a.words().begin(), a.words().end());
  std::vector<uint64_t> quot(std::size_t((da - db) >> 6) + 1, 0);
  int64_t d = da;
  while (d >= db) {
    const uint64_t s = uint64_t(d - db);
    quot[std::size_t(s >> 6)] |= uint64_t(1) << (s & 63);
    xor_shl(rem, b.words(), s);
    d = top_bit_below(rem, d - 1);
  }
  return {Poly::from_words(std::move(quot)), Poly::from_words(std::move(rem))};
}

Poly gcd(Poly a, Poly b) {
  if (a.is_zero() && b.is_zero())
    throw std::domain_error("gcd: gcd(0, 0) is undefined");
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

Poly mul_naive(const Poly& a, const Poly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<uint64_t> out(a.words().size() + b.words().size(), 0);
  const auto aw = a.words();
  for (std::size_t wi = 0; wi < aw.size(); ++wi) {
    uint64_t w = aw[wi];
    while (w != 0) {
      const unsigned bit = unsigned(std::countr_zero(w));
      w &= w - 1;
      xor_shl(out, b.words(), uint64_t(wi) * 64 + bit);
    }
  }
  return Poly::from_words(std::move(out));
}

Poly square(const Poly& a) {
  if (a.is_zero()) return {};
  std::vector<uint64_t> out(2 * a.words().size(), 0);
  detail::square_words(out.data(), a.words().data(), a.words().size());
  return Poly::from_words(std::move(out));
}

std::optional<Poly> try_sqrt(const Poly& a) {
  const auto w = a.words();
  for (uint64_t v : w)
    if (v & kOddMask) return std::nullopt;
  std::vector<uint64_t> out((w.size() + 1) / 2, 0);
  for (std::size_t i = 0; i < w.size(); ++i) {
    const uint64_t half = compress_even(w[i]);
    out[i / 2] |= (i % 2 == 0) ? half : half << 32;
  }
  return Poly::from_words(std::move(out));
}

Poly pow(const Poly& base, uint64_t exponent) {
  if (exponent == 0) return Poly::one();  // includes 0^0 = 1
  if (base.is_zero()) return Poly::zero();
  const uint64_t d = uint64_t(base.degree());
  if (d > 0 && exponent > kMaxPolyDegree / d)
    throw resource_error("pow: result degree exceeds the 2^32 ceiling");
  Poly acc = Poly::one(), sq = base;
  while (true) {
    if (exponent & 1) acc = acc * sq;
    exponent >>= 1;
    if (exponent == 0) break;
    sq = square(sq);
  }
  return acc;
}

Poly derivative(const Poly& a) {
  std::vector<uint64_t> out(a.words().begin(), a.words().end());
  for (uint64_t& w : out) w = (w >> 1) & ~kOddMask;
  return Poly::from_words(std::move(out));
}

Poly conjugate(const Poly& a) {
  if (a.is_zero()) return a;
  if (a.degree() < 64) return Poly::from_words({conj_word(a.words()[0])});
  // Split at a power-of-two boundary s: (x+1)^s = x^s + 1, so
  // a = lo + x^s hi  conjugates to  conj(lo) + conj(hi) + x^s conj(hi).
  const uint64_t s = std::bit_floor(uint64_t(a.degree()));
  const Poly lo = conjugate(a.truncated(s));
  const Poly hi = conjugate(a.shifted_down(s));
  return lo + hi + hi.shifted_up(s);
}

Poly reverse(const Poly& a) {
  if (a.is_zero() || !a.coeff(0))
    throw std::domain_error("reverse: nonzero constant term required");
  const uint64_t nbits = uint64_t(a.degree()) + 1;
  std::vector<uint64_t> w(a.words().begin(), a.words().end());
  const uint64_t pad = uint64_t(w.size()) * 64 - nbits;
  std::reverse(w.begin(), w.end());
  for (uint64_t& v : w) v = bitrev64(v);
  return Poly::from_words(std::move(w)).shifted_down(pad);
}

Poly complete_poly(uint64_t h) {
  if (h > kMaxPolyDegree)
    throw resource_error("complete_poly: degree exceeds the 2^32 ceiling");
  std::vector<uint64_t> w(std::size_t(h >> 6) + 1, ~uint64_t(0));
  const unsigned top = unsigned(h & 63);
  w.back() = (top == 63) ? ~uint64_t(0) : (uint64_t(2) << top) - 1;
  return Poly::from_words(std::move(w));
}

Poly substitute_x_pow(const Poly& a, uint64_t k) {
  if (k == 0) throw std::invalid_argument("substitute_x_pow: k must be positive");
  if (k == 1 || a.is_zero()) return a;
  if (uint64_t(a.degree()) > kMaxPolyDegree / k)
    throw resource_error("substitute_x_pow: result degree exceeds the 2^32 ceiling");
  std::vector<uint64_t> out(std::size_t(uint64_t(a.degree()) * k >> 6) + 1, 0);
  const auto w = a.words();
  for (std::size_t wi = 0; wi < w.size(); ++wi) {
    uint64_t v = w[wi];
    while (v != 0) {
      const uint64_t i = uint64_t(wi) * 64 + uint64_t(std::countr_zero(v));
      v &= v - 1;
      out[std::size_t((i * k) >> 6)] |= uint64_t(1) << ((i * k) & 63);
    }
  }
  return Poly::from_words(std::move(out));
}

std::pair<bool, bool> eval_at_01(const Poly& a) {
  return {a.coeff(0), (a.weight() & 1) != 0};
}

namespace {

Poly parse_bit_literal(std::string_view text, std::size_t i, unsigned bits_per_digit) {
  // i points at the first digit; the trailing whitespace was not stripped.
  const std::size_t digits_begin = i;
  std::size_t end = i;
  auto digit_value = [&](char c) -> int {
    if (c >= '0' && c <= '9') return c - '0';
    if (bits_per_digit == 4 && c >= 'a' && c <= 'f') return c - 'a' + 10;
    if (bits_per_digit == 4 && c >= 'A' && c <= 'F') return c - 'A' + 10;
    return -1;
  };
  while (end < text.size() && digit_value(text[end]) >= 0) {
    if (bits_per_digit == 1 && text[end] > '1')
      throw parse_error("invalid binary digit", end);
    ++end;
  }
  if (end == digits_begin) throw parse_error("expected digits", i);
  for (std::size_t j = end; j < text.size(); ++j)
    if (!std::isspace(static_cast<unsigned char>(text[j])))
      throw parse_error("trailing characters after literal", j);
  const uint64_t ndigits = end - digits_begin;
  if (ndigits * bits_per_digit > kMaxPolyDegree + 1)
    throw resource_error("parse: literal implies degree beyond the 2^32 ceiling");
  std::vector<uint64_t> w(std::size_t((ndigits * bits_per_digit + 63) / 64), 0);
  uint64_t pos = 0;  // bit position, filled from the least significant digit
  for (std::size_t j = end; j-- > digits_begin;) {
    const uint64_t v = uint64_t(digit_value(text[j]));
    w[std::size_t(pos >> 6)] |= v << (pos & 63);
    if ((pos & 63) + bits_per_digit > 64)
      w[std::size_t(pos >> 6) + 1] |= v >> (64 - (pos & 63));
    pos += bits_per_digit;
  }
  return Poly::from_words(std::move(w));
}

}  // namespace

Poly parse_poly(std::string_view text) {
  std::size_t i = 0;
  auto skip_ws = [&] {
    while (i < text.size() && std::isspace(static_cast<unsigned char>(text[i]))) ++i;
  };
  auto at_end_after_ws = [&](std::size_t j) {
    while (j < text.size() && std::isspace(static_cast<unsigned char>(text[j]))) ++j;
    return j == text.size();
  };
  skip_ws();
  if (i == text.size()) throw parse_error("empty polynomial", i);
  if (text[i] == '0') {
    if (i + 1 < text.size() && (text[i + 1] == 'x' || text[i + 1] == 'X'))
      return parse_bit_literal(text, i + 2, 4);
    if (i + 1 < text.size() && (text[i + 1] == 'b' || text[i + 1] == 'B'))
      return parse_bit_literal(text, i + 2, 1);
    if (at_end_after_ws(i + 1)) return Poly::zero();
    throw parse_error("unexpected character after '0'", i + 1);
  }

  std::vector<uint64_t> acc;
  auto toggle = [&](uint64_t e) {
    const std::size_t wi = std::size_t(e >> 6);
    if (wi >= acc.size()) acc.resize(wi + 1, 0);
    acc[wi] ^= uint64_t(1) << (e & 63);
  };
  while (true) {
    skip_ws();
    if (i == text.size()) throw parse_error("expected term", i);
    if (text[i] == '1') {
      toggle(0);
      ++i;
    } else if (text[i] == 'x') {
      ++i;
      uint64_t e = 1;
      skip_ws();
      if (i < text.size() && text[i] == '^') {
        ++i;
        skip_ws();
        if (i == text.size() || !std::isdigit(static_cast<unsigned char>(text[i])))
          throw parse_error("expected exponent", i);
        e = 0;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
          const uint64_t digit = uint64_t(text[i] - '0');
          if (e > (kMaxPolyDegree - digit) / 10)
            throw resource_error("parse: exponent exceeds the 2^32 ceiling");
          e = e * 10 + digit;
          ++i;
        }
      }
      toggle(e);
    } else {
      throw parse_error("expected term", i);
    }
    skip_ws();
    if (i == text.size()) break;
    if (text[i] != '+') throw parse_error("expected '+'", i);
    ++i;
  }
  return Poly::from_words(std::move(acc));
}

std::string format_poly(const Poly& a) {
  if (a.is_zero()) return "0";
  std::string s;
  const auto w = a.words();
  for (std::size_t wi = w.size(); wi-- > 0;) {
    uint64_t v = w[wi];
    while (v != 0) {
      const unsigned bit = 63 - unsigned(std::countl_zero(v));
      v &= ~(uint64_t(1) << bit);
      const uint64_t e = uint64_t(wi) * 64 + bit;
      if (!s.empty()) s += '+';
      if (e == 0)
        s += '1';
      else if (e == 1)
        s += 'x';
      else {
        s += "x^";
        s += std::to_string(e);
      }
    }
  }
  return s;
}

std::string to_hex(const Poly& a) {
  if (a.is_zero()) return "0x0";
  static const char* digits = "0123456789abcdef";
  std::string s;
  const auto w = a.words();
  bool leading = true;
  for (std::size_t wi = w.size(); wi-- > 0;) {
    for (int nib = 15; nib >= 0; --nib) {
      const unsigned v = unsigned(w[wi] >> (4 * nib)) & 15u;
      if (leading && v == 0) continue;
      leading = false;
      s += digits[v];
    }
  }
  return "0x" + s;
}

}  // namespace gf2up
