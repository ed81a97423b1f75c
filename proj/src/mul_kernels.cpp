#include "mul_kernels.hpp"

#include <array>

namespace gf2up::detail {
namespace {

// Spread the bits of a byte apart: bit i -> bit 2i.
constexpr std::array<uint16_t, 256> kSpread = [] {
  std::array<uint16_t, 256> t{};
  for (unsigned v = 0; v < 256; ++v) {
    uint16_t s = 0;
    for (unsigned i = 0; i < 8; ++i)
      if (v & (1u << i)) s |= uint16_t(1u << (2 * i));
    t[v] = s;
  }
  return t;
}();

inline uint64_t spread32(uint32_t v) {
  return uint64_t(kSpread[v & 0xff]) | uint64_t(kSpread[(v >> 8) & 0xff]) << 16 |
         uint64_t(kSpread[(v >> 16) & 0xff]) << 32 |
         uint64_t(kSpread[(v >> 24) & 0xff]) << 48;
}

using MulFn = void (*)(uint64_t*, const uint64_t*, std::size_t, const uint64_t*,
                       std::size_t);
using SquareFn = void (*)(uint64_t*, const uint64_t*, std::size_t);

MulFn pick_mul() {
#ifdef GF2UP_HAVE_PCLMUL
  if (__builtin_cpu_supports("pclmul")) return &mul_words_pclmul;
#endif
  return &mul_words_portable;
}

SquareFn pick_square() {
#ifdef GF2UP_HAVE_PCLMUL
  if (__builtin_cpu_supports("pclmul")) return &square_words_pclmul;
#endif
  return &square_words_portable;
}

const MulFn g_mul = pick_mul();
const SquareFn g_square = pick_square();

}  // namespace

// Comb multiplication with a 4-bit window per word of b. The table holds
// the 16 nibble multiples of the current b-word as 128-bit values.
void mul_words_portable(uint64_t* dst, const uint64_t* a, std::size_t na,
                        const uint64_t* b, std::size_t nb) {
  for (std::size_t j = 0; j < nb; ++j) {
    const uint64_t w = b[j];
    if (w == 0) continue;
    uint64_t tl[16], th[16];
    tl[0] = 0;
    th[0] = 0;
    tl[1] = w;
    th[1] = 0;
    for (int t = 2; t < 16; t += 2) {
      tl[t] = tl[t >> 1] << 1;
      th[t] = (th[t >> 1] << 1) | (tl[t >> 1] >> 63);
      tl[t + 1] = tl[t] ^ w;
      th[t + 1] = th[t];
    }
    for (std::size_t i = 0; i < na; ++i) {
      const uint64_t v = a[i];
      if (v == 0) continue;
      uint64_t lo = 0, hi = 0;
      for (int s = 60; s >= 0; s -= 4) {
        hi = (hi << 4) | (lo >> 60);
        lo <<= 4;
        const unsigned nib = unsigned(v >> s) & 15u;
        lo ^= tl[nib];
        hi ^= th[nib];
      }
      dst[i + j] ^= lo;
      dst[i + j + 1] ^= hi;
    }
  }
}

void square_words_portable(uint64_t* dst, const uint64_t* a, std::size_t na) {
  for (std::size_t i = 0; i < na; ++i) {
    dst[2 * i] ^= spread32(uint32_t(a[i]));
    dst[2 * i + 1] ^= spread32(uint32_t(a[i] >> 32));
  }
}

void mul_words(uint64_t* dst, const uint64_t* a, std::size_t na,
               const uint64_t* b, std::size_t nb) {
  g_mul(dst, a, na, b, nb);
}

void square_words(uint64_t* dst, const uint64_t* a, std::size_t na) {
  g_square(dst, a, na);
}

}  // namespace gf2up::detail
