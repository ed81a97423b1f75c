// Hardware carry-less multiply kernels. This translation unit is the only
// one compiled with -mpclmul; callers dispatch through mul_kernels.cpp
// after a runtime CPU check, so nothing here executes on machines without
// the instruction.

#include <emmintrin.h>
#include <wmmintrin.h>

#include "mul_kernels.hpp"

namespace gf2up::detail {

void mul_words_pclmul(uint64_t* dst, const uint64_t* a, std::size_t na,
                      const uint64_t* b, std::size_t nb) {
  for (std::size_t j = 0; j < nb; ++j) {
    if (b[j] == 0) continue;
    const __m128i bw = _mm_cvtsi64_si128(int64_t(b[j]));
    for (std::size_t i = 0; i < na; ++i) {
      if (a[i] == 0) continue;
      const __m128i p =
          _mm_clmulepi64_si128(_mm_cvtsi64_si128(int64_t(a[i])), bw, 0x00);
      dst[i + j] ^= uint64_t(_mm_cvtsi128_si64(p));
      dst[i + j + 1] ^= uint64_t(_mm_cvtsi128_si64(_mm_unpackhi_epi64(p, p)));
    }
  }
}

void square_words_pclmul(uint64_t* dst, const uint64_t* a, std::size_t na) {
  for (std::size_t i = 0; i < na; ++i) {
    const __m128i w = _mm_cvtsi64_si128(int64_t(a[i]));
    const __m128i p = _mm_clmulepi64_si128(w, w, 0x00);
    dst[2 * i] ^= uint64_t(_mm_cvtsi128_si64(p));
    dst[2 * i + 1] ^= uint64_t(_mm_cvtsi128_si64(_mm_unpackhi_epi64(p, p)));
  }
}

}  // namespace gf2up::detail
