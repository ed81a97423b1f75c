#pragma once

#include <cstddef>
#include <cstdint>

namespace gf2up::detail {

// XOR-accumulate the carry-less product of a and b into dst.
// dst must hold at least na + nb words.
void mul_words(uint64_t* dst, const uint64_t* a, std::size_t na,
               const uint64_t* b, std::size_t nb);

// XOR-accumulate the carry-less square of a into dst (2 * na words).
void square_words(uint64_t* dst, const uint64_t* a, std::size_t na);

void mul_words_portable(uint64_t* dst, const uint64_t* a, std::size_t na,
                        const uint64_t* b, std::size_t nb);
void square_words_portable(uint64_t* dst, const uint64_t* a, std::size_t na);

#ifdef GF2UP_HAVE_PCLMUL
void mul_words_pclmul(uint64_t* dst, const uint64_t* a, std::size_t na,
                      const uint64_t* b, std::size_t nb);
void square_words_pclmul(uint64_t* dst, const uint64_t* a, std::size_t na);
#endif

}  // namespace gf2up::detail
