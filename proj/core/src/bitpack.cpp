#include "intzip/bitpack.h"

#include <array>
#include <bit>
#include <cstring>
#include <stdexcept>
#include <utility>

#if defined(__SSE2__)
#include <emmintrin.h>
#endif

namespace intzip {
namespace {

constexpr uint32_t mask_for(uint32_t b) {
  return b >= 32 ? ~uint32_t{0} : (uint32_t{1} << b) - 1;
}

// One fully unrolled routine is instantiated per bit width; shift amounts are
// compile-time constants, as in a generated kernel.  The packers always mask;
// the strict entry points validate the precondition before dispatching.

template <uint32_t B, size_t I>
inline void pack32_step(const uint32_t* in, uint32_t*& out, uint32_t& cur) {
  constexpr uint32_t shift = (uint32_t{I} * B) % 32;
  const uint32_t v = in[I] & mask_for(B);
  cur |= v << shift;
  if constexpr (shift + B >= 32) {
    *out++ = cur;
    if constexpr (shift + B > 32)
      cur = v >> (32 - shift);
    else
      cur = 0;
  }
}

template <uint32_t B, size_t... I>
void pack32_impl(const uint32_t* in, uint32_t* out,
                 std::index_sequence<I...>) {
  uint32_t cur = 0;
  (pack32_step<B, I>(in, out, cur), ...);
}

template <uint32_t B>
void pack32(const uint32_t* in, uint32_t* out) {
  if constexpr (B == 0) {
    (void)in;
    (void)out;
  } else {
    pack32_impl<B>(in, out, std::make_index_sequence<32>{});
  }
}

template <uint32_t B, size_t I>
inline void unpack32_step(const uint32_t*& in, uint32_t* out, uint32_t& cur) {
  constexpr uint32_t shift = (uint32_t{I} * B) % 32;
  constexpr uint32_t mask = mask_for(B);
  if constexpr (shift + B <= 32) {
    out[I] = (cur >> shift) & mask;
    if constexpr (shift + B == 32 && I != 31) cur = *in++;
  } else {
    const uint32_t next = *in++;
    out[I] = ((cur >> shift) | (next << (32 - shift))) & mask;
    cur = next;
  }
}

template <uint32_t B, size_t... I>
void unpack32_impl(const uint32_t* in, uint32_t* out,
                   std::index_sequence<I...>) {
  uint32_t cur = *in++;
  (unpack32_step<B, I>(in, out, cur), ...);
}

template <uint32_t B>
void unpack32(const uint32_t* in, uint32_t* out) {
  if constexpr (B == 0) {
    std::memset(out, 0, 32 * sizeof(uint32_t));
  } else {
    unpack32_impl<B>(in, out, std::make_index_sequence<32>{});
  }
}

#if defined(__SSE2__)

template <uint32_t B, size_t I>
inline void pack128_step(const uint32_t* in, uint32_t*& out, __m128i& cur,
                         __m128i mask) {
  constexpr uint32_t shift = (uint32_t{I} * B) % 32;
  const __m128i v = _mm_and_si128(
      _mm_loadu_si128(reinterpret_cast<const __m128i*>(in + 4 * I)), mask);
  cur = _mm_or_si128(cur, _mm_slli_epi32(v, shift));
  if constexpr (shift + B >= 32) {
    _mm_storeu_si128(reinterpret_cast<__m128i*>(out), cur);
    out += 4;
    if constexpr (shift + B > 32)
      cur = _mm_srli_epi32(v, 32 - shift);
    else
      cur = _mm_setzero_si128();
  }
}

template <uint32_t B, size_t... I>
void pack128_impl(const uint32_t* in, uint32_t* out,
                  std::index_sequence<I...>) {
  const __m128i mask = _mm_set1_epi32(static_cast<int>(mask_for(B)));
  __m128i cur = _mm_setzero_si128();
  (pack128_step<B, I>(in, out, cur, mask), ...);
}

template <uint32_t B>
void pack128(const uint32_t* in, uint32_t* out) {
  if constexpr (B == 0) {
    (void)in;
    (void)out;
  } else {
    pack128_impl<B>(in, out, std::make_index_sequence<32>{});
  }
}

template <uint32_t B, size_t I>
inline void unpack128_step(const uint32_t*& in, uint32_t* out, __m128i& cur,
                           __m128i mask) {
  constexpr uint32_t shift = (uint32_t{I} * B) % 32;
  __m128i v;
  if constexpr (shift + B <= 32) {
    v = _mm_srli_epi32(cur, shift);
    if constexpr (shift + B == 32 && I != 31) {
      cur = _mm_loadu_si128(reinterpret_cast<const __m128i*>(in));
      in += 4;
    }
  } else {
    const __m128i next =
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(in));
    in += 4;
    v = _mm_or_si128(_mm_srli_epi32(cur, shift),
                     _mm_slli_epi32(next, 32 - shift));
    cur = next;
  }
  _mm_storeu_si128(reinterpret_cast<__m128i*>(out + 4 * I),
                   _mm_and_si128(v, mask));
}

template <uint32_t B, size_t... I>
void unpack128_impl(const uint32_t* in, uint32_t* out,
                    std::index_sequence<I...>) {
  const __m128i mask = _mm_set1_epi32(static_cast<int>(mask_for(B)));
  __m128i cur = _mm_loadu_si128(reinterpret_cast<const __m128i*>(in));
  in += 4;
  (unpack128_step<B, I>(in, out, cur, mask), ...);
}

template <uint32_t B>
void unpack128(const uint32_t* in, uint32_t* out) {
  if constexpr (B == 0) {
    std::memset(out, 0, 128 * sizeof(uint32_t));
  } else {
    unpack128_impl<B>(in, out, std::make_index_sequence<32>{});
  }
}

#else  // portable four-lane fallback

template <uint32_t B, size_t I>
inline void pack128_step(const uint32_t* in, uint32_t*& out, uint32_t* cur) {
  constexpr uint32_t shift = (uint32_t{I} * B) % 32;
  constexpr uint32_t mask = mask_for(B);
  for (int j = 0; j < 4; ++j) cur[j] |= (in[4 * I + j] & mask) << shift;
  if constexpr (shift + B >= 32) {
    for (int j = 0; j < 4; ++j) out[j] = cur[j];
    out += 4;
    for (int j = 0; j < 4; ++j) {
      if constexpr (shift + B > 32)
        cur[j] = (in[4 * I + j] & mask) >> (32 - shift);
      else
        cur[j] = 0;
    }
  }
}

template <uint32_t B, size_t... I>
void pack128_impl(const uint32_t* in, uint32_t* out,
                  std::index_sequence<I...>) {
  uint32_t cur[4] = {0, 0, 0, 0};
  (pack128_step<B, I>(in, out, cur), ...);
}

template <uint32_t B>
void pack128(const uint32_t* in, uint32_t* out) {
  if constexpr (B == 0) {
    (void)in;
    (void)out;
  } else {
    pack128_impl<B>(in, out, std::make_index_sequence<32>{});
  }
}

template <uint32_t B, size_t I>
inline void unpack128_step(const uint32_t*& in, uint32_t* out, uint32_t* cur) {
  constexpr uint32_t shift = (uint32_t{I} * B) % 32;
  constexpr uint32_t mask = mask_for(B);
  if constexpr (shift + B <= 32) {
    for (int j = 0; j < 4; ++j) out[4 * I + j] = (cur[j] >> shift) & mask;
    if constexpr (shift + B == 32 && I != 31) {
      for (int j = 0; j < 4; ++j) cur[j] = in[j];
      in += 4;
    }
  } else {
    for (int j = 0; j < 4; ++j) {
      const uint32_t next = in[j];
      out[4 * I + j] = ((cur[j] >> shift) | (next << (32 - shift))) & mask;
      cur[j] = next;
    }
    in += 4;
  }
}

template <uint32_t B, size_t... I>
void unpack128_impl(const uint32_t* in, uint32_t* out,
                    std::index_sequence<I...>) {
  uint32_t cur[4];
  for (int j = 0; j < 4; ++j) cur[j] = in[j];
  in += 4;
  (unpack128_step<B, I>(in, out, cur), ...);
}

template <uint32_t B>
void unpack128(const uint32_t* in, uint32_t* out) {
  if constexpr (B == 0) {
    std::memset(out, 0, 128 * sizeof(uint32_t));
  } else {
    unpack128_impl<B>(in, out, std::make_index_sequence<32>{});
  }
}

#endif  // __SSE2__

using GroupFn = void (*)(const uint32_t*, uint32_t*);

void check_width(uint32_t bit_width) {
  if (bit_width > 32)
    throw std::invalid_argument("bit width must be at most 32");
}

void check_fits(const uint32_t* values, size_t n, uint32_t bit_width) {
  if (bit_width >= 32) return;
  uint32_t acc = 0;
  for (size_t i = 0; i < n; ++i) acc |= values[i];
  if (acc >> bit_width)
    throw std::invalid_argument("value does not fit in bit width");
}

template <uint32_t B>
struct Pack32 {
  static void run(const uint32_t* in, uint32_t* out) { pack32<B>(in, out); }
};
template <uint32_t B>
struct Unpack32 {
  static void run(const uint32_t* in, uint32_t* out) { unpack32<B>(in, out); }
};
template <uint32_t B>
struct Pack128 {
  static void run(const uint32_t* in, uint32_t* out) { pack128<B>(in, out); }
};
template <uint32_t B>
struct Unpack128 {
  static void run(const uint32_t* in, uint32_t* out) {
    unpack128<B>(in, out);
  }
};

template <template <uint32_t> class Fn>
constexpr std::array<GroupFn, 33> width_table() {
  return []<size_t... B>(std::index_sequence<B...>) {
    return std::array<GroupFn, 33>{{&Fn<uint32_t{B}>::run...}};
  }(std::make_index_sequence<33>{});
}

constexpr auto kPack32 = width_table<Pack32>();
constexpr auto kUnpack32 = width_table<Unpack32>();
constexpr auto kPack128 = width_table<Pack128>();
constexpr auto kUnpack128 = width_table<Unpack128>();

}  // namespace

uint32_t max_bitwidth(std::span<const uint32_t> values) {
  uint32_t acc = 0;
  for (uint32_t v : values) acc |= v;
  return static_cast<uint32_t>(std::bit_width(acc));
}

void pack_scalar32(const uint32_t* values, uint32_t bit_width, uint32_t* out) {
  check_width(bit_width);
  check_fits(values, 32, bit_width);
  kPack32[bit_width](values, out);
}

void pack_scalar32_masked(const uint32_t* values, uint32_t bit_width,
                          uint32_t* out) {
  check_width(bit_width);
  kPack32[bit_width](values, out);
}

void unpack_scalar32(const uint32_t* words, uint32_t bit_width,
                     uint32_t* out) {
  check_width(bit_width);
  kUnpack32[bit_width](words, out);
}

void pack_vertical128(const uint32_t* values, uint32_t bit_width,
                      uint32_t* out) {
  check_width(bit_width);
  check_fits(values, 128, bit_width);
  kPack128[bit_width](values, out);
}

void pack_vertical128_masked(const uint32_t* values, uint32_t bit_width,
                             uint32_t* out) {
  check_width(bit_width);
  kPack128[bit_width](values, out);
}

void unpack_vertical128(const uint32_t* words, uint32_t bit_width,
                        uint32_t* out) {
  check_width(bit_width);
  kUnpack128[bit_width](words, out);
}

}  // namespace intzip
