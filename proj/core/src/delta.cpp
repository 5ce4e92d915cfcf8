#include "intzip/delta.h"

#include <stdexcept>

#if defined(__SSE2__)
#include <emmintrin.h>
#endif

namespace intzip {
namespace {

[[noreturn]] void decreasing_input() {
  throw std::invalid_argument("delta encode: input is not nondecreasing");
}

}  // namespace

void delta_encode_scalar(std::span<uint32_t> values) {
  for (size_t i = values.size(); i-- > 1;) {
    if (values[i] < values[i - 1]) decreasing_input();
    values[i] -= values[i - 1];
  }
}

void delta_decode_scalar(std::span<uint32_t> values) {
  const size_t n = values.size();
  uint32_t* v = values.data();
  size_t i = 1;
  uint32_t acc = n == 0 ? 0 : v[0];
#if defined(__SSE2__)
  // In-register inclusive scan: each block of four adds its own running sums
  // with two shift-adds, then the carry broadcast from the previous block.
  // The loop-carried dependence is one add and one shuffle per four values.
  if (n >= 5) {
    __m128i carry = _mm_set1_epi32(static_cast<int>(acc));
    for (; i + 4 <= n; i += 4) {
      __m128i x = _mm_loadu_si128(reinterpret_cast<const __m128i*>(v + i));
      x = _mm_add_epi32(x, _mm_slli_si128(x, 4));
      x = _mm_add_epi32(x, _mm_slli_si128(x, 8));
      x = _mm_add_epi32(x, carry);
      _mm_storeu_si128(reinterpret_cast<__m128i*>(v + i), x);
      carry = _mm_shuffle_epi32(x, _MM_SHUFFLE(3, 3, 3, 3));
    }
    acc = static_cast<uint32_t>(_mm_cvtsi128_si32(carry));
  }
#endif
  for (; i < n; ++i) {
    acc += v[i];
    v[i] = acc;
  }
}

void delta_encode_stride4(std::span<uint32_t> values) {
  for (size_t i = values.size(); i-- > 4;) {
    if (values[i] < values[i - 4]) decreasing_input();
    values[i] -= values[i - 4];
  }
}

void delta_decode_stride4(std::span<uint32_t> values) {
  const size_t n = values.size();
  uint32_t* v = values.data();
  size_t i = 4;
#if defined(__SSE2__)
  for (; i + 4 <= n; i += 4) {
    const __m128i prev =
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(v + i - 4));
    const __m128i cur =
        _mm_loadu_si128(reinterpret_cast<const __m128i*>(v + i));
    _mm_storeu_si128(reinterpret_cast<__m128i*>(v + i),
                     _mm_add_epi32(cur, prev));
  }
#endif
  for (; i < n; ++i) v[i] += v[i - 4];
}

void delta_encode(DeltaMode mode, std::span<uint32_t> values) {
  if (mode == DeltaMode::scalar)
    delta_encode_scalar(values);
  else
    delta_encode_stride4(values);
}

void delta_decode(DeltaMode mode, std::span<uint32_t> values) {
  if (mode == DeltaMode::scalar)
    delta_decode_scalar(values);
  else
    delta_decode_stride4(values);
}

}  // namespace intzip
