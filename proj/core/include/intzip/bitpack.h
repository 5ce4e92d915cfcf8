#pragma once

#include <cstddef>
#include <cstdint>
#include <span>

namespace intzip {

// Fixed-width bit packing over groups of 32 (scalar layout) and 128
// (vertical four-lane layout) integers.
//
// Bit order is low-bits-first within little-endian 32-bit words: value i of a
// scalar group occupies bits [i*b, (i+1)*b) of the output bit string, and bit
// k of the string is bit k%32 of word k/32.  A field that crosses a word
// boundary therefore stores its low bits in the high bits of the earlier
// word.  A group of 32 values at width b occupies exactly b words.
//
// The vertical 128-value layout splits the group into four lanes in
// round-robin order (lane j holds values j, j+4, j+8, ...).  Each lane is
// packed like a scalar group and the four lane streams are interleaved word
// by word: scalar word i of lane j sits at stream position 4*i + j.  A group
// occupies exactly 4*b words, and every run of four words holds one 128-bit
// row, so the layout is directly consumable by 4x32-bit SIMD loads.
//
// The plain packers reject values that do not fit in the requested width
// (std::invalid_argument); the _masked variants pack v mod 2^b instead.
// Width 0 packs to zero words and unpacks to all-zero values.  Widths above
// 32 are rejected.

constexpr size_t packed_words_scalar32(uint32_t bit_width) {
  return bit_width;
}
constexpr size_t packed_words_vertical128(uint32_t bit_width) {
  return 4 * static_cast<size_t>(bit_width);
}

// Smallest width that can represent every value: bit_width of the OR of all
// values (0 for an empty or all-zero span).
uint32_t max_bitwidth(std::span<const uint32_t> values);

// 32-value scalar groups.  `values` holds 32 integers, `out` holds
// packed_words_scalar32(bit_width) words.
void pack_scalar32(const uint32_t* values, uint32_t bit_width, uint32_t* out);
void pack_scalar32_masked(const uint32_t* values, uint32_t bit_width,
                          uint32_t* out);
void unpack_scalar32(const uint32_t* words, uint32_t bit_width, uint32_t* out);

// 128-value vertical groups.  `values` holds 128 integers, `out` holds
// packed_words_vertical128(bit_width) words.
void pack_vertical128(const uint32_t* values, uint32_t bit_width,
                      uint32_t* out);
void pack_vertical128_masked(const uint32_t* values, uint32_t bit_width,
                             uint32_t* out);
void unpack_vertical128(const uint32_t* words, uint32_t bit_width,
                        uint32_t* out);

}  // namespace intzip
