#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "intzip/codec.h"

namespace intzip {

// --- Variable Byte ---------------------------------------------------------
// Each integer is stored as its low-bits-first 7-bit groups, one per byte;
// the high bit is 0 on continuation bytes and 1 only on the final byte of an
// integer.  0 -> [0x80], 127 -> [0xFF], 200 -> [0x48, 0x81].  A 32-bit value
// needs at most 5 bytes.
void vbyte_encode(std::span<const uint32_t> values, std::vector<uint8_t>& out);
// Decodes `count` integers, returns bytes consumed.  Throws CorruptError on
// a truncated stream or an integer exceeding 32 bits / 5 bytes.
size_t vbyte_decode(std::span<const uint8_t> bytes, uint32_t* out,
                    size_t count);

// --- varint-G8IU ------------------------------------------------------------
// Groups of 9 bytes: one descriptor byte, then 8 data bytes holding complete
// integers of 1..4 little-endian bytes each (zero takes one byte).  Integers
// never straddle groups.  Descriptor bit i (bit 0 = data byte 0) is 0 iff
// data byte i is the last byte of an integer; unused trailing bytes carry
// descriptor bit 1 and are written as zero.
void g8iu_encode(std::span<const uint32_t> values, std::vector<uint8_t>& out);
// Decodes `count` integers, returns bytes consumed (a multiple of 9).
size_t g8iu_decode(std::span<const uint8_t> bytes, uint32_t* out,
                   size_t count);

// --- Simple-8b --------------------------------------------------------------
// 64-bit words; bits 0..3 hold the selector, bits 4..63 hold the payload
// packed low-bits-first.  A word either carries exactly its selector's
// capacity of values or finishes the stream; the decoder emits the full
// capacity per word and truncates to the requested count at the end.
// Selectors 0 and 1 apply only to all-zero runs.  Values must be below 2^60.
struct Simple8bRow {
  uint32_t ints_coded;
  uint32_t bits_per_int;
};
inline constexpr std::array<Simple8bRow, 16> kSimple8bTable{{{240, 0},
                                                             {120, 0},
                                                             {60, 1},
                                                             {30, 2},
                                                             {20, 3},
                                                             {15, 4},
                                                             {12, 5},
                                                             {10, 6},
                                                             {8, 7},
                                                             {7, 8},
                                                             {6, 10},
                                                             {5, 12},
                                                             {4, 15},
                                                             {3, 20},
                                                             {2, 30},
                                                             {1, 60}}};

// 64-bit words are emitted as pairs of 32-bit words, low half first.
void simple8b_encode(std::span<const uint64_t> values,
                     std::vector<uint32_t>& out);
void simple8b_encode(std::span<const uint32_t> values,
                     std::vector<uint32_t>& out);
// Decodes `count` integers, returns words consumed.  Throws CorruptError if
// the stream ends before `count` values are available.  The 32-bit overload
// truncates values to 32 bits.
size_t simple8b_decode(std::span<const uint32_t> words, uint64_t* out,
                       size_t count);
size_t simple8b_decode(std::span<const uint32_t> words, uint32_t* out,
                       size_t count);

// Codec wrappers (block_multiple 1; byte streams are zero-padded to a 4-byte
// boundary inside the word payload).
std::unique_ptr<Codec> make_vbyte_codec(DeltaMode mode);
std::unique_ptr<Codec> make_g8iu_codec(DeltaMode mode);
std::unique_ptr<Codec> make_simple8b_codec(DeltaMode mode);

}  // namespace intzip
