#pragma once

#include <array>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "intzip/codec.h"

namespace intzip {

// Patched codecs: most values are packed at a reduced width b and the values
// that do not fit are handled as exceptions.  All four codecs work on pages
// (one page per chunk, at most 2^16 integers) made of 128-integer blocks,
// with block_multiple 128.

// counts[w] = number of values whose bit width is exactly w (w in 0..32).
struct Histogram33 {
  std::array<uint32_t, 33> counts{};
};
Histogram33 histogram_of_widths(std::span<const uint32_t> values);

// --- FastPFOR width selection -------------------------------------------------
// For a block with a given width histogram, the estimated cost in bits of
// packing at width b is
//     b * block_len + (8 + maxbits - b) * c(b)
// where maxbits is the largest occupied width and c(b) the number of values
// wider than b: every exception costs one position byte and maxbits - b
// stored high bits.  choose_width minimizes this over b = 0..maxbits,
// breaking ties toward the larger b (fewer exceptions).
struct WidthChoice {
  uint32_t b;
  uint32_t maxbits;
};
uint64_t fastpfor_cost_bits(const Histogram33& hist, uint32_t block_len,
                            uint32_t b);
WidthChoice fastpfor_choose_width(const Histogram33& hist,
                                  uint32_t block_len);

// --- PFOR width selection -------------------------------------------------------
// PFOR uses a single width b for a whole page.  Exceptions are chained
// through their packed slots, and a gap of 2^b or more between consecutive
// exceptions forces compulsory exceptions to keep every stored offset below
// 2^b.  choose_width estimates the cost of each b from the fraction e of
// sample values wider than b bits: zero exceptions cost b bits per value;
// while exceptions stay scarce (e * 2^b <= 1) the chain itself dominates and
// one compulsory exception per 2^b values is charged; beyond that the rate
// is e plus e / (e * 2^b - 1) for the gap-splitting ones, diverging as the
// offsets saturate.  It returns the b in 1..32 with the smallest estimate
// b + 32 * rate, breaking ties toward the larger width (fewer exceptions).
uint32_t pfor_choose_width(std::span<const uint32_t> sample);

// PFOR page layout: [b] then per block one marker word (low 16 bits: position
// of the block's first exception, 128 meaning none; high 16 bits: index of
// its value in the page exception table) and 4*b packed words whose exception
// slots hold offset-to-next-exception minus one (the last exception's slot
// points just past the block).  After all blocks: [exception count] then the
// exception values, uncompressed.
std::unique_ptr<Codec> make_pfor_codec(DeltaMode mode);

// Builds one PFOR page at an explicit width b (1..32); deltas.size() must be
// a multiple of 128 and at most 2^16.  The codec derives b with
// pfor_choose_width; this form is exposed so the page layout can be
// exercised at a pinned width.
void pfor_encode_page(uint32_t b, std::span<const uint32_t> deltas,
                      std::vector<uint32_t>& out);

// FastPFOR page layout: [offset of the byte-array length word, in words from
// the page start], the packed blocks (width b of the block, values masked to
// their low b bits), [byte array length in bytes], the byte array padded with
// zeros to a word boundary, then the exception section.  The byte array holds
// per block: b, maxbits, and if maxbits > b the exception count c followed by
// c position bytes.  The fixed page overhead is exactly those two words
// (8 bytes).  Exception high bits (value >> b, width maxbits - b) are stored:
//   - simplepfor: one stream over the whole page, Simple-8b coded;
//   - fastpfor: 32 per-width arrays; a 32-bit bitset of non-empty arrays,
//     then per non-empty array its count and the values bit packed in scalar
//     groups, padded to a multiple of 32;
//   - simdfastpfor: as fastpfor but padded to a multiple of 128, packed in
//     vertical groups, with zero words inserted before each packed array so
//     it starts 16-byte aligned relative to the page start.
// Blocks use scalar groups for simplepfor/fastpfor and vertical groups for
// simdfastpfor.  Decode recovers all exception high bits first, then unpacks
// and patches block by block.
std::unique_ptr<Codec> make_simplepfor_codec(DeltaMode mode);
std::unique_ptr<Codec> make_fastpfor_codec(DeltaMode mode);
std::unique_ptr<Codec> make_simdfastpfor_codec(DeltaMode mode);

}  // namespace intzip
