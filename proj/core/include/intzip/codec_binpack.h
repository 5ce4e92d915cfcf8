#pragma once

#include <memory>

#include "intzip/codec.h"

namespace intzip {

// Binary-packing codecs.  Both require the core count to be a multiple of
// 128 (block_multiple 128).
//
// BP32 packs scalar groups of 32.  A meta-block covers 4 consecutive groups
// (128 integers) and starts with one descriptor word whose byte i (little
// endian, byte 0 lowest) is the bit width of group i; the widths' packed
// payloads follow in order.  128 zeros therefore cost exactly one word.
//
// SIMD-BP128 packs vertical groups of 128.  A meta-block covers up to 16
// consecutive groups (2048 integers) and starts with a 16-byte descriptor
// (four words, byte i is the width of group i); a partial final meta-block
// keeps the full-size descriptor with zero widths for absent groups.
// Payloads use the four-lane vertical layout, so a chunk buffer allocated on
// a 16-byte boundary keeps every group's payload 16-byte aligned (the
// descriptor is 16 bytes; encode inserts no padding).
//
// A descriptor width byte above 32 makes decode throw CorruptError.

std::unique_ptr<Codec> make_bp32_codec(DeltaMode mode);
std::unique_ptr<Codec> make_simdbp128_codec(DeltaMode mode);

}  // namespace intzip
