#pragma once

#include <array>
#include <iosfwd>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "intzip/codec.h"

namespace intzip {

// On-disk container, all multi-byte fields little-endian:
//   magic            8 bytes, "INTZPK01"
//   codec name       u32 length, then that many ASCII bytes
//   array count      u32
//   per array:       u32 original_length, u32 word_count, then word_count
//                    32-bit words of payload
//
// For codec name "RAW" an array's payload is its values, one word each
// (word_count == original_length).  For every other codec the payload is a
// sequence of chunk records, each u32 original_length (1..65536), u32 word
// count, then that chunk's payload words.  Readers validate sizes and throw
// CorruptError on malformed input (bad magic, truncation, inconsistent
// lengths) without crashing or over-allocating.

inline constexpr std::array<char, 8> kContainerMagic = {'I', 'N', 'T', 'Z',
                                                        'P', 'K', '0', '1'};
inline constexpr std::string_view kRawCodecName = "RAW";

void container_write_raw(std::ostream& os,
                         std::span<const std::vector<uint32_t>> arrays);
std::vector<std::vector<uint32_t>> container_read_raw(std::istream& is);

void container_write_encoded(std::ostream& os, std::string_view codec_name,
                             std::span<const std::vector<Chunk>> arrays);

struct EncodedContainer {
  std::string codec_name;
  std::vector<std::vector<Chunk>> arrays;
};
EncodedContainer container_read_encoded(std::istream& is);

}  // namespace intzip
