#pragma once

#include <bit>
#include <cstdint>
#include <cstring>
#include <span>
#include <vector>

namespace intzip {

// All formats in this library are defined over little-endian 32-bit words.
// Byte streams embedded in word payloads occupy the words in little-endian
// byte order (byte i of the stream is byte i%4 of word i/4) and are
// zero-padded to a 4-byte boundary.
static_assert(std::endian::native == std::endian::little,
              "intzip requires a little-endian target");

inline std::span<const uint8_t> word_bytes(std::span<const uint32_t> words) {
  return {reinterpret_cast<const uint8_t*>(words.data()), words.size() * 4};
}

inline void append_bytes_as_words(std::span<const uint8_t> bytes,
                                  std::vector<uint32_t>& out) {
  const size_t words = (bytes.size() + 3) / 4;
  const size_t old = out.size();
  out.resize(old + words, 0);
  std::memcpy(out.data() + old, bytes.data(), bytes.size());
}

}  // namespace intzip
