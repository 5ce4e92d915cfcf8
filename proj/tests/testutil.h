#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

namespace intzip::testing {

// Reference packer, independent of the library implementation: writes value
// i's bits k = 0..b-1 directly into position i*b + k of a flat bit string,
// where bit p of the string is bit p%32 of word p/32.
inline std::vector<uint32_t> ref_pack_bits(std::span<const uint32_t> values,
                                           uint32_t b) {
  std::vector<uint32_t> words((values.size() * b + 31) / 32, 0);
  for (size_t i = 0; i < values.size(); ++i)
    for (uint32_t k = 0; k < b; ++k)
      if (values[i] >> k & 1) {
        const size_t p = i * b + k;
        words[p / 32] |= uint32_t{1} << (p % 32);
      }
  return words;
}

inline std::vector<uint32_t> ref_unpack_bits(std::span<const uint32_t> words,
                                             uint32_t b, size_t count) {
  std::vector<uint32_t> values(count, 0);
  for (size_t i = 0; i < count; ++i)
    for (uint32_t k = 0; k < b; ++k) {
      const size_t p = i * b + k;
      if (words[p / 32] >> (p % 32) & 1) values[i] |= uint32_t{1} << k;
    }
  return values;
}

// Reference vertical layout: four round-robin lanes (lane j = values j, j+4,
// ...), each packed as a scalar group, interleaved word by word.
inline std::vector<uint32_t> ref_pack_vertical(
    std::span<const uint32_t> values, uint32_t b) {
  std::vector<uint32_t> out(4 * static_cast<size_t>(b), 0);
  for (int j = 0; j < 4; ++j) {
    std::vector<uint32_t> lane(32);
    for (int i = 0; i < 32; ++i) lane[i] = values[4 * i + j];
    const std::vector<uint32_t> packed = ref_pack_bits(lane, b);
    for (uint32_t i = 0; i < b; ++i) out[4 * i + j] = packed[i];
  }
  return out;
}

// Nondecreasing array of `len` values: deltas drawn from [0, max_delta],
// clamped at the 32-bit ceiling (trailing zero deltas if the sum saturates).
inline std::vector<uint32_t> random_sorted(std::mt19937_64& rng, size_t len,
                                           uint32_t max_delta) {
  std::vector<uint32_t> values(len);
  uint64_t acc = 0;
  for (size_t i = 0; i < len; ++i) {
    acc += rng() % (static_cast<uint64_t>(max_delta) + 1);
    if (acc > 0xFFFFFFFFull) acc = 0xFFFFFFFFull;
    values[i] = static_cast<uint32_t>(acc);
  }
  return values;
}

inline std::vector<uint32_t> random_block(std::mt19937_64& rng, size_t len,
                                          uint32_t bit_width) {
  std::vector<uint32_t> values(len);
  const uint64_t mask =
      bit_width >= 32 ? 0xFFFFFFFFull : (uint64_t{1} << bit_width) - 1;
  for (auto& v : values) v = static_cast<uint32_t>(rng() & mask);
  return values;
}

}  // namespace intzip::testing
