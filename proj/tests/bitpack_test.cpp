#include "intzip/bitpack.h"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "testutil.h"

namespace intzip {
namespace {

using testing::random_block;
using testing::ref_pack_bits;
using testing::ref_pack_vertical;

TEST(MaxBitwidth, Basics) {
  EXPECT_EQ(max_bitwidth({}), 0u);
  const uint32_t zeros[3] = {0, 0, 0};
  EXPECT_EQ(max_bitwidth(zeros), 0u);
  const uint32_t one[1] = {1};
  EXPECT_EQ(max_bitwidth(one), 1u);
  const uint32_t mixed[3] = {3, 4, 1};
  EXPECT_EQ(max_bitwidth(mixed), 3u);
  const uint32_t top[2] = {5, 0x80000000u};
  EXPECT_EQ(max_bitwidth(top), 32u);
}

TEST(PackScalar32, NibbleWord) {
  // Values 1..8 at width 4 fill one word low-bits-first.
  std::vector<uint32_t> values(32, 0);
  for (uint32_t i = 0; i < 8; ++i) values[i] = i + 1;
  uint32_t out[4] = {~0u, ~0u, ~0u, ~0u};
  pack_scalar32(values.data(), 4, out);
  EXPECT_EQ(out[0], 0x87654321u);
  EXPECT_EQ(out[1], 0u);
  EXPECT_EQ(out[2], 0u);
  EXPECT_EQ(out[3], 0u);

  uint32_t back[32];
  unpack_scalar32(out, 4, back);
  for (int i = 0; i < 32; ++i) EXPECT_EQ(back[i], values[i]);
}

TEST(PackScalar32, WordBoundarySplitsLowBitsFirst) {
  // At width 5, value 6 covers bit positions 30..34: its low two bits land in
  // the high bits of word 0 and the high three bits in the low bits of word 1.
  std::vector<uint32_t> values(32, 0);
  values[6] = 0b10110;
  uint32_t out[5] = {};
  pack_scalar32(values.data(), 5, out);
  EXPECT_EQ(out[0], 0b10u << 30);
  EXPECT_EQ(out[1], 0b101u);
}

TEST(PackScalar32, MatchesBitStringOracle) {
  std::mt19937_64 rng(1);
  for (uint32_t b = 0; b <= 32; ++b) {
    for (int rep = 0; rep < 50; ++rep) {
      const std::vector<uint32_t> values = random_block(rng, 32, b);
      const std::vector<uint32_t> expected = ref_pack_bits(values, b);
      ASSERT_EQ(expected.size(), packed_words_scalar32(b));
      std::vector<uint32_t> out(packed_words_scalar32(b), 0);
      pack_scalar32(values.data(), b, out.data());
      ASSERT_EQ(out, expected) << "width " << b;
      std::vector<uint32_t> back(32);
      unpack_scalar32(out.data(), b, back.data());
      ASSERT_EQ(back, values) << "width " << b;
    }
  }
}

TEST(PackScalar32, MaskedKeepsLowBits) {
  std::mt19937_64 rng(2);
  for (uint32_t b = 1; b < 32; ++b) {
    const std::vector<uint32_t> values = random_block(rng, 32, 32);
    std::vector<uint32_t> masked = values;
    for (auto& v : masked) v &= (uint32_t{1} << b) - 1;
    std::vector<uint32_t> a(packed_words_scalar32(b), 0);
    std::vector<uint32_t> c(packed_words_scalar32(b), 0);
    pack_scalar32_masked(values.data(), b, a.data());
    pack_scalar32(masked.data(), b, c.data());
    ASSERT_EQ(a, c) << "width " << b;
  }
}

TEST(PackScalar32, RejectsOverwideValues) {
  std::vector<uint32_t> values(32, 0);
  values[17] = 8;  // needs 4 bits
  uint32_t out[4];
  EXPECT_THROW(pack_scalar32(values.data(), 3, out), std::invalid_argument);
  EXPECT_NO_THROW(pack_scalar32(values.data(), 4, out));
}

TEST(PackScalar32, RejectsWidthOver32) {
  std::vector<uint32_t> values(32, 0);
  uint32_t out[33];
  EXPECT_THROW(pack_scalar32(values.data(), 33, out), std::invalid_argument);
  EXPECT_THROW(unpack_scalar32(out, 33, values.data()),
               std::invalid_argument);
}

TEST(PackVertical128, MatchesLaneOracle) {
  std::mt19937_64 rng(3);
  for (uint32_t b = 0; b <= 32; ++b) {
    for (int rep = 0; rep < 20; ++rep) {
      const std::vector<uint32_t> values = random_block(rng, 128, b);
      const std::vector<uint32_t> expected = ref_pack_vertical(values, b);
      ASSERT_EQ(expected.size(), packed_words_vertical128(b));
      std::vector<uint32_t> out(packed_words_vertical128(b), 0);
      pack_vertical128(values.data(), b, out.data());
      ASSERT_EQ(out, expected) << "width " << b;
      std::vector<uint32_t> back(128);
      unpack_vertical128(out.data(), b, back.data());
      ASSERT_EQ(back, values) << "width " << b;
    }
  }
}

TEST(PackVertical128, MaskedKeepsLowBits) {
  std::mt19937_64 rng(4);
  for (uint32_t b = 1; b < 32; ++b) {
    const std::vector<uint32_t> values = random_block(rng, 128, 32);
    std::vector<uint32_t> masked = values;
    for (auto& v : masked) v &= (uint32_t{1} << b) - 1;
    std::vector<uint32_t> a(packed_words_vertical128(b), 0);
    std::vector<uint32_t> c(packed_words_vertical128(b), 0);
    pack_vertical128_masked(values.data(), b, a.data());
    pack_vertical128(masked.data(), b, c.data());
    ASSERT_EQ(a, c) << "width " << b;
  }
}

TEST(PackVertical128, RejectsOverwideValuesAndBadWidth) {
  std::vector<uint32_t> values(128, 0);
  values[100] = 1u << 20;
  std::vector<uint32_t> out(4 * 33);
  EXPECT_THROW(pack_vertical128(values.data(), 20, out.data()),
               std::invalid_argument);
  EXPECT_NO_THROW(pack_vertical128(values.data(), 21, out.data()));
  EXPECT_THROW(pack_vertical128(values.data(), 33, out.data()),
               std::invalid_argument);
}

TEST(PackedWords, Sizes) {
  EXPECT_EQ(packed_words_scalar32(0), 0u);
  EXPECT_EQ(packed_words_scalar32(7), 7u);
  EXPECT_EQ(packed_words_scalar32(32), 32u);
  EXPECT_EQ(packed_words_vertical128(0), 0u);
  EXPECT_EQ(packed_words_vertical128(7), 28u);
  EXPECT_EQ(packed_words_vertical128(32), 128u);
}

}  // namespace
}  // namespace intzip
