#include "intzip/codec_basic.h"

#include <gtest/gtest.h>

#include <bit>
#include <random>
#include <stdexcept>
#include <vector>

#include "intzip/errors.h"
#include "testutil.h"

namespace intzip {
namespace {

TEST(Vbyte, Goldens) {
  std::vector<uint8_t> out;
  vbyte_encode(std::vector<uint32_t>{0}, out);
  EXPECT_EQ(out, (std::vector<uint8_t>{0x80}));
  out.clear();
  vbyte_encode(std::vector<uint32_t>{127}, out);
  EXPECT_EQ(out, (std::vector<uint8_t>{0xFF}));
  out.clear();
  vbyte_encode(std::vector<uint32_t>{128}, out);
  EXPECT_EQ(out, (std::vector<uint8_t>{0x00, 0x81}));
  out.clear();
  vbyte_encode(std::vector<uint32_t>{200}, out);
  EXPECT_EQ(out, (std::vector<uint8_t>{0x48, 0x81}));
  out.clear();
  vbyte_encode(std::vector<uint32_t>{0xFFFFFFFFu}, out);
  EXPECT_EQ(out, (std::vector<uint8_t>{0x7F, 0x7F, 0x7F, 0x7F, 0x8F}));
}

TEST(Vbyte, SizeFormula) {
  std::mt19937_64 rng(21);
  for (int rep = 0; rep < 1000; ++rep) {
    const auto v = static_cast<uint32_t>(rng() >> (rng() % 33 + 31));
    std::vector<uint8_t> out;
    vbyte_encode(std::vector<uint32_t>{v}, out);
    const unsigned bits = v == 0 ? 1 : std::bit_width(v);
    EXPECT_EQ(out.size(), (bits + 6) / 7) << v;
  }
}

TEST(Vbyte, RoundtripRandom) {
  std::mt19937_64 rng(22);
  for (int rep = 0; rep < 100; ++rep) {
    std::vector<uint32_t> values(rng() % 500);
    for (auto& v : values) v = static_cast<uint32_t>(rng() >> (rng() % 32));
    std::vector<uint8_t> bytes;
    vbyte_encode(values, bytes);
    std::vector<uint32_t> back(values.size());
    EXPECT_EQ(vbyte_decode(bytes, back.data(), back.size()), bytes.size());
    ASSERT_EQ(back, values);
  }
}

TEST(Vbyte, DecodeErrors) {
  uint32_t out[4];
  // Truncated: continuation byte then end of stream.
  EXPECT_THROW(vbyte_decode(std::vector<uint8_t>{0x01}, out, 1), CorruptError);
  // Six bytes without a terminator in the first five.
  EXPECT_THROW(vbyte_decode(
                   std::vector<uint8_t>{0x01, 0x01, 0x01, 0x01, 0x01, 0x81},
                   out, 1),
               CorruptError);
  // Five-byte value with payload beyond 32 bits (2^35).
  EXPECT_THROW(
      vbyte_decode(std::vector<uint8_t>{0x00, 0x00, 0x00, 0x00, 0x80 | 0x10},
                   out, 1),
      CorruptError);
  // The largest 32-bit value still decodes.
  EXPECT_EQ(vbyte_decode(std::vector<uint8_t>{0x7F, 0x7F, 0x7F, 0x7F, 0x8F},
                         out, 1),
            5u);
  EXPECT_EQ(out[0], 0xFFFFFFFFu);
}

// Independent reference decoder for varint-G8IU, written from the format
// description: per 9-byte group, walk the data bytes accumulating
// little-endian; descriptor bit 0 marks an integer's final byte.
size_t ref_g8iu_decode(const std::vector<uint8_t>& bytes, uint32_t* out,
                       size_t count) {
  size_t pos = 0;
  size_t done = 0;
  while (done < count) {
    if (pos + 9 > bytes.size()) throw CorruptError("truncated");
    const uint8_t desc = bytes[pos];
    uint64_t acc = 0;
    unsigned len = 0;
    for (unsigned k = 0; k < 8 && done < count; ++k) {
      acc |= static_cast<uint64_t>(bytes[pos + 1 + k]) << (8 * len);
      ++len;
      if ((desc & (1u << k)) == 0) {
        if (len > 4) throw CorruptError("too long");
        out[done++] = static_cast<uint32_t>(acc);
        acc = 0;
        len = 0;
      }
    }
    pos += 9;
  }
  return pos;
}

TEST(G8iu, DescriptorGolden) {
  std::vector<uint8_t> out;
  g8iu_encode(std::vector<uint32_t>{1u << 15, 1u << 23, 1u << 7}, out);
  const std::vector<uint8_t> expected = {0xCD, 0x00, 0x80, 0x00, 0x00,
                                         0x80, 0x80, 0x00, 0x00};
  EXPECT_EQ(out, expected);
}

TEST(G8iu, EightOnesGolden) {
  std::vector<uint8_t> out;
  g8iu_encode(std::vector<uint32_t>(8, 1), out);
  const std::vector<uint8_t> expected = {0x00, 1, 1, 1, 1, 1, 1, 1, 1};
  EXPECT_EQ(out, expected);
}

TEST(G8iu, IntegersNeverStraddleGroups) {
  // Two 3-byte values then a 4-byte value: the third cannot fit in the first
  // group's remaining 2 bytes, so it starts the second group.
  const std::vector<uint32_t> values = {1u << 16, 1u << 16, 1u << 24};
  std::vector<uint8_t> out;
  g8iu_encode(values, out);
  ASSERT_EQ(out.size(), 18u);
  std::vector<uint32_t> back(values.size());
  EXPECT_EQ(g8iu_decode(out, back.data(), back.size()), 18u);
  EXPECT_EQ(back, values);
}

TEST(G8iu, RoundtripMatchesReferenceDecoder) {
  std::mt19937_64 rng(23);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<uint32_t> values(1 + rng() % 300);
    for (auto& v : values) v = static_cast<uint32_t>(rng() >> (rng() % 32));
    std::vector<uint8_t> bytes;
    g8iu_encode(values, bytes);
    ASSERT_EQ(bytes.size() % 9, 0u);
    std::vector<uint32_t> a(values.size()), b(values.size());
    const size_t consumed = g8iu_decode(bytes, a.data(), a.size());
    const size_t ref_consumed = ref_g8iu_decode(bytes, b.data(), b.size());
    EXPECT_EQ(consumed, ref_consumed);
    ASSERT_EQ(a, values);
    ASSERT_EQ(b, values);
  }
}

TEST(G8iu, GroupsHoldTwoToEightIntegers) {
  std::mt19937_64 rng(24);
  std::vector<uint32_t> values(2000);
  for (auto& v : values) v = static_cast<uint32_t>(rng() >> (rng() % 32));
  std::vector<uint8_t> bytes;
  g8iu_encode(values, bytes);
  size_t decoded_before = 0;
  std::vector<uint32_t> sink(values.size());
  for (size_t g = 0; g + 9 < bytes.size(); g += 9) {
    // Count integers completed in this group from its descriptor.
    unsigned ints = 0;
    for (unsigned k = 0; k < 8; ++k)
      if ((bytes[g] & (1u << k)) == 0) ++ints;
    EXPECT_GE(ints, 2u) << "group at byte " << g;
    EXPECT_LE(ints, 8u);
    decoded_before += ints;
  }
  ASSERT_LE(decoded_before, values.size());
}

TEST(G8iu, DecodeErrors) {
  uint32_t out[4];
  // Descriptor claims a five-byte integer (bits 0..3 set, bit 4 clear).
  std::vector<uint8_t> bad = {0x0F, 1, 2, 3, 4, 5, 0, 0, 0};
  EXPECT_THROW(g8iu_decode(bad, out, 1), CorruptError);
  // Truncated group.
  std::vector<uint8_t> shortg = {0x00, 1, 2};
  EXPECT_THROW(g8iu_decode(shortg, out, 1), CorruptError);
}

TEST(Simple8b, TableMatchesCapacityTimesWidth) {
  for (const auto& row : kSimple8bTable)
    EXPECT_LE(row.ints_coded * row.bits_per_int, 60u);
  EXPECT_EQ(kSimple8bTable[0].ints_coded, 240u);
  EXPECT_EQ(kSimple8bTable[15].bits_per_int, 60u);
}

TEST(Simple8b, ZeroRunGolden) {
  std::vector<uint32_t> out;
  simple8b_encode(std::span<const uint32_t>(std::vector<uint32_t>(240, 0)),
                  out);
  // One word, selector 0: both halves zero.
  EXPECT_EQ(out, (std::vector<uint32_t>{0, 0}));
  std::vector<uint32_t> back(240, 7);
  EXPECT_EQ(simple8b_decode(out, back.data(), back.size()), 2u);
  for (uint32_t v : back) EXPECT_EQ(v, 0u);
}

TEST(Simple8b, SingleValueGoldens) {
  std::vector<uint32_t> out;
  simple8b_encode(std::span<const uint32_t>(std::vector<uint32_t>{1}), out);
  // Selector 2 (60 one-bit values), value 1 at bit 4.
  EXPECT_EQ(out, (std::vector<uint32_t>{0x12, 0}));

  out.clear();
  const uint64_t big = (uint64_t{1} << 60) - 1;
  simple8b_encode(std::span<const uint64_t>(std::vector<uint64_t>{big}), out);
  // Selector 15 (one 60-bit value).
  ASSERT_EQ(out.size(), 2u);
  const uint64_t word = out[0] | static_cast<uint64_t>(out[1]) << 32;
  EXPECT_EQ(word & 0xF, 15u);
  EXPECT_EQ(word >> 4, big);
}

TEST(Simple8b, SixtyBooleansInOneWord) {
  std::mt19937_64 rng(25);
  std::vector<uint32_t> values(60);
  for (auto& v : values) v = rng() & 1;
  values[0] = 1;  // not an all-zero run
  std::vector<uint32_t> out;
  simple8b_encode(std::span<const uint32_t>(values), out);
  ASSERT_EQ(out.size(), 2u);
  EXPECT_EQ(out[0] & 0xF, 2u);
  std::vector<uint32_t> back(60);
  EXPECT_EQ(simple8b_decode(out, back.data(), 60), 2u);
  EXPECT_EQ(back, values);
}

TEST(Simple8b, ValueTooWideThrows) {
  std::vector<uint32_t> out;
  const std::vector<uint64_t> values = {uint64_t{1} << 60};
  EXPECT_THROW(
      simple8b_encode(std::span<const uint64_t>(values), out),
      std::invalid_argument);
}

TEST(Simple8b, DecodeTruncationThrows) {
  std::vector<uint32_t> out;
  simple8b_encode(std::span<const uint32_t>(std::vector<uint32_t>{1, 2, 3}),
                  out);
  // The single selector-3 word supplies up to its 30-value capacity, so
  // asking for a few extra values succeeds (they decode as zeros); only a
  // count beyond the stream's capacity is a truncation.
  std::vector<uint32_t> back(31);
  EXPECT_EQ(simple8b_decode(out, back.data(), 4), out.size());
  EXPECT_EQ(back[3], 0u);
  EXPECT_THROW(simple8b_decode(out, back.data(), 31), CorruptError);
  std::vector<uint32_t> halfword(out.begin(), out.begin() + 1);
  EXPECT_THROW(simple8b_decode(halfword, back.data(), 1), CorruptError);
}

TEST(Simple8b, RoundtripRandomAndDeterministic) {
  std::mt19937_64 rng(26);
  for (int rep = 0; rep < 200; ++rep) {
    std::vector<uint32_t> values(rng() % 700);
    for (auto& v : values) {
      const int shift = static_cast<int>(rng() % 34);
      v = shift >= 32 ? 0 : static_cast<uint32_t>(rng() >> shift >> 1);
    }
    std::vector<uint32_t> out1, out2;
    simple8b_encode(std::span<const uint32_t>(values), out1);
    simple8b_encode(std::span<const uint32_t>(values), out2);
    ASSERT_EQ(out1, out2);
    std::vector<uint32_t> back(values.size());
    ASSERT_EQ(simple8b_decode(out1, back.data(), back.size()), out1.size());
    ASSERT_EQ(back, values);
  }
}

TEST(Simple8b, ZeroRunsUseOnlyExactZeroSelectors) {
  // 120 zeros then a one: a selector-1 word (120 zeros) then a data word.
  std::vector<uint32_t> values(121, 0);
  values[120] = 1;
  std::vector<uint32_t> out;
  simple8b_encode(std::span<const uint32_t>(values), out);
  ASSERT_EQ(out.size(), 4u);
  EXPECT_EQ(out[0] & 0xF, 1u);
  EXPECT_EQ(out[2] & 0xF, 2u);
  std::vector<uint32_t> back(values.size());
  EXPECT_EQ(simple8b_decode(out, back.data(), back.size()), 4u);
  EXPECT_EQ(back, values);
}

}  // namespace
}  // namespace intzip
