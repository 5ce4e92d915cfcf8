#include "intzip/delta.h"

#include <gtest/gtest.h>

#include <random>
#include <stdexcept>
#include <vector>

#include "testutil.h"

namespace intzip {
namespace {

TEST(DeltaScalar, PrefixSumExample) {
  std::vector<uint32_t> deltas = {1, 3, 9};
  delta_decode_scalar(deltas);
  EXPECT_EQ(deltas, (std::vector<uint32_t>{1, 4, 13}));
}

TEST(DeltaScalar, EncodeExample) {
  std::vector<uint32_t> values = {5, 7, 7, 10};
  delta_encode_scalar(values);
  EXPECT_EQ(values, (std::vector<uint32_t>{5, 2, 0, 3}));
  delta_decode_scalar(values);
  EXPECT_EQ(values, (std::vector<uint32_t>{5, 7, 7, 10}));
}

TEST(DeltaScalar, FirstValueIsItsOwnDelta) {
  std::vector<uint32_t> values = {42};
  delta_encode_scalar(values);
  EXPECT_EQ(values[0], 42u);
  std::vector<uint32_t> empty;
  delta_encode_scalar(empty);
  delta_decode_scalar(empty);
  EXPECT_TRUE(empty.empty());
}

TEST(DeltaScalar, DecreasingInputThrows) {
  std::vector<uint32_t> values = {5, 4};
  EXPECT_THROW(delta_encode_scalar(values), std::invalid_argument);
}

TEST(DeltaStride4, FirstFourUnmodified) {
  std::vector<uint32_t> values = {1, 2, 3, 4, 10, 12, 13, 14};
  delta_encode_stride4(values);
  EXPECT_EQ(values, (std::vector<uint32_t>{1, 2, 3, 4, 9, 10, 10, 10}));
  delta_decode_stride4(values);
  EXPECT_EQ(values, (std::vector<uint32_t>{1, 2, 3, 4, 10, 12, 13, 14}));
}

TEST(DeltaStride4, ShortInputsAreUntouched) {
  for (size_t len = 0; len <= 4; ++len) {
    std::vector<uint32_t> values;
    for (size_t i = 0; i < len; ++i) values.push_back(7 * (i + 1));
    std::vector<uint32_t> original = values;
    delta_encode_stride4(values);
    EXPECT_EQ(values, original);
    delta_decode_stride4(values);
    EXPECT_EQ(values, original);
  }
}

TEST(DeltaStride4, DecreasingAtStrideThrows) {
  // Decreasing against the value four back, though adjacent values increase.
  std::vector<uint32_t> values = {10, 20, 30, 40, 9, 21, 31, 41};
  EXPECT_THROW(delta_encode_stride4(values), std::invalid_argument);
}

TEST(DeltaRoundtrip, RandomArraysBothModes) {
  std::mt19937_64 rng(11);
  for (int rep = 0; rep < 200; ++rep) {
    const size_t len = rng() % 300;
    const std::vector<uint32_t> original =
        testing::random_sorted(rng, len, 1u << (rng() % 20));
    for (DeltaMode mode : {DeltaMode::scalar, DeltaMode::stride4}) {
      std::vector<uint32_t> values = original;
      delta_encode(mode, values);
      delta_decode(mode, values);
      ASSERT_EQ(values, original);
    }
  }
}

TEST(DeltaStride4, DecodeMatchesScalarReference) {
  std::mt19937_64 rng(12);
  for (int rep = 0; rep < 100; ++rep) {
    const size_t len = 5 + rng() % 200;
    std::vector<uint32_t> deltas(len);
    for (auto& d : deltas) d = static_cast<uint32_t>(rng() % 1000);
    std::vector<uint32_t> expected = deltas;
    for (size_t i = 4; i < len; ++i) expected[i] += expected[i - 4];
    std::vector<uint32_t> actual = deltas;
    delta_decode_stride4(actual);
    ASSERT_EQ(actual, expected);
  }
}

TEST(DeltaModes, ZeroDeltasSurviveRoundtrip) {
  std::vector<uint32_t> values(100, 123456);
  for (DeltaMode mode : {DeltaMode::scalar, DeltaMode::stride4}) {
    std::vector<uint32_t> copy = values;
    delta_encode(mode, copy);
    delta_decode(mode, copy);
    EXPECT_EQ(copy, values);
  }
}

}  // namespace
}  // namespace intzip
