#pragma once

#include <cstdint>
#include <span>

namespace intzip {

// Differential coding over sorted 32-bit integers, in place.
//
// Scalar mode replaces x_i with x_i - x_{i-1}; the first value is left as is
// (its delta is the value itself, i.e. the difference from an implicit 0).
// Stride-4 mode replaces x_i with x_i - x_{i-4} and leaves the first four
// values unmodified; successive differences at distance four have no
// serial dependence, so recovery vectorizes as four independent prefix sums.
//
// Encoding walks indices in decreasing order and decoding in increasing
// order, so both run in place on the same buffer.  Equal adjacent values
// (delta 0) are permitted; a decreasing input is a contract violation and
// throws std::invalid_argument (the buffer contents are unspecified after a
// throw).

enum class DeltaMode { scalar, stride4 };

void delta_encode_scalar(std::span<uint32_t> values);
void delta_decode_scalar(std::span<uint32_t> values);
void delta_encode_stride4(std::span<uint32_t> values);
void delta_decode_stride4(std::span<uint32_t> values);

void delta_encode(DeltaMode mode, std::span<uint32_t> values);
void delta_decode(DeltaMode mode, std::span<uint32_t> values);

}  // namespace intzip
