#pragma once

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "intzip/delta.h"

namespace intzip {

// Arrays are split into chunks of at most 2^16 integers.  Each chunk is
// independently decodable: differential coding restarts at the chunk start
// (the first value's delta is the value itself), so no base value is stored.
inline constexpr uint32_t kChunkSize = uint32_t{1} << 16;

// A codec compresses a buffer of deltas into 32-bit words.  The core format
// covers a multiple of block_multiple() integers; the pipeline below codes
// the remaining n mod block_multiple() deltas with Variable Byte, appended
// after the core payload.
class Codec {
 public:
  virtual ~Codec() = default;

  const std::string& name() const { return name_; }
  uint32_t block_multiple() const { return block_multiple_; }
  DeltaMode delta_mode() const { return delta_mode_; }

  // Appends the core encoding of deltas[0..count) to `out`.  `count` must be
  // a multiple of block_multiple() (std::invalid_argument otherwise).
  virtual void encode_deltas(const uint32_t* deltas, size_t count,
                             std::vector<uint32_t>& out) const = 0;

  // Decodes exactly `count` deltas from `words` into `out` and returns the
  // number of words consumed, which is exactly the number encode_deltas
  // produced for the same data.  Throws CorruptError on malformed input.
  virtual size_t decode_deltas(std::span<const uint32_t> words, uint32_t* out,
                               size_t count) const = 0;

 protected:
  Codec(std::string name, uint32_t block_multiple, DeltaMode delta_mode)
      : name_(std::move(name)),
        block_multiple_(block_multiple),
        delta_mode_(delta_mode) {}

 private:
  std::string name_;
  uint32_t block_multiple_;
  DeltaMode delta_mode_;
};

struct Chunk {
  uint32_t original_length = 0;  // 1..kChunkSize
  std::vector<uint32_t> payload;
};

// Full pipeline over a sorted array: chunking, differential coding in the
// codec's delta mode, core coding, Variable Byte remainder.  encode_array
// accepts any nondecreasing values (strictly increasing in normal datasets;
// zero deltas are handled).  decode_array verifies that each chunk consumes
// its payload exactly and throws CorruptError otherwise.
std::vector<Chunk> encode_array(const Codec& codec,
                                std::span<const uint32_t> values);
std::vector<uint32_t> decode_array(const Codec& codec,
                                   std::span<const Chunk> chunks);
// Overload that reuses `out`'s capacity; `out` is resized to the decoded
// length.  Lets hot loops decode without reallocating per call.
void decode_array(const Codec& codec, std::span<const Chunk> chunks,
                  std::vector<uint32_t>& out);

// Registry.  Base names: vbyte, g8iu, simple8b, bp32, simdbp128, pfor,
// simplepfor, fastpfor, simdfastpfor.  A "-s4" suffix selects stride-4
// differential coding (e.g. "simdbp128-s4").
std::unique_ptr<Codec> make_codec(std::string_view name);
std::vector<std::string> codec_names();

}  // namespace intzip
