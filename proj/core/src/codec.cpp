#include "intzip/codec.h"

#include <algorithm>
#include <stdexcept>

#include "intzip/codec_basic.h"
#include "intzip/codec_binpack.h"
#include "intzip/codec_patched.h"
#include "intzip/errors.h"
#include "intzip/wordbytes.h"

namespace intzip {

std::vector<Chunk> encode_array(const Codec& codec,
                                std::span<const uint32_t> values) {
  std::vector<Chunk> chunks;
  chunks.reserve((values.size() + kChunkSize - 1) / kChunkSize);
  std::vector<uint32_t> scratch;
  std::vector<uint8_t> remainder_bytes;
  const uint32_t multiple = codec.block_multiple();
  for (size_t offset = 0; offset < values.size(); offset += kChunkSize) {
    const size_t len = std::min<size_t>(kChunkSize, values.size() - offset);
    scratch.assign(values.begin() + offset, values.begin() + offset + len);
    delta_encode(codec.delta_mode(), scratch);
    const size_t core = len / multiple * multiple;
    Chunk chunk;
    chunk.original_length = static_cast<uint32_t>(len);
    codec.encode_deltas(scratch.data(), core, chunk.payload);
    if (core < len) {
      remainder_bytes.clear();
      vbyte_encode({scratch.data() + core, len - core}, remainder_bytes);
      append_bytes_as_words(remainder_bytes, chunk.payload);
    }
    chunks.push_back(std::move(chunk));
  }
  return chunks;
}

void decode_array(const Codec& codec, std::span<const Chunk> chunks,
                  std::vector<uint32_t>& out) {
  size_t total = 0;
  for (const Chunk& chunk : chunks) {
    if (chunk.original_length == 0 || chunk.original_length > kChunkSize)
      throw CorruptError("chunk: bad original length");
    total += chunk.original_length;
  }
  out.resize(total);
  const uint32_t multiple = codec.block_multiple();
  size_t offset = 0;
  for (const Chunk& chunk : chunks) {
    const size_t len = chunk.original_length;
    const size_t core = len / multiple * multiple;
    // Pass 1: reconstruct the chunk's deltas.
    size_t consumed =
        codec.decode_deltas(chunk.payload, out.data() + offset, core);
    if (core < len) {
      const size_t rem_bytes =
          vbyte_decode(word_bytes(std::span<const uint32_t>(chunk.payload)
                                      .subspan(consumed)),
                       out.data() + offset + core, len - core);
      consumed += (rem_bytes + 3) / 4;
    }
    if (consumed != chunk.payload.size())
      throw CorruptError("chunk: payload size mismatch");
    // Pass 2: prefix sums in place.
    delta_decode(codec.delta_mode(), {out.data() + offset, len});
    offset += len;
  }
}

std::vector<uint32_t> decode_array(const Codec& codec,
                                   std::span<const Chunk> chunks) {
  std::vector<uint32_t> out;
  decode_array(codec, chunks, out);
  return out;
}

namespace {

struct RegistryEntry {
  const char* base_name;
  std::unique_ptr<Codec> (*factory)(DeltaMode);
};

constexpr RegistryEntry kRegistry[] = {
    {"vbyte", &make_vbyte_codec},
    {"g8iu", &make_g8iu_codec},
    {"simple8b", &make_simple8b_codec},
    {"bp32", &make_bp32_codec},
    {"simdbp128", &make_simdbp128_codec},
    {"pfor", &make_pfor_codec},
    {"simplepfor", &make_simplepfor_codec},
    {"fastpfor", &make_fastpfor_codec},
    {"simdfastpfor", &make_simdfastpfor_codec},
};

}  // namespace

std::unique_ptr<Codec> make_codec(std::string_view name) {
  std::string_view base = name;
  DeltaMode mode = DeltaMode::scalar;
  if (base.ends_with("-s4")) {
    base.remove_suffix(3);
    mode = DeltaMode::stride4;
  }
  for (const auto& entry : kRegistry)
    if (base == entry.base_name) return entry.factory(mode);
  throw std::invalid_argument("unknown codec: " + std::string(name));
}

std::vector<std::string> codec_names() {
  std::vector<std::string> names;
  names.reserve(std::size(kRegistry) * 2);
  for (const auto& entry : kRegistry) {
    names.emplace_back(entry.base_name);
    names.emplace_back(std::string(entry.base_name) + "-s4");
  }
  return names;
}

}  // namespace intzip
