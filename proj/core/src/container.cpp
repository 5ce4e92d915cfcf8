#include "intzip/container.h"

#include <algorithm>
#include <istream>
#include <ostream>

#include "intzip/errors.h"
#include "intzip/wordbytes.h"

namespace intzip {
namespace {

constexpr uint32_t kMaxCodecNameLength = 256;

void put_u32(std::ostream& os, uint32_t v) {
  const char bytes[4] = {static_cast<char>(v), static_cast<char>(v >> 8),
                         static_cast<char>(v >> 16),
                         static_cast<char>(v >> 24)};
  os.write(bytes, 4);
}

uint32_t get_u32(std::istream& is) {
  unsigned char bytes[4];
  if (!is.read(reinterpret_cast<char*>(bytes), 4))
    throw CorruptError("container: truncated");
  return static_cast<uint32_t>(bytes[0]) |
         static_cast<uint32_t>(bytes[1]) << 8 |
         static_cast<uint32_t>(bytes[2]) << 16 |
         static_cast<uint32_t>(bytes[3]) << 24;
}

void put_words(std::ostream& os, std::span<const uint32_t> words) {
  // The host is little-endian (asserted in wordbytes.h), so the in-memory
  // words are already the on-disk representation.
  os.write(reinterpret_cast<const char*>(words.data()), 4 * words.size());
}

// Reads `count` words in bounded slabs so a corrupt count fails at EOF
// instead of over-allocating.
void get_words(std::istream& is, size_t count, std::vector<uint32_t>& out) {
  constexpr size_t kSlabWords = size_t{1} << 18;
  out.clear();
  while (count > 0) {
    const size_t step = std::min(count, kSlabWords);
    const size_t old = out.size();
    out.resize(old + step);
    if (!is.read(reinterpret_cast<char*>(out.data() + old), 4 * step))
      throw CorruptError("container: truncated payload");
    count -= step;
  }
}

void write_preamble(std::ostream& os, std::string_view codec_name,
                    size_t array_count) {
  os.write(kContainerMagic.data(), kContainerMagic.size());
  put_u32(os, static_cast<uint32_t>(codec_name.size()));
  os.write(codec_name.data(),
           static_cast<std::streamsize>(codec_name.size()));
  put_u32(os, static_cast<uint32_t>(array_count));
}

struct Preamble {
  std::string codec_name;
  uint32_t array_count;
};

Preamble read_preamble(std::istream& is) {
  std::array<char, 8> magic;
  if (!is.read(magic.data(), magic.size()))
    throw CorruptError("container: truncated");
  if (magic != kContainerMagic) throw CorruptError("container: bad magic");
  const uint32_t name_len = get_u32(is);
  if (name_len == 0 || name_len > kMaxCodecNameLength)
    throw CorruptError("container: bad codec name length");
  std::string name(name_len, '\0');
  if (!is.read(name.data(), name_len))
    throw CorruptError("container: truncated");
  return {std::move(name), get_u32(is)};
}

}  // namespace

void container_write_raw(std::ostream& os,
                         std::span<const std::vector<uint32_t>> arrays) {
  write_preamble(os, kRawCodecName, arrays.size());
  for (const auto& values : arrays) {
    put_u32(os, static_cast<uint32_t>(values.size()));
    put_u32(os, static_cast<uint32_t>(values.size()));
    put_words(os, values);
  }
}

std::vector<std::vector<uint32_t>> container_read_raw(std::istream& is) {
  const Preamble preamble = read_preamble(is);
  if (preamble.codec_name != kRawCodecName)
    throw CorruptError("container: expected RAW data, found codec " +
                       preamble.codec_name);
  // Grow per successful read; a corrupt array count then fails at EOF
  // instead of allocating count empty arrays up front.
  std::vector<std::vector<uint32_t>> arrays;
  for (uint32_t i = 0; i < preamble.array_count; ++i) {
    const uint32_t original_length = get_u32(is);
    const uint32_t word_count = get_u32(is);
    if (word_count != original_length)
      throw CorruptError("container: RAW word count mismatch");
    arrays.emplace_back();
    get_words(is, word_count, arrays.back());
  }
  return arrays;
}

void container_write_encoded(std::ostream& os, std::string_view codec_name,
                             std::span<const std::vector<Chunk>> arrays) {
  write_preamble(os, codec_name, arrays.size());
  for (const auto& chunks : arrays) {
    uint64_t original_length = 0;
    uint64_t word_count = 0;
    for (const Chunk& chunk : chunks) {
      original_length += chunk.original_length;
      word_count += 2 + chunk.payload.size();
    }
    put_u32(os, static_cast<uint32_t>(original_length));
    put_u32(os, static_cast<uint32_t>(word_count));
    for (const Chunk& chunk : chunks) {
      put_u32(os, chunk.original_length);
      put_u32(os, static_cast<uint32_t>(chunk.payload.size()));
      put_words(os, chunk.payload);
    }
  }
}

EncodedContainer container_read_encoded(std::istream& is) {
  Preamble preamble = read_preamble(is);
  if (preamble.codec_name == kRawCodecName)
    throw CorruptError("container: expected encoded data, found RAW");
  EncodedContainer result;
  result.codec_name = std::move(preamble.codec_name);
  std::vector<uint32_t> words;
  for (uint32_t i = 0; i < preamble.array_count; ++i) {
    std::vector<Chunk> chunks;
    const uint32_t original_length = get_u32(is);
    const uint32_t word_count = get_u32(is);
    get_words(is, word_count, words);
    uint64_t remaining_values = original_length;
    size_t pos = 0;
    while (pos < words.size()) {
      if (pos + 2 > words.size())
        throw CorruptError("container: truncated chunk record");
      Chunk chunk;
      chunk.original_length = words[pos];
      const uint32_t payload_words = words[pos + 1];
      pos += 2;
      if (chunk.original_length == 0 || chunk.original_length > kChunkSize ||
          chunk.original_length > remaining_values)
        throw CorruptError("container: bad chunk length");
      if (payload_words > words.size() - pos)
        throw CorruptError("container: bad chunk word count");
      chunk.payload.assign(words.begin() + pos,
                           words.begin() + pos + payload_words);
      pos += payload_words;
      remaining_values -= chunk.original_length;
      chunks.push_back(std::move(chunk));
    }
    if (remaining_values != 0)
      throw CorruptError("container: array length mismatch");
    result.arrays.push_back(std::move(chunks));
  }
  return result;
}

}  // namespace intzip
