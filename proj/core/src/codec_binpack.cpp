#include "intzip/codec_binpack.h"

#include <algorithm>
#include <stdexcept>

#include "intzip/bitpack.h"
#include "intzip/errors.h"

namespace intzip {
namespace {

void check_block_count(size_t count) {
  if (count % 128 != 0)
    throw std::invalid_argument("binary packing: count must be a multiple of 128");
}

class Bp32Codec final : public Codec {
 public:
  explicit Bp32Codec(DeltaMode mode)
      : Codec(mode == DeltaMode::scalar ? "bp32" : "bp32-s4", 128, mode) {}

  void encode_deltas(const uint32_t* deltas, size_t count,
                     std::vector<uint32_t>& out) const override {
    check_block_count(count);
    for (size_t base = 0; base < count; base += 128) {
      uint32_t descriptor = 0;
      uint32_t widths[4];
      for (int g = 0; g < 4; ++g) {
        widths[g] = max_bitwidth({deltas + base + 32 * g, 32});
        descriptor |= widths[g] << (8 * g);
      }
      out.push_back(descriptor);
      for (int g = 0; g < 4; ++g) {
        const size_t old = out.size();
        out.resize(old + packed_words_scalar32(widths[g]));
        pack_scalar32(deltas + base + 32 * g, widths[g], out.data() + old);
      }
    }
  }

  size_t decode_deltas(std::span<const uint32_t> words, uint32_t* out,
                       size_t count) const override {
    check_block_count(count);
    size_t pos = 0;
    for (size_t base = 0; base < count; base += 128) {
      if (pos >= words.size())
        throw CorruptError("bp32: truncated descriptor");
      const uint32_t descriptor = words[pos++];
      for (int g = 0; g < 4; ++g) {
        const uint32_t width = (descriptor >> (8 * g)) & 0xFF;
        if (width > 32) throw CorruptError("bp32: width byte exceeds 32");
        if (pos + width > words.size())
          throw CorruptError("bp32: truncated payload");
        unpack_scalar32(words.data() + pos, width, out + base + 32 * g);
        pos += width;
      }
    }
    return pos;
  }
};

class SimdBp128Codec final : public Codec {
 public:
  explicit SimdBp128Codec(DeltaMode mode)
      : Codec(mode == DeltaMode::scalar ? "simdbp128" : "simdbp128-s4", 128,
              mode) {}

  static constexpr size_t kGroupsPerMeta = 16;

  void encode_deltas(const uint32_t* deltas, size_t count,
                     std::vector<uint32_t>& out) const override {
    check_block_count(count);
    for (size_t base = 0; base < count; base += kGroupsPerMeta * 128) {
      const size_t groups =
          std::min(kGroupsPerMeta, (count - base) / 128);
      uint8_t widths[kGroupsPerMeta] = {0};
      for (size_t g = 0; g < groups; ++g)
        widths[g] = static_cast<uint8_t>(
            max_bitwidth({deltas + base + 128 * g, 128}));
      for (int w = 0; w < 4; ++w)
        out.push_back(static_cast<uint32_t>(widths[4 * w]) |
                      static_cast<uint32_t>(widths[4 * w + 1]) << 8 |
                      static_cast<uint32_t>(widths[4 * w + 2]) << 16 |
                      static_cast<uint32_t>(widths[4 * w + 3]) << 24);
      for (size_t g = 0; g < groups; ++g) {
        const size_t old = out.size();
        out.resize(old + packed_words_vertical128(widths[g]));
        pack_vertical128(deltas + base + 128 * g, widths[g],
                         out.data() + old);
      }
    }
  }

  size_t decode_deltas(std::span<const uint32_t> words, uint32_t* out,
                       size_t count) const override {
    check_block_count(count);
    size_t pos = 0;
    for (size_t base = 0; base < count; base += kGroupsPerMeta * 128) {
      const size_t groups =
          std::min(kGroupsPerMeta, (count - base) / 128);
      if (pos + 4 > words.size())
        throw CorruptError("simdbp128: truncated descriptor");
      uint8_t widths[kGroupsPerMeta];
      for (size_t g = 0; g < kGroupsPerMeta; ++g)
        widths[g] =
            static_cast<uint8_t>((words[pos + g / 4] >> (8 * (g % 4))) & 0xFF);
      pos += 4;
      for (size_t g = 0; g < groups; ++g) {
        const uint32_t width = widths[g];
        if (width > 32)
          throw CorruptError("simdbp128: width byte exceeds 32");
        if (pos + packed_words_vertical128(width) > words.size())
          throw CorruptError("simdbp128: truncated payload");
        unpack_vertical128(words.data() + pos, width, out + base + 128 * g);
        pos += packed_words_vertical128(width);
      }
    }
    return pos;
  }
};

}  // namespace

std::unique_ptr<Codec> make_bp32_codec(DeltaMode mode) {
  return std::make_unique<Bp32Codec>(mode);
}
std::unique_ptr<Codec> make_simdbp128_codec(DeltaMode mode) {
  return std::make_unique<SimdBp128Codec>(mode);
}

}  // namespace intzip
