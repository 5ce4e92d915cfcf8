#include "intzip/codec_basic.h"

#include <array>
#include <bit>
#include <cstring>
#include <stdexcept>
#include <utility>

#include "intzip/errors.h"
#include "intzip/wordbytes.h"

namespace intzip {

// --- Variable Byte ----------------------------------------------------------

void vbyte_encode(std::span<const uint32_t> values,
                  std::vector<uint8_t>& out) {
  for (uint32_t v : values) {
    while (v >= 128) {
      out.push_back(static_cast<uint8_t>(v & 0x7F));
      v >>= 7;
    }
    out.push_back(static_cast<uint8_t>(v) | 0x80);
  }
}

size_t vbyte_decode(std::span<const uint8_t> bytes, uint32_t* out,
                    size_t count) {
  size_t pos = 0;
  for (size_t i = 0; i < count; ++i) {
    uint32_t v = 0;
    uint32_t shift = 0;
    for (;;) {
      if (pos >= bytes.size())
        throw CorruptError("vbyte: truncated stream");
      const uint8_t b = bytes[pos++];
      if (b & 0x80) {
        if (shift == 28 && (b & 0x70))
          throw CorruptError("vbyte: value exceeds 32 bits");
        v |= static_cast<uint32_t>(b & 0x7F) << shift;
        break;
      }
      if (shift == 28)
        throw CorruptError("vbyte: integer longer than 5 bytes");
      v |= static_cast<uint32_t>(b) << shift;
      shift += 7;
    }
    out[i] = v;
  }
  return pos;
}

// --- varint-G8IU -------------------------------------------------------------

namespace {
inline unsigned g8iu_byte_len(uint32_t v) {
  return v == 0 ? 1u : (static_cast<unsigned>(std::bit_width(v)) + 7) / 8;
}
}  // namespace

void g8iu_encode(std::span<const uint32_t> values, std::vector<uint8_t>& out) {
  size_t i = 0;
  const size_t n = values.size();
  while (i < n) {
    const size_t desc_pos = out.size();
    out.push_back(0);
    uint8_t desc = 0xFF;  // unused bytes keep bit 1
    unsigned used = 0;
    while (i < n) {
      const uint32_t v = values[i];
      const unsigned len = g8iu_byte_len(v);
      if (used + len > 8) break;
      for (unsigned k = 0; k < len; ++k)
        out.push_back(static_cast<uint8_t>(v >> (8 * k)));
      used += len;
      desc = static_cast<uint8_t>(desc & ~(1u << (used - 1)));
      ++i;
    }
    for (; used < 8; ++used) out.push_back(0);
    out[desc_pos] = desc;
  }
}

namespace {

// Decode plan for one descriptor byte: where each integer that ends inside
// the group starts and how many bytes it spans.  `bad` marks descriptors
// whose spacing would make an integer wider than 4 bytes.
struct alignas(32) G8iuPlan {
  uint8_t n = 0;
  uint8_t bad = 0;
  uint8_t off[8] = {};
  uint8_t len[8] = {};
};

constexpr std::array<G8iuPlan, 256> make_g8iu_plans() {
  std::array<G8iuPlan, 256> plans{};
  for (uint32_t desc = 0; desc < 256; ++desc) {
    G8iuPlan& plan = plans[desc];
    uint32_t start = 0;
    for (uint32_t k = 0; k < 8; ++k) {
      if (desc & (1u << k)) continue;  // bit set: byte k does not end an int
      const uint32_t len = k + 1 - start;
      if (len > 4) plan.bad = 1;
      plan.off[plan.n] = static_cast<uint8_t>(start);
      plan.len[plan.n] = static_cast<uint8_t>(len > 4 ? 4 : len);
      ++plan.n;
      start = k + 1;
    }
  }
  return plans;
}

constexpr std::array<G8iuPlan, 256> kG8iuPlans = make_g8iu_plans();

constexpr uint32_t kG8iuMask[5] = {0, 0xFFu, 0xFFFFu, 0xFFFFFFu, 0xFFFFFFFFu};

}  // namespace

size_t g8iu_decode(std::span<const uint8_t> bytes, uint32_t* out,
                   size_t count) {
  size_t pos = 0;
  size_t done = 0;
  // Fast path: each integer is read with one unaligned 4-byte load and
  // masked to its length, so the group needs 4 readable bytes past its
  // highest start offset (up to byte 11) and room for 8 outputs.
  while (done + 8 <= count && pos + 12 <= bytes.size()) {
    const G8iuPlan& plan = kG8iuPlans[bytes[pos]];
    if (plan.bad) throw CorruptError("g8iu: integer longer than 4 bytes");
    const uint8_t* data = bytes.data() + pos + 1;
    for (uint32_t k = 0; k < plan.n; ++k) {
      uint32_t v;
      std::memcpy(&v, data + plan.off[k], 4);
      out[done + k] = v & kG8iuMask[plan.len[k]];
    }
    done += plan.n;
    pos += 9;
  }
  while (done < count) {
    if (pos + 9 > bytes.size()) throw CorruptError("g8iu: truncated group");
    const uint8_t desc = bytes[pos];
    const uint8_t* data = bytes.data() + pos + 1;
    uint32_t acc = 0;
    unsigned acc_len = 0;
    for (unsigned k = 0; k < 8 && done < count; ++k) {
      if (acc_len < 4) acc |= static_cast<uint32_t>(data[k]) << (8 * acc_len);
      ++acc_len;
      if (!(desc & (1u << k))) {
        if (acc_len > 4)
          throw CorruptError("g8iu: integer longer than 4 bytes");
        out[done++] = acc;
        acc = 0;
        acc_len = 0;
      }
    }
    // Bytes left accumulating at the group boundary are padding; integers
    // never straddle groups.
    pos += 9;
  }
  return pos;
}

// --- Simple-8b ----------------------------------------------------------------

namespace {

template <typename T>
void simple8b_encode_impl(std::span<const T> values,
                          std::vector<uint32_t>& out) {
  size_t i = 0;
  const size_t n = values.size();
  while (i < n) {
    bool placed = false;
    for (uint32_t sel = 0; sel < 16; ++sel) {
      const auto [cap, bits] = kSimple8bTable[sel];
      const size_t take = std::min<size_t>(cap, n - i);
      bool fits = true;
      if (bits == 0) {
        for (size_t k = 0; k < take; ++k)
          if (values[i + k] != 0) {
            fits = false;
            break;
          }
      } else {
        const uint64_t limit = uint64_t{1} << bits;
        for (size_t k = 0; k < take; ++k)
          if (static_cast<uint64_t>(values[i + k]) >= limit) {
            fits = false;
            break;
          }
      }
      if (!fits) continue;
      uint64_t word = sel;
      if (bits != 0)
        for (size_t k = 0; k < take; ++k)
          word |= static_cast<uint64_t>(values[i + k]) << (4 + k * bits);
      out.push_back(static_cast<uint32_t>(word));
      out.push_back(static_cast<uint32_t>(word >> 32));
      i += take;
      placed = true;
      break;
    }
    if (!placed)
      throw std::invalid_argument("simple8b: value needs more than 60 bits");
  }
}

// Adjacent 32-bit outputs are written two at a time through one 64-bit
// store; decoding is store-port bound otherwise.
template <uint32_t Bits, size_t P>
inline void simple8b_store_pair(uint64_t word, uint32_t* out) {
  constexpr uint64_t mask = (uint64_t{1} << Bits) - 1;
  const uint64_t pair = ((word >> (4 + 2 * P * Bits)) & mask) |
                        (((word >> (4 + (2 * P + 1) * Bits)) & mask) << 32);
  std::memcpy(out + 2 * P, &pair, 8);
}

template <uint32_t Bits, size_t... P>
inline void simple8b_store_pairs(uint64_t word, uint32_t* out,
                                 std::index_sequence<P...>) {
  (simple8b_store_pair<Bits, P>(word, out), ...);
}

// One unrolled routine per selector ("bulk unpacking"): the count and width
// are compile-time constants so every shift folds to an immediate.
template <typename T, uint32_t Sel>
size_t simple8b_unpack_word(uint64_t word, T* out, size_t remaining) {
  constexpr uint32_t cap = kSimple8bTable[Sel].ints_coded;
  constexpr uint32_t bits = kSimple8bTable[Sel].bits_per_int;
  const size_t take = remaining < cap ? remaining : cap;
  if constexpr (bits == 0) {
    std::memset(out, 0, take * sizeof(T));
  } else {
    constexpr uint64_t mask = (uint64_t{1} << bits) - 1;
    if (take == cap) {
      if constexpr (sizeof(T) == 4 && cap >= 2) {
        simple8b_store_pairs<bits>(word, out,
                                   std::make_index_sequence<cap / 2>{});
        if constexpr (cap % 2 != 0)
          out[cap - 1] =
              static_cast<T>((word >> (4 + (cap - 1) * bits)) & mask);
      } else {
        [&]<size_t... K>(std::index_sequence<K...>) {
          ((out[K] = static_cast<T>((word >> (4 + K * bits)) & mask)), ...);
        }(std::make_index_sequence<cap>{});
      }
    } else {
      for (size_t k = 0; k < take; ++k)
        out[k] = static_cast<T>((word >> (4 + k * bits)) & mask);
    }
  }
  return take;
}

template <typename T>
size_t simple8b_decode_impl(std::span<const uint32_t> words, T* out,
                            size_t count) {
  using WordFn = size_t (*)(uint64_t, T*, size_t);
  static constexpr auto table = []<size_t... Sel>(std::index_sequence<Sel...>) {
    return std::array<WordFn, 16>{{&simple8b_unpack_word<T, uint32_t{Sel}>...}};
  }(std::make_index_sequence<16>{});

  size_t pos = 0;
  size_t done = 0;
  // Fast path: with at least 60 output slots free, every data-carrying
  // selector can write its full capacity, so the dispatch inlines into a
  // switch with no per-value bounds checks.  The zero-run selectors still
  // clip to the remaining count (their capacities exceed 60).
  while (done + 60 <= count && pos + 2 <= words.size()) {
    uint64_t word;
    std::memcpy(&word, words.data() + pos, sizeof word);
    pos += 2;
    switch (word & 0xF) {
#define INTZIP_S8B_CASE(SEL)                                             \
  case SEL:                                                              \
    done += simple8b_unpack_word<T, SEL>(                                \
        word, out + done,                                                \
        kSimple8bTable[SEL].bits_per_int == 0                            \
            ? count - done                                               \
            : size_t{kSimple8bTable[SEL].ints_coded});                   \
    break;
      INTZIP_S8B_CASE(0)
      INTZIP_S8B_CASE(1)
      INTZIP_S8B_CASE(2)
      INTZIP_S8B_CASE(3)
      INTZIP_S8B_CASE(4)
      INTZIP_S8B_CASE(5)
      INTZIP_S8B_CASE(6)
      INTZIP_S8B_CASE(7)
      INTZIP_S8B_CASE(8)
      INTZIP_S8B_CASE(9)
      INTZIP_S8B_CASE(10)
      INTZIP_S8B_CASE(11)
      INTZIP_S8B_CASE(12)
      INTZIP_S8B_CASE(13)
      INTZIP_S8B_CASE(14)
      INTZIP_S8B_CASE(15)
#undef INTZIP_S8B_CASE
    }
  }
  while (done < count) {
    if (pos + 2 > words.size())
      throw CorruptError("simple8b: stream exhausted before count");
    const uint64_t word =
        words[pos] | (static_cast<uint64_t>(words[pos + 1]) << 32);
    pos += 2;
    done += table[word & 0xF](word, out + done, count - done);
  }
  return pos;
}

}  // namespace

void simple8b_encode(std::span<const uint64_t> values,
                     std::vector<uint32_t>& out) {
  simple8b_encode_impl<uint64_t>(values, out);
}

void simple8b_encode(std::span<const uint32_t> values,
                     std::vector<uint32_t>& out) {
  simple8b_encode_impl<uint32_t>(values, out);
}

size_t simple8b_decode(std::span<const uint32_t> words, uint64_t* out,
                       size_t count) {
  return simple8b_decode_impl<uint64_t>(words, out, count);
}

size_t simple8b_decode(std::span<const uint32_t> words, uint32_t* out,
                       size_t count) {
  return simple8b_decode_impl<uint32_t>(words, out, count);
}

// --- Codec wrappers -----------------------------------------------------------

namespace {

class ByteStreamCodec : public Codec {
 public:
  using Codec::Codec;

  void encode_deltas(const uint32_t* deltas, size_t count,
                     std::vector<uint32_t>& out) const final {
    std::vector<uint8_t> bytes;
    bytes.reserve(count + count / 4 + 16);
    encode_bytes({deltas, count}, bytes);
    append_bytes_as_words(bytes, out);
  }

  size_t decode_deltas(std::span<const uint32_t> words, uint32_t* out,
                       size_t count) const final {
    const size_t consumed = decode_bytes(word_bytes(words), out, count);
    return (consumed + 3) / 4;
  }

 protected:
  virtual void encode_bytes(std::span<const uint32_t> values,
                            std::vector<uint8_t>& out) const = 0;
  virtual size_t decode_bytes(std::span<const uint8_t> bytes, uint32_t* out,
                              size_t count) const = 0;
};

class VbyteCodec final : public ByteStreamCodec {
 public:
  explicit VbyteCodec(DeltaMode mode)
      : ByteStreamCodec(mode == DeltaMode::scalar ? "vbyte" : "vbyte-s4", 1,
                        mode) {}

 protected:
  void encode_bytes(std::span<const uint32_t> values,
                    std::vector<uint8_t>& out) const override {
    vbyte_encode(values, out);
  }
  size_t decode_bytes(std::span<const uint8_t> bytes, uint32_t* out,
                      size_t count) const override {
    return vbyte_decode(bytes, out, count);
  }
};

class G8iuCodec final : public ByteStreamCodec {
 public:
  explicit G8iuCodec(DeltaMode mode)
      : ByteStreamCodec(mode == DeltaMode::scalar ? "g8iu" : "g8iu-s4", 1,
                        mode) {}

 protected:
  void encode_bytes(std::span<const uint32_t> values,
                    std::vector<uint8_t>& out) const override {
    g8iu_encode(values, out);
  }
  size_t decode_bytes(std::span<const uint8_t> bytes, uint32_t* out,
                      size_t count) const override {
    return g8iu_decode(bytes, out, count);
  }
};

class Simple8bCodec final : public Codec {
 public:
  explicit Simple8bCodec(DeltaMode mode)
      : Codec(mode == DeltaMode::scalar ? "simple8b" : "simple8b-s4", 1,
              mode) {}

  void encode_deltas(const uint32_t* deltas, size_t count,
                     std::vector<uint32_t>& out) const override {
    simple8b_encode(std::span<const uint32_t>{deltas, count}, out);
  }

  size_t decode_deltas(std::span<const uint32_t> words, uint32_t* out,
                       size_t count) const override {
    return simple8b_decode(words, out, count);
  }
};

}  // namespace

std::unique_ptr<Codec> make_vbyte_codec(DeltaMode mode) {
  return std::make_unique<VbyteCodec>(mode);
}
std::unique_ptr<Codec> make_g8iu_codec(DeltaMode mode) {
  return std::make_unique<G8iuCodec>(mode);
}
std::unique_ptr<Codec> make_simple8b_codec(DeltaMode mode) {
  return std::make_unique<Simple8bCodec>(mode);
}

}  // namespace intzip
