#include "intzip/codec_patched.h"

#include <algorithm>
#include <bit>
#include <cstring>
#include <stdexcept>

#include "intzip/bitpack.h"
#include "intzip/codec_basic.h"
#include "intzip/errors.h"
#include "intzip/wordbytes.h"

namespace intzip {

Histogram33 histogram_of_widths(std::span<const uint32_t> values) {
  Histogram33 h;
  for (uint32_t v : values) ++h.counts[std::bit_width(v)];
  return h;
}

uint64_t fastpfor_cost_bits(const Histogram33& hist, uint32_t block_len,
                            uint32_t b) {
  uint32_t maxbits = 0;
  for (uint32_t w = 0; w <= 32; ++w)
    if (hist.counts[w]) maxbits = w;
  uint64_t exceptions = 0;
  for (uint32_t w = b + 1; w <= 32; ++w) exceptions += hist.counts[w];
  uint64_t cost = static_cast<uint64_t>(b) * block_len;
  if (exceptions > 0) cost += (8 + maxbits - b) * exceptions;
  return cost;
}

WidthChoice fastpfor_choose_width(const Histogram33& hist,
                                  uint32_t block_len) {
  uint32_t maxbits = 0;
  for (uint32_t w = 0; w <= 32; ++w)
    if (hist.counts[w]) maxbits = w;
  uint32_t best_b = 0;
  uint64_t best = ~uint64_t{0};
  for (uint32_t b = 0; b <= maxbits; ++b) {
    const uint64_t cost = fastpfor_cost_bits(hist, block_len, b);
    if (cost <= best) {  // <=: ties go to the larger width (fewer exceptions)
      best = cost;
      best_b = b;
    }
  }
  return {best_b, maxbits};
}

namespace {

void check_page_count(size_t count) {
  if (count % 128 != 0)
    throw std::invalid_argument("patched codec: count must be a multiple of 128");
  if (count > kChunkSize)
    throw std::invalid_argument("patched codec: page exceeds 65536 integers");
}

}  // namespace

uint32_t pfor_choose_width(std::span<const uint32_t> sample) {
  if (sample.empty()) return 1;
  // wider[w] starts as the number of values of width exactly w, then becomes
  // the number of values of width w or more via a suffix sum.
  std::array<uint64_t, 34> wider{};
  for (const uint32_t v : sample) ++wider[std::bit_width(v)];
  for (int w = 32; w >= 0; --w) wider[w] += wider[w + 1];
  const double n = static_cast<double>(sample.size());
  uint32_t best_b = 32;
  double best = 32.0;  // width 32 never needs exceptions
  for (uint32_t b = 31; b >= 1; --b) {
    double cost;
    if (wider[b + 1] == 0) {
      cost = b;
    } else {
      const double e = static_cast<double>(wider[b + 1]) / n;
      const double capacity = static_cast<double>(uint64_t{1} << b);
      const double em = e * capacity;  // expected exceptions per 2^b values
      const double rate = em > 1.0 ? e + e / (em - 1.0) : 1.0 / capacity;
      cost = b + 32.0 * rate;
    }
    if (cost < best) {  // strict: ties go to the larger width
      best = cost;
      best_b = b;
    }
  }
  return best_b;
}

void pfor_encode_page(uint32_t b, std::span<const uint32_t> deltas,
                      std::vector<uint32_t>& out) {
  if (b < 1 || b > 32)
    throw std::invalid_argument("pfor: width must be in 1..32");
  check_page_count(deltas.size());
  if (deltas.empty()) return;
  out.push_back(b);
  std::vector<uint32_t> table;
  std::vector<uint32_t> positions;
  uint32_t slots[128];
  for (size_t base = 0; base < deltas.size(); base += 128) {
    const uint32_t* v = deltas.data() + base;
    positions.clear();
    if (b < 32) {
      const uint32_t step = uint32_t{1} << b;
      int last = -1;
      for (int i = 0; i < 128; ++i) {
        if (v[i] >> b) {
          if (last >= 0)
            while (static_cast<uint32_t>(i - last - 1) >= step) {
              last += step;
              positions.push_back(static_cast<uint32_t>(last));
            }
          positions.push_back(static_cast<uint32_t>(i));
          last = i;
        }
      }
      if (last >= 0)
        while (last + static_cast<int>(step) < 128) {
          last += step;
          positions.push_back(static_cast<uint32_t>(last));
        }
    }
    const uint32_t marker =
        positions.empty()
            ? 128u
            : positions.front() | static_cast<uint32_t>(table.size()) << 16;
    out.push_back(marker);
    std::memcpy(slots, v, sizeof slots);
    for (size_t k = 0; k < positions.size(); ++k) {
      const uint32_t p = positions[k];
      table.push_back(v[p]);
      const uint32_t next = k + 1 < positions.size() ? positions[k + 1] : 128u;
      slots[p] = next - p - 1;  // offset to the next exception, minus one
    }
    const size_t old = out.size();
    out.resize(old + 4 * static_cast<size_t>(b));
    for (int g = 0; g < 4; ++g)
      pack_scalar32(slots + 32 * g, b, out.data() + old + b * g);
  }
  out.push_back(static_cast<uint32_t>(table.size()));
  out.insert(out.end(), table.begin(), table.end());
}

namespace {

// --- PFOR ---------------------------------------------------------------------

class PforCodec final : public Codec {
 public:
  explicit PforCodec(DeltaMode mode)
      : Codec(mode == DeltaMode::scalar ? "pfor" : "pfor-s4", 128, mode) {}

  void encode_deltas(const uint32_t* deltas, size_t count,
                     std::vector<uint32_t>& out) const override {
    check_page_count(count);
    if (count == 0) return;
    pfor_encode_page(pfor_choose_width({deltas, count}), {deltas, count}, out);
  }

  size_t decode_deltas(std::span<const uint32_t> words, uint32_t* out,
                       size_t count) const override {
    check_page_count(count);
    if (count == 0) return 0;
    if (words.empty()) throw CorruptError("pfor: truncated page");
    const uint32_t b = words[0];
    if (b < 1 || b > 32) throw CorruptError("pfor: bad page width");
    const size_t blocks = count / 128;
    const size_t table_pos = 1 + blocks * (1 + 4 * static_cast<size_t>(b));
    if (table_pos + 1 > words.size())
      throw CorruptError("pfor: truncated page");
    const uint32_t exc_count = words[table_pos];
    if (table_pos + 1 + exc_count > words.size())
      throw CorruptError("pfor: truncated exception table");
    const uint32_t* table = words.data() + table_pos + 1;
    size_t pos = 1;
    for (size_t k = 0; k < blocks; ++k) {
      const uint32_t marker = words[pos++];
      uint32_t* o = out + 128 * k;
      for (int g = 0; g < 4; ++g) {
        unpack_scalar32(words.data() + pos, b, o + 32 * g);
        pos += b;
      }
      const uint32_t first = marker & 0xFFFF;
      if (first > 128) throw CorruptError("pfor: bad exception position");
      uint32_t index = marker >> 16;
      uint64_t p = first;
      while (p < 128) {
        if (index >= exc_count)
          throw CorruptError("pfor: exception table exhausted");
        const uint64_t next = p + o[p] + 1;
        o[p] = table[index++];
        p = next;
      }
    }
    return table_pos + 1 + exc_count;
  }
};

// --- FastPFOR family ------------------------------------------------------------

enum class PatchStorage {
  simple8b,         // one Simple-8b stream of high bits
  scalar_arrays,    // 32 width-indexed arrays, scalar groups of 32
  vertical_arrays,  // 32 width-indexed arrays, vertical groups of 128
};

struct BlockMeta {
  uint8_t b = 0;
  uint8_t maxbits = 0;
  uint8_t c = 0;
  const uint8_t* positions = nullptr;
};

class FastPforCodec final : public Codec {
 public:
  FastPforCodec(std::string name, DeltaMode mode, PatchStorage storage)
      : Codec(std::move(name), 128, mode), storage_(storage) {}

  void encode_deltas(const uint32_t* deltas, size_t count,
                     std::vector<uint32_t>& out) const override {
    check_page_count(count);
    if (count == 0) return;
    const size_t page = out.size();
    const bool vertical = storage_ == PatchStorage::vertical_arrays;
    out.push_back(0);  // patched below: offset of the byte-array length word
    std::vector<uint8_t> byte_array;
    std::vector<uint32_t> simple_highs;
    std::array<std::vector<uint32_t>, 33> width_arrays;
    for (size_t base = 0; base < count; base += 128) {
      const uint32_t* v = deltas + base;
      const auto [b, maxbits] =
          fastpfor_choose_width(histogram_of_widths({v, 128}), 128);
      byte_array.push_back(static_cast<uint8_t>(b));
      byte_array.push_back(static_cast<uint8_t>(maxbits));
      if (maxbits > b) {
        uint8_t positions[128];
        uint32_t c = 0;
        for (uint32_t i = 0; i < 128; ++i)
          if (v[i] >> b) positions[c++] = static_cast<uint8_t>(i);
        byte_array.push_back(static_cast<uint8_t>(c));
        byte_array.insert(byte_array.end(), positions, positions + c);
        for (uint32_t k = 0; k < c; ++k) {
          const uint32_t high = v[positions[k]] >> b;
          if (storage_ == PatchStorage::simple8b)
            simple_highs.push_back(high);
          else
            width_arrays[maxbits - b].push_back(high);
        }
      }
      const size_t old = out.size();
      out.resize(old + 4 * static_cast<size_t>(b));
      if (vertical) {
        pack_vertical128_masked(v, b, out.data() + old);
      } else {
        for (int g = 0; g < 4; ++g)
          pack_scalar32_masked(v + 32 * g, b, out.data() + old + b * g);
      }
    }
    out[page] = static_cast<uint32_t>(out.size() - page);
    out.push_back(static_cast<uint32_t>(byte_array.size()));
    append_bytes_as_words(byte_array, out);
    if (storage_ == PatchStorage::simple8b) {
      simple8b_encode(std::span<const uint32_t>(simple_highs), out);
      return;
    }
    uint32_t bitset = 0;
    for (uint32_t w = 1; w <= 32; ++w)
      if (!width_arrays[w].empty()) bitset |= uint32_t{1} << (w - 1);
    out.push_back(bitset);
    for (uint32_t w = 1; w <= 32; ++w) {
      auto& values = width_arrays[w];
      if (values.empty()) continue;
      out.push_back(static_cast<uint32_t>(values.size()));
      const uint32_t group = vertical ? 128 : 32;
      if (vertical)  // keep packed data 16-byte aligned within the page
        while ((out.size() - page) % 4 != 0) out.push_back(0);
      values.resize((values.size() + group - 1) / group * group, 0);
      const size_t old = out.size();
      if (vertical) {
        out.resize(old + values.size() / 128 * packed_words_vertical128(w));
        for (size_t g = 0; g < values.size() / 128; ++g)
          pack_vertical128(values.data() + 128 * g, w,
                           out.data() + old + g * packed_words_vertical128(w));
      } else {
        out.resize(old + values.size() / 32 * packed_words_scalar32(w));
        for (size_t g = 0; g < values.size() / 32; ++g)
          pack_scalar32(values.data() + 32 * g, w, out.data() + old + g * w);
      }
    }
  }

  size_t decode_deltas(std::span<const uint32_t> words, uint32_t* out,
                       size_t count) const override {
    check_page_count(count);
    if (count == 0) return 0;
    const bool vertical = storage_ == PatchStorage::vertical_arrays;
    const size_t blocks = count / 128;
    if (words.empty()) throw CorruptError("fastpfor: truncated page");
    const size_t ba_offset = words[0];
    if (ba_offset < 1 || ba_offset >= words.size())
      throw CorruptError("fastpfor: bad byte-array offset");
    const size_t ba_len = words[ba_offset];
    const size_t ba_words = (ba_len + 3) / 4;
    if (ba_offset + 1 + ba_words > words.size())
      throw CorruptError("fastpfor: truncated byte array");
    const uint8_t* bytes =
        reinterpret_cast<const uint8_t*>(words.data() + ba_offset + 1);

    std::vector<BlockMeta> metas(blocks);
    size_t bpos = 0;
    size_t total_exceptions = 0;
    for (auto& meta : metas) {
      if (bpos + 2 > ba_len)
        throw CorruptError("fastpfor: truncated block metadata");
      meta.b = bytes[bpos];
      meta.maxbits = bytes[bpos + 1];
      bpos += 2;
      if (meta.b > 32 || meta.maxbits > 32 || meta.b > meta.maxbits)
        throw CorruptError("fastpfor: bad block widths");
      if (meta.maxbits > meta.b) {
        if (bpos >= ba_len)
          throw CorruptError("fastpfor: truncated block metadata");
        meta.c = bytes[bpos++];
        if (meta.c == 0) throw CorruptError("fastpfor: empty exception list");
        if (bpos + meta.c > ba_len)
          throw CorruptError("fastpfor: truncated exception positions");
        meta.positions = bytes + bpos;
        for (uint32_t i = 0; i < meta.c; ++i)
          if (meta.positions[i] >= 128)
            throw CorruptError("fastpfor: exception position out of range");
        bpos += meta.c;
        total_exceptions += meta.c;
      }
    }
    if (bpos != ba_len)
      throw CorruptError("fastpfor: byte array length mismatch");

    // Recover all exception high bits up front.
    size_t pos = ba_offset + 1 + ba_words;
    std::vector<uint32_t> simple_highs;
    std::array<std::vector<uint32_t>, 33> width_arrays;
    if (storage_ == PatchStorage::simple8b) {
      simple_highs.resize(total_exceptions);
      pos += simple8b_decode(words.subspan(pos), simple_highs.data(),
                             total_exceptions);
    } else {
      if (pos >= words.size())
        throw CorruptError("fastpfor: missing exception bitset");
      const uint32_t bitset = words[pos++];
      for (uint32_t w = 1; w <= 32; ++w) {
        if (!(bitset & (uint32_t{1} << (w - 1)))) continue;
        if (pos >= words.size())
          throw CorruptError("fastpfor: truncated exception array");
        const uint32_t n = words[pos++];
        const uint32_t group = vertical ? 128 : 32;
        if (vertical)
          while (pos % 4 != 0) ++pos;
        const size_t padded = (static_cast<size_t>(n) + group - 1) / group * group;
        const size_t nwords = vertical
                                  ? padded / 128 * packed_words_vertical128(w)
                                  : padded / 32 * packed_words_scalar32(w);
        if (pos + nwords > words.size())
          throw CorruptError("fastpfor: truncated exception array");
        auto& values = width_arrays[w];
        values.resize(padded);
        if (vertical) {
          for (size_t g = 0; g < padded / 128; ++g)
            unpack_vertical128(words.data() + pos +
                                   g * packed_words_vertical128(w),
                               w, values.data() + 128 * g);
        } else {
          for (size_t g = 0; g < padded / 32; ++g)
            unpack_scalar32(words.data() + pos + g * w, w,
                            values.data() + 32 * g);
        }
        values.resize(n);
        pos += nwords;
      }
    }

    // Unpack the blocks and patch the exceptions in.
    size_t packed = 1;
    size_t simple_cursor = 0;
    std::array<size_t, 33> cursors{};
    for (size_t k = 0; k < blocks; ++k) {
      const BlockMeta meta = metas[k];
      if (packed + 4 * static_cast<size_t>(meta.b) > ba_offset)
        throw CorruptError("fastpfor: packed blocks overrun byte array");
      uint32_t* o = out + 128 * k;
      if (vertical) {
        unpack_vertical128(words.data() + packed, meta.b, o);
      } else {
        for (int g = 0; g < 4; ++g)
          unpack_scalar32(words.data() + packed + meta.b * g, meta.b,
                          o + 32 * g);
      }
      packed += 4 * static_cast<size_t>(meta.b);
      if (meta.c) {
        const uint32_t w = meta.maxbits - meta.b;
        for (uint32_t i = 0; i < meta.c; ++i) {
          uint32_t high;
          if (storage_ == PatchStorage::simple8b) {
            high = simple_highs[simple_cursor++];
          } else {
            auto& values = width_arrays[w];
            if (cursors[w] >= values.size())
              throw CorruptError("fastpfor: exception array exhausted");
            high = values[cursors[w]++];
          }
          o[meta.positions[i]] |= high << meta.b;
        }
      }
    }
    if (packed != ba_offset)
      throw CorruptError("fastpfor: packed area size mismatch");
    return pos;
  }

 private:
  PatchStorage storage_;
};

}  // namespace

std::unique_ptr<Codec> make_pfor_codec(DeltaMode mode) {
  return std::make_unique<PforCodec>(mode);
}
std::unique_ptr<Codec> make_simplepfor_codec(DeltaMode mode) {
  return std::make_unique<FastPforCodec>(
      mode == DeltaMode::scalar ? "simplepfor" : "simplepfor-s4", mode,
      PatchStorage::simple8b);
}
std::unique_ptr<Codec> make_fastpfor_codec(DeltaMode mode) {
  return std::make_unique<FastPforCodec>(
      mode == DeltaMode::scalar ? "fastpfor" : "fastpfor-s4", mode,
      PatchStorage::scalar_arrays);
}
std::unique_ptr<Codec> make_simdfastpfor_codec(DeltaMode mode) {
  return std::make_unique<FastPforCodec>(
      mode == DeltaMode::scalar ? "simdfastpfor" : "simdfastpfor-s4", mode,
      PatchStorage::vertical_arrays);
}

}  // namespace intzip
