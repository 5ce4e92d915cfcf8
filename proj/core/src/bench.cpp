#include "intzip/bench.h"

#include <algorithm>
#include <bit>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>
#include <unordered_map>

#include "intzip/errors.h"

namespace intzip {
namespace {

inline void do_not_optimize(const void* p) {
  asm volatile("" : : "g"(p) : "memory");
}

template <typename Fn>
double timed_mis(Fn&& fn, uint64_t ints_per_pass,
                 const MeasureOptions& options) {
  using clock = std::chrono::steady_clock;
  if (options.warmup) fn();
  double best = 0;
  for (int run = 0; run < options.runs; ++run) {
    uint64_t passes = 0;
    const auto start = clock::now();
    double elapsed;
    do {
      fn();
      ++passes;
      elapsed = std::chrono::duration<double>(clock::now() - start).count();
    } while (elapsed < options.min_seconds);
    best = std::max(best, static_cast<double>(ints_per_pass) *
                              static_cast<double>(passes) / elapsed / 1e6);
  }
  return best;
}

std::string format_double(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4g", v);
  return buf;
}

void csv_field(std::ostream& os, const std::string& field) {
  if (field.find_first_of(",\"\r\n") == std::string::npos) {
    os << field;
    return;
  }
  os << '"';
  for (char c : field) {
    if (c == '"') os << '"';
    os << c;
  }
  os << '"';
}

}  // namespace

BenchRecord measure(const Codec& codec,
                    std::span<const std::vector<uint32_t>> arrays,
                    std::string_view dataset,
                    const MeasureOptions& options) {
  uint64_t total = 0;
  for (const auto& values : arrays) total += values.size();
  if (arrays.empty() || total == 0)
    throw std::invalid_argument("measure: nothing to measure");

  // Encode once for the size and the correctness gate.
  std::vector<std::vector<Chunk>> encoded;
  encoded.reserve(arrays.size());
  uint64_t payload_words = 0;
  for (const auto& values : arrays) {
    encoded.push_back(encode_array(codec, values));
    for (const Chunk& chunk : encoded.back())
      payload_words += chunk.payload.size();
  }
  for (size_t i = 0; i < arrays.size(); ++i)
    if (decode_array(codec, encoded[i]) != arrays[i])
      throw CorruptError("measure: decoded output does not match input");

  BenchRecord record;
  record.codec = codec.name();
  record.dataset = dataset;
  for (const auto& values : arrays)
    if (!values.empty()) {
      record.bucket =
          static_cast<uint32_t>(std::bit_width(values.size()) - 1);
      break;
    }
  record.bits_per_int =
      8.0 * 4.0 * static_cast<double>(payload_words) /
      static_cast<double>(total);
  record.encode_mis = timed_mis(
      [&] {
        for (const auto& values : arrays) {
          auto chunks = encode_array(codec, values);
          do_not_optimize(chunks.data());
        }
      },
      total, options);
  // Decode is timed chunk by chunk into one reused buffer, the way a query
  // would consume the stream; materializing whole arrays would measure the
  // memory system instead of the codec on large inputs.
  std::vector<uint32_t> scratch;
  scratch.reserve(kChunkSize);
  record.decode_mis = timed_mis(
      [&] {
        for (const auto& chunks : encoded)
          for (const Chunk& chunk : chunks) {
            decode_array(codec, {&chunk, 1}, scratch);
            do_not_optimize(scratch.data());
          }
      },
      total, options);
  return record;
}

double entropy_of_deltas(std::span<const std::vector<uint32_t>> arrays) {
  std::unordered_map<uint32_t, uint64_t> counts;
  uint64_t total = 0;
  for (const auto& values : arrays) {
    uint32_t previous = 0;
    for (uint32_t v : values) {
      if (v < previous)
        throw std::invalid_argument("entropy: input is not nondecreasing");
      ++counts[v - previous];
      previous = v;
      ++total;
    }
  }
  if (total == 0) throw std::invalid_argument("entropy: nothing to measure");
  double h = 0;
  for (const auto& [delta, count] : counts) {
    const double p =
        static_cast<double>(count) / static_cast<double>(total);
    h -= p * std::log2(p);
  }
  return h;
}

TheoreticBounds theoretic_bounds(uint64_t n, uint32_t block_size) {
  if (block_size != 32 && block_size != 128)
    throw std::invalid_argument("theoretic_bounds: block size must be 32 or 128");
  if (n == 0 || n > (uint64_t{1} << 32))
    throw std::invalid_argument("theoretic_bounds: n must be in [1, 2^32]");
  const double info = 32.0 - std::log2(static_cast<double>(n));
  const double bound =
      8.0 / block_size + 1.0 + std::log2(static_cast<double>(block_size)) +
      info;
  return {info, bound};
}

std::vector<AggregateRow> aggregate(std::span<const BenchRecord> records,
                                    const WeightVector* weights) {
  std::map<std::string, std::vector<const BenchRecord*>> by_codec;
  for (const BenchRecord& record : records)
    by_codec[record.codec].push_back(&record);

  WeightVector normalized;
  if (weights) {
    double sum = 0;
    for (const auto& [bucket, weight] : *weights) {
      if (weight < 0)
        throw std::invalid_argument("aggregate: negative weight");
      sum += weight;
    }
    if (sum <= 0)
      throw std::invalid_argument("aggregate: weights must have a positive sum");
    for (const auto& [bucket, weight] : *weights)
      normalized[bucket] = weight / sum;
  }

  std::vector<AggregateRow> rows;
  rows.reserve(by_codec.size());
  for (const auto& [codec, group] : by_codec) {
    AggregateRow row;
    row.codec = codec;
    if (!weights) {
      for (const BenchRecord* record : group) {
        row.bits_per_int += record->bits_per_int;
        row.encode_mis += record->encode_mis;
        row.decode_mis += record->decode_mis;
      }
      const double k = static_cast<double>(group.size());
      row.bits_per_int /= k;
      row.encode_mis /= k;
      row.decode_mis /= k;
    } else {
      std::map<uint32_t, const BenchRecord*> by_bucket;
      for (const BenchRecord* record : group)
        if (!by_bucket.emplace(record->bucket, record).second)
          throw std::invalid_argument(
              "aggregate: duplicate bucket for codec " + codec);
      for (const auto& [bucket, weight] : normalized) {
        const auto it = by_bucket.find(bucket);
        if (it == by_bucket.end())
          throw std::invalid_argument("aggregate: codec " + codec +
                                      " is missing bucket " +
                                      std::to_string(bucket));
        row.bits_per_int += weight * it->second->bits_per_int;
        row.encode_mis += weight * it->second->encode_mis;
        row.decode_mis += weight * it->second->decode_mis;
      }
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

void emit_csv(std::span<const BenchRecord> records, std::ostream& os) {
  std::vector<const BenchRecord*> sorted;
  sorted.reserve(records.size());
  for (const BenchRecord& record : records) sorted.push_back(&record);
  std::sort(sorted.begin(), sorted.end(),
            [](const BenchRecord* a, const BenchRecord* b) {
              if (a->codec != b->codec) return a->codec < b->codec;
              if (a->bucket != b->bucket) return a->bucket < b->bucket;
              return a->dataset < b->dataset;
            });
  os << "codec,dataset,bucket,bits_per_int,encode_mis,decode_mis\r\n";
  for (const BenchRecord* record : sorted) {
    csv_field(os, record->codec);
    os << ',';
    csv_field(os, record->dataset);
    os << ',' << record->bucket << ',' << format_double(record->bits_per_int)
       << ',' << format_double(record->encode_mis) << ','
       << format_double(record->decode_mis) << "\r\n";
  }
}

}  // namespace intzip
