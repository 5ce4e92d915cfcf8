#pragma once

#include <cstdint>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "intzip/codec.h"

namespace intzip {

struct BenchRecord {
  std::string codec;
  std::string dataset;
  uint32_t bucket = 0;  // floor(log2(array length))
  double bits_per_int = 0;
  double encode_mis = 0;  // million integers per second
  double decode_mis = 0;
};

struct MeasureOptions {
  double min_seconds = 0.5;  // each timed run repeats the pipeline this long
  int runs = 3;              // best of this many runs
  bool warmup = true;
};

// Measures one codec over a group of arrays (normally one length bucket of a
// dataset).  The encoded output is decoded and verified against the input
// before anything is timed; a mismatch throws CorruptError.  Timings cover
// the whole in-memory pipeline including differential coding; decode streams
// chunk by chunk into one reused buffer, the way a consumer reads a posting
// list, so large arrays measure the codec rather than the memory system.
// bits_per_int is 8 * compressed payload bytes / integers and covers every
// format header the codec emits (descriptors, page headers, byte arrays,
// remainders).
BenchRecord measure(const Codec& codec,
                    std::span<const std::vector<uint32_t>> arrays,
                    std::string_view dataset,
                    const MeasureOptions& options = {});

// Shannon entropy in bits per integer of the scalar deltas pooled across all
// arrays (the first delta of each array is the value itself).
double entropy_of_deltas(std::span<const std::vector<uint32_t>> arrays);

// Closed-form bounds for n sorted distinct 32-bit integers.  info_limit is
// the information-theoretic lower bound log2(2^32 / n) bits per integer;
// binpack_bound = 8/B + 1 + log2 B + info_limit bounds binary packing with
// B-integer blocks and one width byte per block.  block_size must be 32 or
// 128 and n in [1, 2^32].
struct TheoreticBounds {
  double info_limit;
  double binpack_bound;
};
TheoreticBounds theoretic_bounds(uint64_t n, uint32_t block_size);

// bucket -> weight.  Weights must be non-negative with a positive sum; they
// are normalized to sum 1 before use.
using WeightVector = std::map<uint32_t, double>;

struct AggregateRow {
  std::string codec;
  double bits_per_int = 0;
  double encode_mis = 0;
  double decode_mis = 0;
};

// Per-codec summary across bucket records: the plain mean without weights,
// or the weight-vector dot product with them.  In weighted mode every
// weighted bucket must be present exactly once per codec.
std::vector<AggregateRow> aggregate(std::span<const BenchRecord> records,
                                    const WeightVector* weights = nullptr);

// CSV (RFC 4180) with header codec,dataset,bucket,bits_per_int,encode_mis,
// decode_mis; rows ordered by codec, then bucket, then dataset; numeric
// fields use 4 significant digits.
void emit_csv(std::span<const BenchRecord> records, std::ostream& os);

}  // namespace intzip
