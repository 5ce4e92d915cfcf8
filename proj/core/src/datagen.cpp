#include "intzip/datagen.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <stdexcept>
#include <unordered_set>

namespace intzip {
namespace {

// Exactly uniform draw from [0, bound) via 128-bit multiply-shift with
// rejection; implemented here so results do not depend on the standard
// library's distribution internals.
uint64_t bounded(std::mt19937_64& rng, uint64_t bound) {
  unsigned __int128 m =
      static_cast<unsigned __int128>(rng()) * bound;
  auto low = static_cast<uint64_t>(m);
  if (low < bound) {
    const uint64_t threshold = (0 - bound) % bound;
    while (low < threshold) {
      m = static_cast<unsigned __int128>(rng()) * bound;
      low = static_cast<uint64_t>(m);
    }
  }
  return static_cast<uint64_t>(m >> 64);
}

double u01(std::mt19937_64& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

// Appends n distinct sorted values from [base, base + range).
void uniform_into(uint64_t n, uint64_t range, uint64_t base,
                  std::mt19937_64& rng, std::vector<uint32_t>& out) {
  if (n == 0) return;
  if (range <= 32 * n) {
    // Dense: rejection against a bitmap, then an in-order sweep.  When more
    // than half the range is requested, draw the complement instead so the
    // rejection rate stays below one half.
    const bool invert = n > range / 2;
    const uint64_t draws = invert ? range - n : n;
    std::vector<uint64_t> bits((range + 63) / 64, 0);
    for (uint64_t k = 0; k < draws;) {
      const uint64_t v = bounded(rng, range);
      uint64_t& word = bits[v >> 6];
      const uint64_t bit = uint64_t{1} << (v & 63);
      if (word & bit) continue;
      word |= bit;
      ++k;
    }
    for (uint64_t wi = 0; wi < bits.size(); ++wi) {
      uint64_t word = invert ? ~bits[wi] : bits[wi];
      if (invert && wi == bits.size() - 1 && range % 64 != 0)
        word &= (uint64_t{1} << (range % 64)) - 1;
      while (word) {
        out.push_back(static_cast<uint32_t>(
            base + wi * 64 + static_cast<unsigned>(std::countr_zero(word))));
        word &= word - 1;
      }
    }
  } else {
    // Sparse: Floyd's algorithm over a hash set.
    std::unordered_set<uint64_t> seen;
    seen.reserve(static_cast<size_t>(n) * 2);
    std::vector<uint32_t> values;
    values.reserve(n);
    for (uint64_t j = range - n; j < range; ++j) {
      const uint64_t t = bounded(rng, j + 1);
      if (seen.insert(t).second)
        values.push_back(static_cast<uint32_t>(base + t));
      else {
        seen.insert(j);
        values.push_back(static_cast<uint32_t>(base + j));
      }
    }
    std::sort(values.begin(), values.end());
    out.insert(out.end(), values.begin(), values.end());
  }
}

void cluster_into(uint64_t n, uint64_t range, uint64_t base,
                  std::mt19937_64& rng, std::vector<uint32_t>& out) {
  if (n == 0) return;
  if (range <= 64 * n || range < 2) {
    uniform_into(n, range, base, rng, out);
    return;
  }
  const uint64_t left_range = range / 2;
  const uint64_t right_range = range - left_range;
  const double f = 0.1 + 0.8 * u01(rng);
  auto left = static_cast<uint64_t>(std::llround(f * static_cast<double>(n)));
  const uint64_t min_left = n > right_range ? n - right_range : 0;
  left = std::clamp(left, min_left, std::min(n, left_range));
  cluster_into(left, left_range, base, rng, out);
  cluster_into(n - left, right_range, base + left_range, rng, out);
}

void check_args(uint64_t n, uint64_t range) {
  if (range > (uint64_t{1} << 32))
    throw std::invalid_argument("datagen: range exceeds 2^32");
  if (n > range)
    throw std::invalid_argument(
        "datagen: cannot draw more distinct values than the range holds");
}

}  // namespace

std::vector<uint32_t> gen_uniform(uint64_t n, uint64_t range, uint64_t seed) {
  check_args(n, range);
  std::mt19937_64 rng(seed);
  std::vector<uint32_t> out;
  out.reserve(n);
  uniform_into(n, range, 0, rng, out);
  return out;
}

std::vector<uint32_t> gen_clusterdata(uint64_t n, uint64_t range,
                                      uint64_t seed) {
  check_args(n, range);
  std::mt19937_64 rng(seed);
  std::vector<uint32_t> out;
  out.reserve(n);
  cluster_into(n, range, 0, rng, out);
  return out;
}

std::vector<uint32_t> generate_array(const DatasetSpec& spec, uint32_t index) {
  const uint64_t seed = spec.seed + index;
  return spec.model == DataModel::uniform
             ? gen_uniform(spec.n, spec.range, seed)
             : gen_clusterdata(spec.n, spec.range, seed);
}

std::vector<std::vector<uint32_t>> generate_all(const DatasetSpec& spec) {
  std::vector<std::vector<uint32_t>> arrays;
  arrays.reserve(spec.count);
  for (uint32_t i = 0; i < spec.count; ++i)
    arrays.push_back(generate_array(spec, i));
  return arrays;
}

std::vector<DatasetSpec> standard_recipes() {
  const uint64_t range = uint64_t{1} << 29;
  return {
      {"uniform-short", DataModel::uniform, uint64_t{1} << 15, range,
       uint32_t{1} << 10, 0},
      {"uniform-long", DataModel::uniform, uint64_t{1} << 25, range, 1, 0},
      {"cluster-short", DataModel::cluster, uint64_t{1} << 15, range,
       uint32_t{1} << 10, 0},
      {"cluster-long", DataModel::cluster, uint64_t{1} << 25, range, 1, 0},
  };
}

}  // namespace intzip
