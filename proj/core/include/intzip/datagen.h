#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace intzip {

// Synthetic sorted-set generators.  Both models draw n distinct integers
// from [0, range) and return them sorted; the same spec and seed always
// produce the same array.
//
// uniform: an exactly uniform random n-subset of [0, range).
//
// cluster: the range is split recursively in half, assigning a fraction
// f ~ U[0.1, 0.9] of the points to the left half (clamped to keep both
// halves feasible); recursion bottoms out on ranges at most 64x the point
// count, which are filled uniformly.

enum class DataModel { uniform, cluster };

struct DatasetSpec {
  std::string name;
  DataModel model = DataModel::uniform;
  uint64_t n = 0;
  uint64_t range = uint64_t{1} << 29;
  uint32_t count = 1;  // arrays in the dataset; array i uses seed + i
  uint64_t seed = 0;
};

std::vector<uint32_t> gen_uniform(uint64_t n, uint64_t range, uint64_t seed);
std::vector<uint32_t> gen_clusterdata(uint64_t n, uint64_t range,
                                      uint64_t seed);

std::vector<uint32_t> generate_array(const DatasetSpec& spec, uint32_t index);
std::vector<std::vector<uint32_t>> generate_all(const DatasetSpec& spec);

// The four standard benchmark datasets over range 2^29: short collections
// of 2^10 arrays with 2^15 values each (average delta 2^14) and long single
// arrays of 2^25 values (average delta 2^4), for each model.
std::vector<DatasetSpec> standard_recipes();

}  // namespace intzip
