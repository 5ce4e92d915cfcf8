// End-to-end codec benchmarks: encode_array and chunk-streamed decode_array
// over one uniform sorted array, registered for every codec in the registry.

#include <benchmark/benchmark.h>

#include <cstdint>
#include <string>
#include <vector>

#include "intzip/codec.h"
#include "intzip/datagen.h"

namespace {

using namespace intzip;

void register_codec_benchmarks(const std::vector<uint32_t>& values) {
  for (const std::string& name : codec_names()) {
    benchmark::RegisterBenchmark(
        ("encode/" + name).c_str(),
        [&values, name](benchmark::State& state) {
          const auto codec = make_codec(name);
          for (auto _ : state) {
            auto chunks = encode_array(*codec, values);
            benchmark::DoNotOptimize(chunks.data());
          }
          state.SetItemsProcessed(
              state.iterations() * static_cast<int64_t>(values.size()));
        });
    benchmark::RegisterBenchmark(
        ("decode/" + name).c_str(),
        [&values, name](benchmark::State& state) {
          const auto codec = make_codec(name);
          const auto chunks = encode_array(*codec, values);
          std::vector<uint32_t> out;
          for (auto _ : state) {
            for (const Chunk& chunk : chunks) {
              decode_array(*codec, {&chunk, 1}, out);
              benchmark::DoNotOptimize(out.data());
            }
          }
          state.SetItemsProcessed(
              state.iterations() * static_cast<int64_t>(values.size()));
        });
  }
}

}  // namespace

int main(int argc, char** argv) {
  benchmark::Initialize(&argc, argv);
  if (benchmark::ReportUnrecognizedArguments(argc, argv)) return 1;

  DatasetSpec spec;
  spec.name = "bench";
  spec.model = DataModel::uniform;
  spec.n = uint64_t{1} << 20;
  spec.range = uint64_t{1} << 29;
  spec.seed = 7;
  const auto values = generate_array(spec, 0);

  register_codec_benchmarks(values);
  benchmark::RunSpecifiedBenchmarks();
  return 0;
}
