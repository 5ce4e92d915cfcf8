// intzip: generate, compress, and benchmark sorted 32-bit integer sets.
//
// Subcommands:
//   gen      write synthetic sorted arrays as a RAW container
//   encode   compress a RAW container with one codec
//   decode   expand an encoded container back to RAW
//   bench    measure codecs over a container or a standard recipe
//   analyze  entropy and size-bound report for a RAW container

#include <bit>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <map>
#include <stdexcept>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "intzip/bench.h"
#include "intzip/codec.h"
#include "intzip/container.h"
#include "intzip/datagen.h"

namespace {

using namespace intzip;

std::ifstream open_input(const std::string& path) {
  std::ifstream is(path, std::ios::binary);
  if (!is) throw std::runtime_error("cannot open '" + path + "' for reading");
  return is;
}

std::ofstream open_output(const std::string& path) {
  std::ofstream os(path, std::ios::binary);
  if (!os) throw std::runtime_error("cannot open '" + path + "' for writing");
  return os;
}

void finish_output(std::ostream& os, const std::string& path) {
  os.flush();
  if (!os) throw std::runtime_error("error writing '" + path + "'");
}

struct GenOptions {
  std::string model;
  uint64_t n = 0;
  uint64_t range = uint64_t{1} << 29;
  uint32_t count = 1;
  uint64_t seed = 0;
  std::string out;
};

void run_gen(const GenOptions& options) {
  DatasetSpec spec;
  spec.name = "cli";
  spec.model =
      options.model == "uniform" ? DataModel::uniform : DataModel::cluster;
  spec.n = options.n;
  spec.range = options.range;
  spec.count = options.count;
  spec.seed = options.seed;
  const auto arrays = generate_all(spec);
  auto os = open_output(options.out);
  container_write_raw(os, arrays);
  finish_output(os, options.out);
  uint64_t total = 0;
  for (const auto& a : arrays) total += a.size();
  std::printf("wrote %zu array(s), %llu integers to %s\n", arrays.size(),
              static_cast<unsigned long long>(total), options.out.c_str());
}

struct CodecFileOptions {
  std::string codec;
  std::string in;
  std::string out;
};

void run_encode(const CodecFileOptions& options) {
  const auto codec = make_codec(options.codec);
  auto is = open_input(options.in);
  const auto arrays = container_read_raw(is);
  std::vector<std::vector<Chunk>> encoded;
  encoded.reserve(arrays.size());
  uint64_t total = 0;
  uint64_t payload_words = 0;
  for (const auto& values : arrays) {
    encoded.push_back(encode_array(*codec, values));
    total += values.size();
    for (const Chunk& chunk : encoded.back())
      payload_words += chunk.payload.size();
  }
  auto os = open_output(options.out);
  container_write_encoded(os, codec->name(), encoded);
  finish_output(os, options.out);
  const double bits =
      total == 0 ? 0.0 : 32.0 * static_cast<double>(payload_words) /
                             static_cast<double>(total);
  std::printf("encoded %zu array(s) with %s: %.2f bits/int\n", arrays.size(),
              codec->name().c_str(), bits);
}

void run_decode(const CodecFileOptions& options) {
  auto is = open_input(options.in);
  const EncodedContainer container = container_read_encoded(is);
  const auto codec = make_codec(container.codec_name);
  std::vector<std::vector<uint32_t>> arrays;
  arrays.reserve(container.arrays.size());
  for (const auto& chunks : container.arrays)
    arrays.push_back(decode_array(*codec, chunks));
  auto os = open_output(options.out);
  container_write_raw(os, arrays);
  finish_output(os, options.out);
  std::printf("decoded %zu array(s) from %s\n", arrays.size(),
              container.codec_name.c_str());
}

struct BenchOptions {
  std::string codecs;
  std::string data;
  std::string weights;
  std::string csv;
};

std::vector<std::string> parse_codec_list(const std::string& arg) {
  if (arg == "all") return codec_names();
  std::vector<std::string> names;
  size_t start = 0;
  while (start <= arg.size()) {
    const size_t comma = arg.find(',', start);
    const std::string name =
        arg.substr(start, comma == std::string::npos ? comma : comma - start);
    if (name.empty()) throw std::runtime_error("empty codec name in list");
    make_codec(name);  // validates, throws for unknown names
    names.push_back(name);
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return names;
}

// The data argument is either "recipe:<name>" for a standard dataset or the
// path of a RAW container.  Returns the arrays and a dataset label.
std::pair<std::vector<std::vector<uint32_t>>, std::string> load_data(
    const std::string& arg) {
  constexpr std::string_view prefix = "recipe:";
  if (arg.starts_with(prefix)) {
    const std::string name = arg.substr(prefix.size());
    for (const DatasetSpec& spec : standard_recipes())
      if (spec.name == name) return {generate_all(spec), spec.name};
    std::string known;
    for (const DatasetSpec& spec : standard_recipes())
      known += (known.empty() ? "" : ", ") + spec.name;
    throw std::runtime_error("unknown recipe '" + name + "' (known: " + known +
                             ")");
  }
  auto is = open_input(arg);
  auto arrays = container_read_raw(is);
  const size_t slash = arg.find_last_of('/');
  return {std::move(arrays),
          slash == std::string::npos ? arg : arg.substr(slash + 1)};
}

WeightVector read_weights(const std::string& path) {
  std::ifstream is(path);
  if (!is) throw std::runtime_error("cannot open '" + path + "' for reading");
  WeightVector weights;
  std::string line;
  size_t lineno = 0;
  while (std::getline(is, line)) {
    ++lineno;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    if (lineno == 1 && line == "bucket,weight") continue;
    const auto where = "weights line " + std::to_string(lineno);
    const size_t comma = line.find(',');
    if (comma == std::string::npos)
      throw std::runtime_error(where + ": expected 'bucket,weight'");
    uint32_t bucket = 0;
    double weight = 0;
    try {
      size_t used = 0;
      const unsigned long b = std::stoul(line.substr(0, comma), &used);
      if (used != comma || b > 31) throw std::invalid_argument("");
      bucket = static_cast<uint32_t>(b);
      const std::string rest = line.substr(comma + 1);
      weight = std::stod(rest, &used);
      if (used != rest.size()) throw std::invalid_argument("");
    } catch (const std::exception&) {
      throw std::runtime_error(where + ": expected 'bucket,weight'");
    }
    if (!weights.emplace(bucket, weight).second)
      throw std::runtime_error(where + ": duplicate bucket");
  }
  if (weights.empty()) throw std::runtime_error("weights file is empty");
  return weights;
}

void run_bench(const BenchOptions& options) {
  const auto codecs = parse_codec_list(options.codecs);
  WeightVector weights;
  if (!options.weights.empty()) weights = read_weights(options.weights);
  auto [arrays, dataset] = load_data(options.data);

  // One measurement group per length bucket K (lengths in [2^K, 2^{K+1})).
  std::map<uint32_t, std::vector<std::vector<uint32_t>>> groups;
  for (auto& values : arrays)
    if (!values.empty())
      groups[static_cast<uint32_t>(std::bit_width(values.size()) - 1)]
          .push_back(std::move(values));
  if (groups.empty()) throw std::runtime_error("bench: nothing to measure");

  std::vector<BenchRecord> records;
  for (const auto& name : codecs) {
    const auto codec = make_codec(name);
    for (const auto& [bucket, group] : groups)
      records.push_back(measure(*codec, group, dataset));
  }

  auto os = open_output(options.csv);
  emit_csv(records, os);
  finish_output(os, options.csv);

  std::vector<AggregateRow> rows;
  if (weights.empty()) {
    rows = aggregate(records);
    std::printf("unweighted means over %zu bucket(s), dataset %s\n",
                groups.size(), dataset.c_str());
  } else {
    rows = aggregate(records, &weights);
    std::printf("weighted aggregate over %zu bucket(s), dataset %s\n",
                weights.size(), dataset.c_str());
  }
  std::printf("%-16s %9s %11s %11s\n", "codec", "bits/int", "encode mis",
              "decode mis");
  for (const AggregateRow& row : rows)
    std::printf("%-16s %9.2f %11.1f %11.1f\n", row.codec.c_str(),
                row.bits_per_int, row.encode_mis, row.decode_mis);
}

void run_analyze(const std::string& data) {
  auto is = open_input(data);
  const auto arrays = container_read_raw(is);
  uint64_t total = 0;
  size_t empty = 0;
  std::map<size_t, size_t> by_length;
  for (const auto& values : arrays) {
    total += values.size();
    if (values.empty())
      ++empty;
    else
      ++by_length[values.size()];
  }
  std::printf("arrays:        %zu\n", arrays.size());
  std::printf("integers:      %llu\n", static_cast<unsigned long long>(total));
  if (empty > 0) std::printf("empty arrays:  %zu\n", empty);
  if (total == 0) return;
  std::printf("delta entropy: %.4f bits/int\n\n", entropy_of_deltas(arrays));
  std::printf("%10s %8s %12s %12s %12s\n", "length", "arrays", "info limit",
              "BP32 bound", "BP128 bound");
  for (const auto& [n, count] : by_length) {
    const TheoreticBounds b32 = theoretic_bounds(n, 32);
    const TheoreticBounds b128 = theoretic_bounds(n, 128);
    std::printf("%10zu %8zu %12.4f %12.4f %12.4f\n", n, count, b32.info_limit,
                b32.binpack_bound, b128.binpack_bound);
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"sorted 32-bit integer compression and benchmark tool"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd =
      app.add_subcommand("gen", "Generate sorted arrays into a RAW container");
  gen_cmd->add_option("--model", gen.model, "Data model")
      ->required()
      ->check(CLI::IsMember({"uniform", "cluster"}));
  gen_cmd->add_option("--n", gen.n, "Integers per array")->required();
  gen_cmd->add_option("--range", gen.range,
                      "Values are drawn from [0, range), default 2^29");
  gen_cmd->add_option("--count", gen.count, "Number of arrays (default 1)");
  gen_cmd->add_option("--seed", gen.seed, "Seed of array 0; array i uses seed+i");
  gen_cmd->add_option("--out", gen.out, "Output container")->required();

  CodecFileOptions encode;
  auto* encode_cmd =
      app.add_subcommand("encode", "Compress a RAW container with one codec");
  encode_cmd->add_option("--codec", encode.codec, "Codec name")->required();
  encode_cmd->add_option("--in", encode.in, "RAW container")->required();
  encode_cmd->add_option("--out", encode.out, "Output container")->required();

  CodecFileOptions decode;
  auto* decode_cmd =
      app.add_subcommand("decode", "Expand an encoded container to RAW");
  decode_cmd->add_option("--in", decode.in, "Encoded container")->required();
  decode_cmd->add_option("--out", decode.out, "Output container")->required();

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand(
      "bench", "Measure codecs over a container or standard recipe");
  bench_cmd
      ->add_option("--codecs", bench.codecs,
                   "Comma-separated codec names, or 'all'")
      ->required();
  bench_cmd
      ->add_option("--data", bench.data,
                   "RAW container path, or recipe:<uniform|cluster>-<short|long>")
      ->required();
  bench_cmd->add_option("--weights", bench.weights,
                        "CSV of 'bucket,weight' rows for weighted aggregation");
  bench_cmd->add_option("--csv", bench.csv, "Per-bucket results CSV")
      ->required();

  std::string analyze_data;
  auto* analyze_cmd = app.add_subcommand(
      "analyze", "Entropy and size-bound report for a RAW container");
  analyze_cmd->add_option("--data", analyze_data, "RAW container")->required();

  gen_cmd->callback([&] { run_gen(gen); });
  encode_cmd->callback([&] { run_encode(encode); });
  decode_cmd->callback([&] { run_decode(decode); });
  bench_cmd->callback([&] { run_bench(bench); });
  analyze_cmd->callback([&] { run_analyze(analyze_data); });

  try {
    CLI11_PARSE(app, argc, argv);
  } catch (const std::exception& e) {
    std::fprintf(stderr, "intzip: %s\n", e.what());
    return 1;
  }
  return 0;
}
