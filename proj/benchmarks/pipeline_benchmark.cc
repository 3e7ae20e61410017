#include <benchmark/benchmark.h>

#include <filesystem>
#include <map>

#include "groupmatch/blocking.h"
#include "groupmatch/datagen.h"
#include "groupmatch/pipeline.h"

namespace groupmatch {
namespace {

const GeneratedDataset& Data(std::size_t groups) {
  static std::map<std::size_t, GeneratedDataset> cache;
  auto it = cache.find(groups);
  if (it == cache.end()) {
    static const BaseCorpus corpus =
        LoadBaseCorpus(std::filesystem::path(GROUPMATCH_BENCH_DATA_DIR) / "sample_base_corpus.csv");
    GenerationParams params;
    params.num_groups = groups;
    params.seed = 7;
    it = cache.emplace(groups, Generate(corpus.seeds, params)).first;
  }
  return it->second;
}

void BM_TokenOverlap(benchmark::State& state) {
  const auto& data = Data(static_cast<std::size_t>(state.range(0)));
  const auto text = CompanyText(data.companies);
  for (auto _ : state) benchmark::DoNotOptimize(TokenOverlap(text, 5));
  state.SetComplexityN(static_cast<std::int64_t>(text.size()));
}
BENCHMARK(BM_TokenOverlap)->Arg(250)->Arg(500)->Arg(1000)->Arg(2000)->Complexity()
    ->Unit(benchmark::kMillisecond);

void BM_Pipeline(benchmark::State& state) {
  const auto& data = Data(static_cast<std::size_t>(state.range(0)));
  const PipelineInputs inputs{data.companies, data.securities, std::nullopt};
  const auto config = Preset("synthetic-companies");
  for (auto _ : state) benchmark::DoNotOptimize(RunPipeline(config, inputs, &data.company_truth));
}
BENCHMARK(BM_Pipeline)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace groupmatch
