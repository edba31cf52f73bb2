#include <benchmark/benchmark.h>

#include <filesystem>
#include <random>

#include "foldse/eval.hpp"
#include "foldse/heuristics.hpp"
#include "foldse/learner.hpp"

using namespace foldse;

namespace {

std::filesystem::path data(const char* name) { return std::filesystem::path(FOLDSE_BENCH_DATA_DIR) / name; }

const Dataset& adult() {
  static const Dataset ds = load_csv(
      data("adult.csv"),
      {{"age", "fnlwgt", "education_num", "capital_gain", "capital_loss", "hours_per_week"}, "income", std::nullopt});
  return ds;
}

// Synthetic numeric table: one informative column among noise.
Dataset synthetic(std::size_t rows, std::size_t features) {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<int> level(0, 999);
  Schema s;
  for (std::size_t f = 0; f < features; ++f) {
    s.feature_names.push_back(Symbol::intern("f" + std::to_string(f)));
    s.numeric.push_back(true);
  }
  s.label = Symbol::intern("y");
  s.class_labels = {Symbol::intern("p"), Symbol::intern("n")};
  s.positive_class = s.class_labels[0];
  s.default_class = s.class_labels[1];
  std::vector<Row> out;
  for (std::size_t i = 0; i < rows; ++i) {
    Row r;
    for (std::size_t f = 0; f < features; ++f) r.values.push_back(Value::numeric(level(rng)));
    r.label = r.values[0].number() + level(rng) / 4 > 600 ? s.class_labels[0] : s.class_labels[1];
    out.push_back(std::move(r));
  }
  return Dataset(std::move(s), std::move(out));
}

void split(const Dataset& ds, Examples& pos, Examples& neg) {
  for (const Row& r : ds.rows()) (r.label == ds.schema().positive_class ? pos : neg).push_back(&r);
}

void BM_FindBestLiteral(benchmark::State& state) {
  const Dataset ds = synthetic(static_cast<std::size_t>(state.range(0)), 8);
  Examples pos, neg;
  split(ds, pos, neg);
  for (auto _ : state) benchmark::DoNotOptimize(find_best_literal(pos, neg, 8, {}));
  state.SetItemsProcessed(state.iterations() * state.range(0) * 8);
}
BENCHMARK(BM_FindBestLiteral)->RangeMultiplier(4)->Range(256, 65536)->Unit(benchmark::kMicrosecond);

void BM_FindBestLiteralAdult(benchmark::State& state) {
  Examples pos, neg;
  split(adult(), pos, neg);
  for (auto _ : state) benchmark::DoNotOptimize(find_best_literal(pos, neg, adult().schema().num_features(), {}));
}
BENCHMARK(BM_FindBestLiteralAdult)->Unit(benchmark::kMillisecond);

void BM_FitAdult(benchmark::State& state) {
  for (auto _ : state) benchmark::DoNotOptimize(train(adult(), {}));
}
BENCHMARK(BM_FitAdult)->Unit(benchmark::kMillisecond);

void BM_CrossValidateAdult(benchmark::State& state) {
  CvOptions o;
  o.folds = 10;
  for (auto _ : state) benchmark::DoNotOptimize(cross_validate(adult(), o));
}
BENCHMARK(BM_CrossValidateAdult)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
