#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "foldse/dataset.hpp"
#include "foldse/learner.hpp"
#include "foldse/program.hpp"

namespace foldse {

struct Metrics {
  double accuracy = 0.0;
  double precision = 0.0;  // of metric_positive, one-vs-rest
  double recall = 0.0;
  double f1 = 0.0;
  double weighted_f1 = 0.0;  // per-class F1 weighted by gold support
  double train_ms = 0.0;
  double n_rules = 0.0;
  double n_predicates = 0.0;
};

// Throws on empty or unequal inputs and on symbols outside `classes`.
Metrics compute_metrics(std::span<const Symbol> preds, std::span<const Symbol> golds,
                        const std::vector<Symbol>& classes, Symbol metric_positive);

// Deterministic permutation of 0..n-1 (Fisher-Yates over a 64-bit Mersenne
// Twister, with a portable bounded draw).
std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed);

// k near-equal, disjoint folds covering 0..n-1 after shuffling.
std::vector<std::vector<std::size_t>> make_folds(std::size_t n, std::size_t k, std::uint64_t seed);

struct Split {
  std::vector<std::size_t> train;
  std::vector<std::size_t> test;
};
// The first round(test_fraction * n) shuffled indices form the test part.
Split train_test_split(std::size_t n, double test_fraction, std::uint64_t seed);

// A model of either kind, with uniform prediction and size accounting.
struct TrainedModel {
  Program program;
  LearnStats stats;
  double train_ms = 0.0;

  Symbol predict(std::span<const Value> row) const { return evaluate(program, row); }
};

// Binary training for two labels (or when `multiclass` is false), multi-class
// otherwise.
TrainedModel train(const Dataset& ds, const Hyperparams& hp, std::optional<bool> multiclass = std::nullopt);

// Metrics of a model on a labelled dataset.
Metrics score(const TrainedModel& model, const Dataset& test, Symbol metric_positive);

struct FoldResult {
  std::size_t train_size = 0;
  std::size_t test_size = 0;
  Metrics metrics;
};

struct CvOptions {
  std::size_t folds = 10;
  std::uint64_t seed = 1;
  Hyperparams hp;
  std::optional<bool> multiclass;
  std::optional<Symbol> metric_positive;  // defaults to the schema's positive class
};

struct CvReport {
  std::size_t folds = 0;
  std::uint64_t seed = 0;
  bool multiclass = false;
  Symbol metric_positive;
  std::vector<FoldResult> results;
  Metrics mean;
  double sd_rules = 0.0;  // sample standard deviation
  double sd_predicates = 0.0;
};

CvReport cross_validate(const Dataset& ds, const CvOptions& options);

// Aligned plain-text table; fit times appear only when `timing` is set so
// that reports stay byte-identical across runs.
std::string report_text(const CvReport& r, bool timing = false);
// One JSON object per fold plus a final aggregate record.
std::string report_jsonl(const CvReport& r, bool timing = false);

}  // namespace foldse
