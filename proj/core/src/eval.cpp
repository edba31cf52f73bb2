#include "foldse/eval.hpp"

#include <chrono>
#include <cmath>
#include <cstdio>
#include <random>
#include <unordered_map>

#include "json.hpp"

#include "foldse/format.hpp"
#include "foldse/multiclass.hpp"

namespace foldse {
namespace {

// Uniform draw in [0, bound) by rejection; std::uniform_int_distribution is
// not specified bit-for-bit across standard libraries.
std::uint64_t bounded(std::mt19937_64& rng, std::uint64_t bound) {
  const std::uint64_t limit = -bound % bound;  // 2^64 mod bound
  while (true) {
    const std::uint64_t x = rng();
    if (x >= limit) return x % bound;
  }
}

double mean_of(const std::vector<double>& xs) {
  double s = 0.0;
  for (double x : xs) s += x;
  return xs.empty() ? 0.0 : s / static_cast<double>(xs.size());
}

double sample_sd(const std::vector<double>& xs) {
  if (xs.size() < 2) return 0.0;
  const double m = mean_of(xs);
  double ss = 0.0;
  for (double x : xs) ss += (x - m) * (x - m);
  return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

double ratio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

double f1_of(double p, double r) { return p + r > 0.0 ? 2.0 * p * r / (p + r) : 0.0; }

std::string fixed(double v, int digits) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.*f", digits, v);
  return buf;
}

std::string pad(std::string s, std::size_t width) {
  if (s.size() < width) s.insert(0, width - s.size(), ' ');
  return s;
}

std::vector<double> column(const CvReport& r, double Metrics::*field) {
  std::vector<double> out;
  for (const FoldResult& f : r.results) out.push_back(f.metrics.*field);
  return out;
}

nlohmann::ordered_json metrics_json(const Metrics& m, bool timing) {
  nlohmann::ordered_json j;
  j["accuracy"] = m.accuracy;
  j["precision"] = m.precision;
  j["recall"] = m.recall;
  j["f1"] = m.f1;
  j["weighted_f1"] = m.weighted_f1;
  j["rules"] = m.n_rules;
  j["predicates"] = m.n_predicates;
  if (timing) j["train_ms"] = m.train_ms;
  return j;
}

}  // namespace

Metrics compute_metrics(std::span<const Symbol> preds, std::span<const Symbol> golds,
                        const std::vector<Symbol>& classes, Symbol metric_positive) {
  if (preds.empty()) throw Error("no predictions to score");
  if (preds.size() != golds.size()) throw Error("prediction and gold label counts differ");
  std::unordered_map<Symbol, std::size_t> index;
  for (std::size_t i = 0; i < classes.size(); ++i) index.emplace(classes[i], i);
  auto idx = [&](Symbol s) {
    auto it = index.find(s);
    if (it == index.end()) throw Error("unknown class symbol: " + s.str());
    return it->second;
  };
  const std::size_t pos = idx(metric_positive);

  const std::size_t k = classes.size();
  std::vector<double> tp(k, 0.0), pred_n(k, 0.0), gold_n(k, 0.0);
  double correct = 0.0;
  for (std::size_t i = 0; i < preds.size(); ++i) {
    const std::size_t p = idx(preds[i]);
    const std::size_t g = idx(golds[i]);
    pred_n[p] += 1.0;
    gold_n[g] += 1.0;
    if (p == g) {
      tp[p] += 1.0;
      correct += 1.0;
    }
  }
  Metrics m;
  const double n = static_cast<double>(preds.size());
  m.accuracy = correct / n;
  m.precision = ratio(tp[pos], pred_n[pos]);
  m.recall = ratio(tp[pos], gold_n[pos]);
  m.f1 = f1_of(m.precision, m.recall);
  for (std::size_t c = 0; c < k; ++c) {
    m.weighted_f1 += gold_n[c] / n * f1_of(ratio(tp[c], pred_n[c]), ratio(tp[c], gold_n[c]));
  }
  return m;
}

std::vector<std::size_t> shuffled_indices(std::size_t n, std::uint64_t seed) {
  std::vector<std::size_t> idx(n);
  for (std::size_t i = 0; i < n; ++i) idx[i] = i;
  std::mt19937_64 rng(seed);
  for (std::size_t i = n; i > 1; --i) {
    const std::size_t j = bounded(rng, i);
    std::swap(idx[i - 1], idx[j]);
  }
  return idx;
}

std::vector<std::vector<std::size_t>> make_folds(std::size_t n, std::size_t k, std::uint64_t seed) {
  if (k < 2 || k > n) {
    throw Error("fold count " + std::to_string(k) + " out of range [2, " + std::to_string(n) + "]");
  }
  const std::vector<std::size_t> idx = shuffled_indices(n, seed);
  std::vector<std::vector<std::size_t>> folds(k);
  for (std::size_t f = 0; f < k; ++f) {
    folds[f].assign(idx.begin() + static_cast<std::ptrdiff_t>(f * n / k),
                    idx.begin() + static_cast<std::ptrdiff_t>((f + 1) * n / k));
  }
  return folds;
}

Split train_test_split(std::size_t n, double test_fraction, std::uint64_t seed) {
  if (!(test_fraction > 0.0 && test_fraction < 1.0)) throw Error("test fraction must lie in (0, 1)");
  const std::vector<std::size_t> idx = shuffled_indices(n, seed);
  const auto cut = static_cast<std::size_t>(std::llround(test_fraction * static_cast<double>(n)));
  Split s;
  s.test.assign(idx.begin(), idx.begin() + static_cast<std::ptrdiff_t>(cut));
  s.train.assign(idx.begin() + static_cast<std::ptrdiff_t>(cut), idx.end());
  return s;
}

TrainedModel train(const Dataset& ds, const Hyperparams& hp, std::optional<bool> multiclass) {
  const bool multi = multiclass.value_or(ds.schema().class_labels.size() > 2);
  TrainedModel m;
  const auto start = std::chrono::steady_clock::now();
  if (multi) {
    m.program = flatten(fit_multiclass(ds, hp, &m.stats), ds.schema());
  } else {
    m.program = fit(ds, hp, &m.stats);
  }
  m.train_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return m;
}

Metrics score(const TrainedModel& model, const Dataset& test, Symbol metric_positive) {
  std::vector<Symbol> preds, golds;
  preds.reserve(test.size());
  golds.reserve(test.size());
  for (const Row& r : test.rows()) {
    preds.push_back(model.predict(r.values));
    golds.push_back(r.label);
  }
  Metrics m = compute_metrics(preds, golds, model.program.schema.class_labels, metric_positive);
  const ProgramSize size = count_program(model.program);
  m.n_rules = static_cast<double>(size.rules);
  m.n_predicates = static_cast<double>(size.predicates);
  m.train_ms = model.train_ms;
  return m;
}

CvReport cross_validate(const Dataset& ds, const CvOptions& options) {
  const auto folds = make_folds(ds.size(), options.folds, options.seed);
  CvReport report;
  report.folds = options.folds;
  report.seed = options.seed;
  report.multiclass = options.multiclass.value_or(ds.schema().class_labels.size() > 2);
  report.metric_positive = options.metric_positive.value_or(ds.schema().positive_class);

  for (std::size_t f = 0; f < folds.size(); ++f) {
    std::vector<std::size_t> train_idx;
    train_idx.reserve(ds.size());
    for (std::size_t g = 0; g < folds.size(); ++g) {
      if (g != f) train_idx.insert(train_idx.end(), folds[g].begin(), folds[g].end());
    }
    const Dataset train_set = ds.subset(train_idx);
    const Dataset test_set = ds.subset(folds[f]);
    const TrainedModel model = train(train_set, options.hp, report.multiclass);
    report.results.push_back({train_set.size(), test_set.size(), score(model, test_set, report.metric_positive)});
  }

  Metrics& mean = report.mean;
  mean.accuracy = mean_of(column(report, &Metrics::accuracy));
  mean.precision = mean_of(column(report, &Metrics::precision));
  mean.recall = mean_of(column(report, &Metrics::recall));
  mean.f1 = mean_of(column(report, &Metrics::f1));
  mean.weighted_f1 = mean_of(column(report, &Metrics::weighted_f1));
  mean.train_ms = mean_of(column(report, &Metrics::train_ms));
  mean.n_rules = mean_of(column(report, &Metrics::n_rules));
  mean.n_predicates = mean_of(column(report, &Metrics::n_predicates));
  report.sd_rules = sample_sd(column(report, &Metrics::n_rules));
  report.sd_predicates = sample_sd(column(report, &Metrics::n_predicates));
  return report;
}

std::string report_text(const CvReport& r, bool timing) {
  std::string out;
  out += "# " + std::to_string(r.folds) + "-fold cross-validation, seed " + std::to_string(r.seed) +
         ", unstratified shuffle\n";
  out += "# mode: " + std::string(r.multiclass ? "multiclass" : "binary") +
         ", metric positive class: " + quote(r.metric_positive.str()) + "\n";
  std::vector<std::string> header = {"fold", "train", "test", "accuracy", "precision", "recall", "f1", "wf1",
                                     "rules", "preds"};
  if (timing) header.push_back("fit_ms");
  const std::vector<std::size_t> width = {5, 7, 6, 9, 10, 7, 7, 7, 6, 6, 10};

  auto line = [&](const std::vector<std::string>& cells) {
    std::string l;
    for (std::size_t i = 0; i < cells.size(); ++i) l += pad(cells[i], width[i]);
    out += l + "\n";
  };
  auto metric_cells = [&](const Metrics& m) {
    std::vector<std::string> c = {fixed(m.accuracy, 4), fixed(m.precision, 4), fixed(m.recall, 4),
                                  fixed(m.f1, 4),       fixed(m.weighted_f1, 4), fixed(m.n_rules, 1),
                                  fixed(m.n_predicates, 1)};
    if (timing) c.push_back(fixed(m.train_ms, 1));
    return c;
  };
  line(header);
  for (std::size_t f = 0; f < r.results.size(); ++f) {
    std::vector<std::string> cells = {std::to_string(f + 1), std::to_string(r.results[f].train_size),
                                      std::to_string(r.results[f].test_size)};
    for (auto& c : metric_cells(r.results[f].metrics)) cells.push_back(std::move(c));
    line(cells);
  }
  std::vector<std::string> cells = {"mean", "", ""};
  for (auto& c : metric_cells(r.mean)) cells.push_back(std::move(c));
  line(cells);
  out += "# rules " + fixed(r.mean.n_rules, 2) + " +- " + fixed(r.sd_rules, 2) + ", predicates " +
         fixed(r.mean.n_predicates, 2) + " +- " + fixed(r.sd_predicates, 2) + "\n";
  return out;
}

std::string report_jsonl(const CvReport& r, bool timing) {
  std::string out;
  for (std::size_t f = 0; f < r.results.size(); ++f) {
    nlohmann::ordered_json j;
    j["record"] = "fold";
    j["fold"] = f + 1;
    j["train_size"] = r.results[f].train_size;
    j["test_size"] = r.results[f].test_size;
    const nlohmann::ordered_json m = metrics_json(r.results[f].metrics, timing);
    for (const auto& [k, v] : m.items()) j[k] = v;
    out += j.dump() + "\n";
  }
  nlohmann::ordered_json j;
  j["record"] = "summary";
  j["folds"] = r.folds;
  j["seed"] = r.seed;
  j["mode"] = r.multiclass ? "multiclass" : "binary";
  j["metric_positive"] = r.metric_positive.str();
  const nlohmann::ordered_json m = metrics_json(r.mean, timing);
  for (const auto& [k, v] : m.items()) j[k] = v;
  j["rules_sd"] = r.sd_rules;
  j["predicates_sd"] = r.sd_predicates;
  out += j.dump() + "\n";
  return out;
}

}  // namespace foldse
