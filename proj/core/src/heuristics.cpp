#include "foldse/heuristics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <unordered_map>

#include "foldse/format.hpp"

namespace foldse {
namespace {

constexpr double kInvalid = -std::numeric_limits<double>::infinity();

constexpr Op kNumericOps[] = {Op::kLessEq, Op::kGreater, Op::kNotLessEq, Op::kNotGreater};
constexpr Op kCategoricalOps[] = {Op::kEq, Op::kNotEq};

}  // namespace

double mgi(const ConfusionCounts& c) {
  const std::int64_t total = c.total();
  if (total <= 0) throw Error("no examples");
  if (c.tp < c.fp) return kInvalid;
  const double tp = static_cast<double>(c.tp);
  const double fn = static_cast<double>(c.fn);
  const double tn = static_cast<double>(c.tn);
  const double fp = static_cast<double>(c.fp);
  return -(std::sqrt(tp * fp) + std::sqrt(tn * fn)) / static_cast<double>(total);
}

bool contains(const LiteralSet& set, const Literal& lit) {
  return std::find(set.begin(), set.end(), lit) != set.end();
}

AttributeTally tally_attribute(ExampleSpan pos, ExampleSpan neg, std::size_t feature) {
  AttributeTally t;
  std::unordered_map<double, std::size_t> numeric_index;
  std::unordered_map<Value, std::size_t> categorical_index;

  auto add = [&](const Row* row, bool positive) {
    const Value& v = row->values[feature];
    if (v.is_numeric()) {
      const double x = v.number() + 0.0;  // folds -0.0 into +0.0
      auto [it, fresh] = numeric_index.try_emplace(x, t.numeric_values.size());
      if (fresh) {
        t.numeric_values.push_back(x);
        t.numeric_pos.push_back(0);
        t.numeric_neg.push_back(0);
      }
      ++(positive ? t.numeric_pos : t.numeric_neg)[it->second];
      ++(positive ? t.total_numeric_pos : t.total_numeric_neg);
    } else {
      auto [it, fresh] = categorical_index.try_emplace(v, t.categorical_values.size());
      if (fresh) {
        t.categorical_values.push_back(v);
        t.categorical_pos.push_back(0);
        t.categorical_neg.push_back(0);
      }
      ++(positive ? t.categorical_pos : t.categorical_neg)[it->second];
      ++(positive ? t.total_categorical_pos : t.total_categorical_neg);
    }
  };
  for (const Row* r : pos) add(r, true);
  for (const Row* r : neg) add(r, false);

  // sort numeric uniques, carrying their counts along
  std::vector<std::size_t> order(t.numeric_values.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return t.numeric_values[a] < t.numeric_values[b]; });
  std::vector<double> values;
  std::vector<std::int64_t> np, nn;
  values.reserve(order.size());
  np.reserve(order.size());
  nn.reserve(order.size());
  for (std::size_t i : order) {
    values.push_back(t.numeric_values[i]);
    np.push_back(t.numeric_pos[i]);
    nn.push_back(t.numeric_neg[i]);
  }
  t.numeric_values = std::move(values);
  t.numeric_pos = std::move(np);
  t.numeric_neg = std::move(nn);

  t.prefix_pos.resize(t.numeric_pos.size());
  t.prefix_neg.resize(t.numeric_neg.size());
  std::partial_sum(t.numeric_pos.begin(), t.numeric_pos.end(), t.prefix_pos.begin());
  std::partial_sum(t.numeric_neg.begin(), t.numeric_neg.end(), t.prefix_neg.begin());
  return t;
}

ConfusionCounts candidate_counts(const AttributeTally& t, std::size_t k, Op op) {
  const std::int64_t np = t.total_numeric_pos;
  const std::int64_t nn = t.total_numeric_neg;
  const std::int64_t cp = t.total_categorical_pos;
  const std::int64_t cn = t.total_categorical_neg;
  switch (op) {
    case Op::kLessEq: {
      const std::int64_t p = t.prefix_pos[k], n = t.prefix_neg[k];
      return {p, np - p + cp, nn - n + cn, n};
    }
    case Op::kGreater: {
      const std::int64_t p = t.prefix_pos[k], n = t.prefix_neg[k];
      return {np - p, p + cp, n + cn, nn - n};
    }
    case Op::kNotLessEq: {
      const std::int64_t p = t.prefix_pos[k], n = t.prefix_neg[k];
      return {np - p + cp, p, n, nn - n + cn};
    }
    case Op::kNotGreater: {
      const std::int64_t p = t.prefix_pos[k], n = t.prefix_neg[k];
      return {p + cp, np - p, nn - n, n + cn};
    }
    case Op::kEq: {
      const std::int64_t p = t.categorical_pos[k], n = t.categorical_neg[k];
      return {p, cp - p + np, cn - n + nn, n};
    }
    case Op::kNotEq: {
      const std::int64_t p = t.categorical_pos[k], n = t.categorical_neg[k];
      return {cp - p + np, p, n, cn - n + nn};
    }
  }
  return {};
}

namespace {
// A constant column cannot split anything.
bool splittable(const AttributeTally& t) { return t.numeric_values.size() + t.categorical_values.size() > 1; }
}  // namespace

std::vector<ScoredLiteral> score_candidates(const AttributeTally& t, std::size_t feature) {
  std::vector<ScoredLiteral> out;
  if (!splittable(t)) return out;
  out.reserve(4 * t.numeric_values.size() + 2 * t.categorical_values.size());
  for (std::size_t k = 0; k < t.numeric_values.size(); ++k) {
    for (Op op : kNumericOps) {
      out.push_back({Literal{feature, op, Value::numeric(t.numeric_values[k])}, mgi(candidate_counts(t, k, op))});
    }
  }
  for (std::size_t k = 0; k < t.categorical_values.size(); ++k) {
    for (Op op : kCategoricalOps) {
      out.push_back({Literal{feature, op, t.categorical_values[k]}, mgi(candidate_counts(t, k, op))});
    }
  }
  return out;
}

ScoredLiteral best_literal_on_attr(ExampleSpan pos, ExampleSpan neg, std::size_t feature, const LiteralSet& used) {
  ScoredLiteral best;
  if (pos.empty() && neg.empty()) return best;
  const AttributeTally t = tally_attribute(pos, neg, feature);
  if (!splittable(t)) return best;

  auto consider = [&](Op op, std::size_t k, const Value& threshold) {
    const double h = mgi(candidate_counts(t, k, op));
    if (!(best.score < h)) return;
    Literal lit{feature, op, threshold};
    if (contains(used, lit)) return;
    best.literal = std::move(lit);
    best.score = h;
  };
  for (std::size_t k = 0; k < t.numeric_values.size(); ++k) {
    const Value x = Value::numeric(t.numeric_values[k]);
    for (Op op : kNumericOps) consider(op, k, x);
  }
  for (std::size_t k = 0; k < t.categorical_values.size(); ++k) {
    for (Op op : kCategoricalOps) consider(op, k, t.categorical_values[k]);
  }
  return best;
}

ScoredLiteral find_best_literal(ExampleSpan pos, ExampleSpan neg, std::size_t num_features, const LiteralSet& used) {
  ScoredLiteral best;
  for (std::size_t i = 0; i < num_features; ++i) {
    ScoredLiteral cand = best_literal_on_attr(pos, neg, i, used);
    if (cand.valid() && best.score < cand.score) best = std::move(cand);
  }
  return best;
}

}  // namespace foldse
