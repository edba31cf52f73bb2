#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

#include "foldse/dataset.hpp"
#include "foldse/value.hpp"

namespace foldse {

struct ConfusionCounts {
  std::int64_t tp = 0;
  std::int64_t fn = 0;
  std::int64_t tn = 0;
  std::int64_t fp = 0;

  std::int64_t total() const { return tp + fn + tn + fp; }
  friend bool operator==(const ConfusionCounts&, const ConfusionCounts&) = default;
};

// Gini-style literal score in [-1, 0], or -inf when the literal admits more
// false positives than true positives. Throws on an all-zero input.
double mgi(const ConfusionCounts& c);

struct Literal {
  std::size_t feature = 0;
  Op op = Op::kEq;
  Value threshold;

  bool holds(std::span<const Value> row) const { return compare(row[feature], op, threshold); }
  bool holds(const Row& row) const { return holds(row.values); }
  friend bool operator==(const Literal&, const Literal&) = default;
};

using LiteralSet = std::vector<Literal>;

bool contains(const LiteralSet& set, const Literal& lit);

struct ScoredLiteral {
  std::optional<Literal> literal;  // nullopt when no candidate is valid
  double score = -std::numeric_limits<double>::infinity();

  bool valid() const { return literal.has_value(); }
};

// Per-value class counts for one feature. Numeric values are kept ascending
// with inclusive prefix sums; everything else (categorical and missing) is kept
// in first-occurrence order, positives scanned before negatives.
struct AttributeTally {
  std::vector<double> numeric_values;
  std::vector<std::int64_t> numeric_pos;  // count with value == x
  std::vector<std::int64_t> numeric_neg;
  std::vector<std::int64_t> prefix_pos;  // count with value <= x
  std::vector<std::int64_t> prefix_neg;
  std::vector<Value> categorical_values;
  std::vector<std::int64_t> categorical_pos;
  std::vector<std::int64_t> categorical_neg;
  std::int64_t total_numeric_pos = 0;
  std::int64_t total_numeric_neg = 0;
  std::int64_t total_categorical_pos = 0;
  std::int64_t total_categorical_neg = 0;
};

AttributeTally tally_attribute(ExampleSpan pos, ExampleSpan neg, std::size_t feature);

// Confusion counts implied by a literal on the k-th numeric unique (ops <=, >,
// !<=, !>) or the k-th categorical unique (ops =, !=).
ConfusionCounts candidate_counts(const AttributeTally& t, std::size_t k, Op op);

// Every candidate in enumeration order: numeric uniques ascending with ops
// <=, >, !<=, !>, then categorical uniques with =, !=. Empty when the feature
// takes a single value (missing included).
std::vector<ScoredLiteral> score_candidates(const AttributeTally& t, std::size_t feature);

// Best candidate on one feature not already in `used`; first maximum wins.
// Invalid when the feature is constant over pos and neg.
ScoredLiteral best_literal_on_attr(ExampleSpan pos, ExampleSpan neg, std::size_t feature, const LiteralSet& used);

// Best candidate over all features; the lowest feature index wins ties.
ScoredLiteral find_best_literal(ExampleSpan pos, ExampleSpan neg, std::size_t num_features, const LiteralSet& used);

}  // namespace foldse
