#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "foldse/dataset.hpp"
#include "foldse/heuristics.hpp"
#include "foldse/program.hpp"
#include "foldse/rule.hpp"

namespace foldse {

// Minimum number of training examples a finished rule has to cover. Either an
// absolute count or a fraction of the training set size.
class Tail {
 public:
  static Tail count(std::size_t n) { return Tail(false, static_cast<double>(n)); }
  static Tail fraction(double f);
  // "12" is a count, "0.5%" a percentage of the training size.
  static Tail parse(std::string_view text);

  bool is_fraction() const { return fraction_; }
  double value() const { return value_; }
  std::size_t resolve(std::size_t training_size) const;

  friend bool operator==(const Tail&, const Tail&) = default;

 private:
  Tail(bool fraction, double value) : fraction_(fraction), value_(value) {}
  bool fraction_;
  double value_;
};

struct Hyperparams {
  double ratio = 0.5;
  Tail tail = Tail::fraction(0.005);
};

struct LearnStats {
  std::size_t literal_searches = 0;
  std::size_t rules_pruned = 0;
};

// Sequential-covering learner with exception learning. One instance serves a
// single training run; the tail is resolved once against the training size.
class Learner {
 public:
  // `step_budget` bounds the number of literal searches (0 = unbounded);
  // exceeding it throws.
  Learner(std::size_t num_features, double ratio, std::size_t tail_count, std::size_t step_budget = 0);

  std::optional<Rule> learn_rule(ExampleSpan pos, ExampleSpan neg, const LiteralSet& used);
  std::vector<Rule> learn_rule_set(ExampleSpan pos, ExampleSpan neg, const LiteralSet& used);

  const LearnStats& stats() const { return stats_; }

 private:
  ScoredLiteral search(ExampleSpan pos, ExampleSpan neg, const LiteralSet& used);

  std::size_t num_features_;
  double ratio_;
  std::size_t tail_;
  std::size_t budget_;
  LearnStats stats_;
};

// Convenience wrappers; the tail is resolved against |pos| + |neg|.
std::optional<Rule> learn_rule(ExampleSpan pos, ExampleSpan neg, const LiteralSet& used, std::size_t num_features,
                               const Hyperparams& hp);
std::vector<Rule> learn_rule_set(ExampleSpan pos, ExampleSpan neg, const LiteralSet& used, std::size_t num_features,
                                 const Hyperparams& hp);

// Binary training: rows of the positive class against all others. Throws when
// the dataset has more than two labels. A single-label dataset yields one
// unconditional rule.
Program fit(const Dataset& ds, const Hyperparams& hp, LearnStats* stats = nullptr);

}  // namespace foldse
