#include "foldse/learner.hpp"

#include <cmath>

#include "foldse/format.hpp"

namespace foldse {

Tail Tail::fraction(double f) {
  if (!(f >= 0.0) || !std::isfinite(f)) throw Error("tail fraction must be a non-negative number");
  return Tail(true, f);
}

Tail Tail::parse(std::string_view text) {
  text = trim(text);
  const bool percent = !text.empty() && text.back() == '%';
  if (percent) text.remove_suffix(1);
  const auto v = parse_number(text);
  if (!v || *v < 0.0) throw Error("invalid tail '" + std::string(text) + "': expected N or P%");
  if (percent) return fraction(*v / 100.0);
  if (*v != std::floor(*v)) throw Error("invalid tail '" + std::string(text) + "': count must be an integer");
  return count(static_cast<std::size_t>(*v));
}

std::size_t Tail::resolve(std::size_t training_size) const {
  if (!fraction_) return static_cast<std::size_t>(value_);
  return static_cast<std::size_t>(std::ceil(value_ * static_cast<double>(training_size)));
}

Learner::Learner(std::size_t num_features, double ratio, std::size_t tail_count, std::size_t step_budget)
    : num_features_(num_features), ratio_(ratio), tail_(tail_count), budget_(step_budget) {
  if (!(ratio >= 0.0)) throw Error("ratio must be non-negative");
}

ScoredLiteral Learner::search(ExampleSpan pos, ExampleSpan neg, const LiteralSet& used) {
  if (budget_ != 0 && stats_.literal_searches >= budget_) throw Error("step budget exceeded");
  ++stats_.literal_searches;
  return find_best_literal(pos, neg, num_features_, used);
}

std::optional<Rule> Learner::learn_rule(ExampleSpan pos_in, ExampleSpan neg_in, const LiteralSet& used) {
  Examples pos(pos_in.begin(), pos_in.end());
  Examples neg(neg_in.begin(), neg_in.end());
  Rule r;
  LiteralSet excluded = used;
  while (true) {
    ScoredLiteral best = search(pos, neg, excluded);
    if (!best.valid()) break;
    r.defaults.push_back(*best.literal);
    excluded.push_back(*best.literal);
    pos = cover(r, pos, true);
    neg = cover(r, neg, true);
    if (static_cast<double>(neg.size()) <= static_cast<double>(pos.size()) * ratio_) {
      r.exceptions = learn_rule_set(neg, pos, excluded);
      break;
    }
  }
  if (tail_ > 0 && cover(r, pos, true).size() < tail_) {
    ++stats_.rules_pruned;
    return std::nullopt;
  }
  return r;
}

std::vector<Rule> Learner::learn_rule_set(ExampleSpan pos_in, ExampleSpan neg, const LiteralSet& used) {
  std::vector<Rule> rules;
  Examples pos(pos_in.begin(), pos_in.end());
  while (!pos.empty()) {
    std::optional<Rule> r = learn_rule(pos, neg, used);
    if (!r) break;
    Examples uncovered = cover(*r, pos, false);
    if (uncovered.size() == pos.size()) break;
    pos = std::move(uncovered);
    rules.push_back(std::move(*r));
  }
  return rules;
}

std::optional<Rule> learn_rule(ExampleSpan pos, ExampleSpan neg, const LiteralSet& used, std::size_t num_features,
                               const Hyperparams& hp) {
  Learner learner(num_features, hp.ratio, hp.tail.resolve(pos.size() + neg.size()));
  return learner.learn_rule(pos, neg, used);
}

std::vector<Rule> learn_rule_set(ExampleSpan pos, ExampleSpan neg, const LiteralSet& used, std::size_t num_features,
                                 const Hyperparams& hp) {
  Learner learner(num_features, hp.ratio, hp.tail.resolve(pos.size() + neg.size()));
  return learner.learn_rule_set(pos, neg, used);
}

Program fit(const Dataset& ds, const Hyperparams& hp, LearnStats* stats) {
  const Schema& schema = ds.schema();
  if (schema.class_labels.size() > 2) {
    throw Error("dataset has " + std::to_string(schema.class_labels.size()) +
                " class labels; use multi-class training instead");
  }
  Examples pos, neg;
  for (const Row& row : ds.rows()) (row.label == schema.positive_class ? pos : neg).push_back(&row);

  Learner learner(schema.num_features(), hp.ratio, hp.tail.resolve(ds.size()));
  std::vector<Rule> rules;
  if (neg.empty()) {
    rules.push_back(Rule{});
  } else {
    rules = learner.learn_rule_set(pos, neg, {});
  }
  for (Rule& r : rules) r.head = schema.positive_class;
  if (stats) *stats = learner.stats();
  return flatten(rules, schema);
}

}  // namespace foldse
