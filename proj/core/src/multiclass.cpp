#include "foldse/multiclass.hpp"

#include <unordered_map>

#include "foldse/format.hpp"

namespace foldse {
namespace {

Symbol most_frequent(const Examples& rows, const std::vector<Symbol>& order) {
  std::unordered_map<Symbol, std::size_t> counts;
  for (const Row* r : rows) ++counts[r->label];
  Symbol best;
  std::size_t best_n = 0;
  for (Symbol c : order) {
    auto it = counts.find(c);
    if (it != counts.end() && it->second > best_n) {
      best = c;
      best_n = it->second;
    }
  }
  return best;
}

}  // namespace

MulticlassModel fit_multiclass(const Dataset& ds, const Hyperparams& hp, LearnStats* stats) {
  const Schema& schema = ds.schema();
  MulticlassModel m;
  Examples remaining = ds.examples();
  m.fallback = most_frequent(remaining, schema.class_labels);

  Learner learner(schema.num_features(), hp.ratio, hp.tail.resolve(ds.size()));
  while (!remaining.empty()) {
    const Symbol target = most_frequent(remaining, schema.class_labels);
    Examples pos, neg;
    for (const Row* r : remaining) (r->label == target ? pos : neg).push_back(r);
    if (neg.empty()) {
      // the unconditional rule already separates a single-label remainder
      m.rules.emplace_back(target, Rule{target, {}, {}});
      break;
    }
    std::optional<Rule> rule = learner.learn_rule(pos, neg, {});
    if (!rule) break;
    rule->head = target;
    std::size_t covered = 0;
    Examples next;
    next.reserve(remaining.size());
    for (const Row* r : remaining) {
      if (r->label == target && covers(*rule, *r)) {
        ++covered;
      } else {
        next.push_back(r);
      }
    }
    if (covered == 0) break;
    remaining = std::move(next);
    m.rules.emplace_back(target, std::move(*rule));
  }
  if (stats) *stats = learner.stats();
  return m;
}

Symbol predict_multiclass(const MulticlassModel& m, std::span<const Value> row, std::size_t num_features) {
  if (row.size() != num_features) {
    throw Error("row has " + std::to_string(row.size()) + " values, model expects " + std::to_string(num_features));
  }
  for (const auto& [cls, rule] : m.rules) {
    if (covers(rule, row)) return cls;
  }
  return m.fallback;
}

}  // namespace foldse
