#include "oracle.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace oracle {

bool holds(const Value& v, Op op, const Value& t) {
  const bool both_numeric = v.is_numeric() && t.is_numeric();
  bool same = v.kind() == t.kind();
  if (same && v.is_numeric()) same = v.number() == t.number();
  if (same && v.is_categorical()) same = v.symbol() == t.symbol();
  switch (op) {
    case Op::kEq:
      return same;
    case Op::kNotEq:
      return !same;
    case Op::kLessEq:
      return both_numeric && v.number() <= t.number();
    case Op::kGreater:
      return both_numeric && v.number() > t.number();
    case Op::kNotLessEq:
      return !(both_numeric && v.number() <= t.number());
    case Op::kNotGreater:
      return !(both_numeric && v.number() > t.number());
  }
  return false;
}

double mgi(std::int64_t tp, std::int64_t fn, std::int64_t tn, std::int64_t fp) {
  if (tp < fp) return -std::numeric_limits<double>::infinity();
  const double n = static_cast<double>(tp + fn + tn + fp);
  return -(std::sqrt(static_cast<double>(tp) * static_cast<double>(fp)) +
           std::sqrt(static_cast<double>(tn) * static_cast<double>(fn))) /
         n;
}

ConfusionCounts count(const std::vector<const Row*>& pos, const std::vector<const Row*>& neg, const Literal& lit) {
  ConfusionCounts c;
  for (const Row* r : pos) (holds(r->values[lit.feature], lit.op, lit.threshold) ? c.tp : c.fn)++;
  for (const Row* r : neg) (holds(r->values[lit.feature], lit.op, lit.threshold) ? c.fp : c.tn)++;
  return c;
}

Best best_on_feature(const std::vector<const Row*>& pos, const std::vector<const Row*>& neg, std::size_t feature,
                     const std::vector<Literal>& used) {
  std::vector<double> nums;
  std::vector<Value> cats;
  auto collect = [&](const std::vector<const Row*>& rows) {
    for (const Row* r : rows) {
      const Value& v = r->values[feature];
      if (v.is_numeric()) {
        if (std::find(nums.begin(), nums.end(), v.number()) == nums.end()) nums.push_back(v.number());
      } else if (std::find(cats.begin(), cats.end(), v) == cats.end()) {
        cats.push_back(v);
      }
    }
  };
  collect(pos);
  collect(neg);
  std::sort(nums.begin(), nums.end());
  if (nums.size() + cats.size() < 2) return {};

  std::vector<Literal> candidates;
  for (double x : nums) {
    for (Op op : {Op::kLessEq, Op::kGreater, Op::kNotLessEq, Op::kNotGreater}) {
      candidates.push_back({feature, op, Value::numeric(x)});
    }
  }
  for (const Value& c : cats) {
    for (Op op : {Op::kEq, Op::kNotEq}) candidates.push_back({feature, op, c});
  }

  Best best;
  for (const Literal& lit : candidates) {
    if (std::find(used.begin(), used.end(), lit) != used.end()) continue;
    const ConfusionCounts c = count(pos, neg, lit);
    const double h = mgi(c.tp, c.fn, c.tn, c.fp);
    if (h > best.score) {
      best = {true, lit, h};
    }
  }
  return best;
}

Best best_literal(const std::vector<const Row*>& pos, const std::vector<const Row*>& neg, std::size_t num_features,
                  const std::vector<Literal>& used) {
  Best best;
  for (std::size_t f = 0; f < num_features; ++f) {
    Best b = best_on_feature(pos, neg, f, used);
    if (b.valid && b.score > best.score) best = b;
  }
  return best;
}

bool covers(const Rule& r, const std::vector<Value>& row) {
  for (const Literal& lit : r.defaults) {
    if (!holds(row[lit.feature], lit.op, lit.threshold)) return false;
  }
  for (const Rule& e : r.exceptions) {
    if (covers(e, row)) return false;
  }
  return true;
}

bool clause_holds(const foldse::Program& p, const foldse::FlatRule& c, const std::vector<Value>& row) {
  for (const foldse::BodyItem& item : c.body) {
    if (item.kind == foldse::BodyItem::Kind::kLiteral) {
      if (!holds(row[item.literal.feature], item.literal.op, item.literal.threshold)) return false;
      continue;
    }
    const foldse::FlatRule* def = nullptr;
    for (const foldse::FlatRule& r : p.rules) {
      if (r.ab == item.ab) def = &r;
    }
    if (def == nullptr || clause_holds(p, *def, row)) return false;
  }
  return true;
}

Value Gen::value(int numeric_levels, int categories, double p_numeric, double p_missing) {
  if (coin(p_missing)) return Value::missing();
  if (coin(p_numeric)) return Value::numeric(uniform(0, numeric_levels - 1) * 0.5);
  return Value::categorical(std::string(1, static_cast<char>('a' + uniform(0, categories - 1))));
}

foldse::Dataset Gen::dataset(std::size_t rows, std::size_t features, int num_classes) {
  foldse::Schema s;
  for (std::size_t f = 0; f < features; ++f) {
    s.feature_names.push_back(foldse::Symbol::intern("f" + std::to_string(f)));
    s.numeric.push_back(true);
  }
  s.label = foldse::Symbol::intern("y");
  std::vector<foldse::Row> data;
  // per-feature shape so some columns are purely numeric or categorical
  std::vector<double> p_numeric(features);
  for (double& p : p_numeric) p = std::vector<double>{0.0, 0.5, 0.9, 1.0}[static_cast<std::size_t>(uniform(0, 3))];
  for (std::size_t i = 0; i < rows; ++i) {
    foldse::Row r;
    for (std::size_t f = 0; f < features; ++f) r.values.push_back(value(uniform(2, 8), 3, p_numeric[f], 0.1));
    r.label = foldse::Symbol::intern("c" + std::to_string(uniform(0, num_classes - 1)));
    data.push_back(std::move(r));
  }
  std::vector<foldse::Symbol> order;
  for (const foldse::Row& r : data) {
    if (std::find(order.begin(), order.end(), r.label) == order.end()) order.push_back(r.label);
  }
  s.class_labels = order;
  s.positive_class = order.front();
  s.default_class = order.size() > 1 ? order[1] : order.front();
  return foldse::Dataset(std::move(s), std::move(data));
}

Literal Gen::literal(std::size_t features) {
  const auto f = static_cast<std::size_t>(uniform(0, static_cast<int>(features) - 1));
  const int op = uniform(0, 5);
  if (op < 2) {
    return {f, op == 0 ? Op::kEq : Op::kNotEq,
            coin(0.2) ? Value::missing() : Value::categorical(std::string(1, static_cast<char>('a' + uniform(0, 2))))};
  }
  const Op ops[] = {Op::kLessEq, Op::kGreater, Op::kNotLessEq, Op::kNotGreater};
  return {f, ops[op - 2], Value::numeric(uniform(0, 6) * 0.5)};
}

Rule Gen::rule(std::size_t features, int depth) {
  Rule r;
  const int n = uniform(0, 3);
  for (int i = 0; i < n; ++i) r.defaults.push_back(literal(features));
  if (depth > 0) {
    const int e = uniform(0, 2);
    for (int i = 0; i < e; ++i) r.exceptions.push_back(rule(features, depth - 1));
  }
  return r;
}

}  // namespace oracle
