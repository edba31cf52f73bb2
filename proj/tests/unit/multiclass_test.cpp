#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "foldse/format.hpp"
#include "foldse/multiclass.hpp"
#include "oracle.hpp"

using namespace foldse;

namespace {

TEST(Multiclass, KeyedClassesAreSeparated) {
  // class sizes 4, 3, 2; each keyed by its own value of k
  const Dataset ds = load_csv_text(
      "k,noise,y\n"
      "a,1,red\nb,2,green\na,3,red\nc,1,blue\na,2,red\nb,3,green\nc,2,blue\na,1,red\nb,1,green\n",
      {{"noise"}, "y", std::nullopt});
  const MulticlassModel m = fit_multiclass(ds, {});
  ASSERT_GE(m.rules.size(), 2u);
  ASSERT_LE(m.rules.size(), 3u);
  EXPECT_EQ(m.rules[0].first.str(), "red");
  EXPECT_EQ(m.rules[1].first.str(), "green");
  EXPECT_EQ(m.fallback.str(), "red");
  for (const Row& r : ds.rows()) EXPECT_EQ(predict_multiclass(m, r.values, 2), r.label);
}

TEST(Multiclass, FirstMatchAndFallback) {
  MulticlassModel m;
  m.rules.emplace_back(Symbol::intern("one"), Rule{Symbol::intern("one"), {{0, Op::kLessEq, Value::numeric(5)}}, {}});
  m.rules.emplace_back(Symbol::intern("three"),
                       Rule{Symbol::intern("three"), {{0, Op::kLessEq, Value::numeric(9)}}, {}});
  m.fallback = Symbol::intern("zero");
  const std::vector<Value> both = {Value::numeric(1)};
  const std::vector<Value> none = {Value::missing()};
  EXPECT_EQ(predict_multiclass(m, both, 1).str(), "one");
  EXPECT_EQ(predict_multiclass(m, none, 1).str(), "zero");
  EXPECT_THROW(predict_multiclass(m, both, 2), Error);
}

TEST(Multiclass, SingleLabelIsUnconditional) {
  const Dataset ds = load_csv_text("a,y\n1,p\n2,p\n", {{"a"}, "y", std::nullopt});
  const MulticlassModel m = fit_multiclass(ds, {});
  ASSERT_EQ(m.rules.size(), 1u);
  EXPECT_TRUE(m.rules[0].second.defaults.empty());
}

// The flattened program and the rule list make the same call as a plain
// first-match interpreter over the nested rules.
TEST(Multiclass, AgreesWithInterpreter) {
  oracle::Gen g(321);
  for (int trial = 0; trial < 40; ++trial) {
    const Dataset ds = g.dataset(200, 4, g.uniform(2, 4));
    const MulticlassModel m = fit_multiclass(ds, {});
    const Program p = flatten(m, ds.schema());
    for (const Row& r : ds.rows()) {
      Symbol want = m.fallback;
      for (const auto& [cls, rule] : m.rules) {
        if (oracle::covers(rule, r.values)) {
          want = cls;
          break;
        }
      }
      EXPECT_EQ(predict_multiclass(m, r.values, 4), want);
      EXPECT_EQ(evaluate(p, r.values), want);
    }
  }
}

// Each round removes at least one target example, so the number of rules is
// bounded by the dataset size and no label is targeted after it is exhausted.
TEST(Multiclass, RoundsShrinkTheTarget) {
  oracle::Gen g(55);
  for (int trial = 0; trial < 60; ++trial) {
    const Dataset ds = g.dataset(static_cast<std::size_t>(g.uniform(1, 80)), 3, 3);
    const MulticlassModel m = fit_multiclass(ds, {0.5, Tail::count(0)});
    EXPECT_LE(m.rules.size(), ds.size());
    Examples remaining = ds.examples();
    for (const auto& [cls, rule] : m.rules) {
      Examples next;
      std::size_t removed = 0;
      for (const Row* r : remaining) {
        if (r->label == cls && covers(rule, *r)) {
          ++removed;
        } else {
          next.push_back(r);
        }
      }
      EXPECT_GT(removed, 0u);
      remaining = std::move(next);
    }
  }
}

TEST(Multiclass, TwoClassesMatchBinaryWhenRulesCoincide) {
  const Dataset ds = fixtures::birds_anonymous();
  const Program binary = fit(ds, {});
  const MulticlassModel m = fit_multiclass(ds, {});
  // with two labels tied, the first listed label is targeted first
  ASSERT_FALSE(m.rules.empty());
  for (const Row& r : ds.rows()) EXPECT_EQ(predict_multiclass(m, r.values, 3), evaluate(binary, r.values));
}

}  // namespace
