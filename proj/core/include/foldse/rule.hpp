#pragma once

#include <span>
#include <vector>

#include "foldse/dataset.hpp"
#include "foldse/heuristics.hpp"

namespace foldse {

// A default rule: holds when every default literal holds and no exception
// rule holds. Exceptions are themselves default rules (nested theories).
struct Rule {
  Symbol head;  // class symbol for top-level rules; unused on exceptions
  std::vector<Literal> defaults;
  std::vector<Rule> exceptions;

  friend bool operator==(const Rule&, const Rule&) = default;
};

bool covers(const Rule& r, std::span<const Value> row);
inline bool covers(const Rule& r, const Row& row) { return covers(r, row.values); }
// Covered examples when `which` is true, uncovered ones otherwise. Order is
// preserved.
Examples cover(const Rule& r, ExampleSpan examples, bool which);

}  // namespace foldse
