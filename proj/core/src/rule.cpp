#include "foldse/rule.hpp"

#include <algorithm>

namespace foldse {

bool covers(const Rule& r, std::span<const Value> row) {
  for (const Literal& lit : r.defaults) {
    if (!lit.holds(row)) return false;
  }
  return std::none_of(r.exceptions.begin(), r.exceptions.end(), [&](const Rule& e) { return covers(e, row); });
}

Examples cover(const Rule& r, ExampleSpan examples, bool which) {
  Examples out;
  for (const Row* row : examples) {
    if (covers(r, *row) == which) out.push_back(row);
  }
  return out;
}

}  // namespace foldse
