#include "foldse/value.hpp"

#include <deque>
#include <mutex>
#include <shared_mutex>
#include <stdexcept>
#include <unordered_map>

#include "foldse/format.hpp"

namespace foldse {
namespace {

struct SymbolPool {
  std::shared_mutex mutex;
  std::deque<std::string> texts;
  std::unordered_map<std::string_view, std::uint32_t> index;
};

SymbolPool& pool() {
  static SymbolPool instance;
  return instance;
}

}  // namespace

Symbol Symbol::intern(std::string_view text) {
  SymbolPool& p = pool();
  {
    std::shared_lock lock(p.mutex);
    if (auto it = p.index.find(text); it != p.index.end()) return Symbol(it->second);
  }
  std::unique_lock lock(p.mutex);
  if (auto it = p.index.find(text); it != p.index.end()) return Symbol(it->second);
  const auto id = static_cast<std::uint32_t>(p.texts.size());
  p.texts.emplace_back(text);
  p.index.emplace(p.texts.back(), id);
  return Symbol(id);
}

const std::string& Symbol::str() const {
  static const std::string kEmpty;
  if (!valid()) return kEmpty;
  SymbolPool& p = pool();
  std::shared_lock lock(p.mutex);
  // deque never relocates existing elements on push_back
  return p.texts[id_];
}

std::size_t Value::hash() const {
  std::size_t h = static_cast<std::size_t>(kind_) * 0x9e3779b97f4a7c15ull;
  switch (kind_) {
    case ValueKind::kNumeric:
      // +0.0 and -0.0 are equal, so they must hash alike
      h ^= number_ == 0.0 ? 0 : std::hash<double>{}(number_);
      break;
    case ValueKind::kCategorical:
      h ^= std::hash<Symbol>{}(symbol_);
      break;
    case ValueKind::kMissing:
      break;
  }
  return h;
}

std::string to_string(const Value& v) {
  switch (v.kind()) {
    case ValueKind::kNumeric:
      return format_number(v.number());
    case ValueKind::kCategorical:
      return v.symbol().str();
    case ValueKind::kMissing:
      return "NaN";
  }
  return {};
}

std::string_view op_name(Op op) {
  switch (op) {
    case Op::kEq:
      return "=";
    case Op::kNotEq:
      return "!=";
    case Op::kLessEq:
      return "<=";
    case Op::kGreater:
      return ">";
    case Op::kNotLessEq:
      return "!<=";
    case Op::kNotGreater:
      return "!>";
  }
  return "?";
}

bool is_numeric_op(Op op) { return op != Op::kEq && op != Op::kNotEq; }

bool compare(const Value& v, Op op, const Value& threshold) {
  switch (op) {
    case Op::kEq:
      return v == threshold;
    case Op::kNotEq:
      return !(v == threshold);
    case Op::kLessEq:
      return v.is_numeric() && threshold.is_numeric() && v.number() <= threshold.number();
    case Op::kGreater:
      return v.is_numeric() && threshold.is_numeric() && v.number() > threshold.number();
    case Op::kNotLessEq:
      return !compare(v, Op::kLessEq, threshold);
    case Op::kNotGreater:
      return !compare(v, Op::kGreater, threshold);
  }
  return false;
}

}  // namespace foldse
