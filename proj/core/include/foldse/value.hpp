#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>

namespace foldse {

// Interned string handle. Ids are process-wide and stable, so two symbols
// compare equal iff their text is identical.
class Symbol {
 public:
  constexpr Symbol() = default;

  static Symbol intern(std::string_view text);

  const std::string& str() const;
  std::uint32_t id() const { return id_; }
  bool valid() const { return id_ != kInvalid; }

  friend bool operator==(Symbol a, Symbol b) { return a.id_ == b.id_; }
  friend auto operator<=>(Symbol a, Symbol b) { return a.id_ <=> b.id_; }

 private:
  static constexpr std::uint32_t kInvalid = 0xffffffffu;
  explicit constexpr Symbol(std::uint32_t id) : id_(id) {}
  std::uint32_t id_ = kInvalid;
};

enum class ValueKind : std::uint8_t { kNumeric, kCategorical, kMissing };

// One cell of a tabular dataset. Missing behaves as a categorical value that
// is distinct from every other value.
class Value {
 public:
  Value() = default;

  static Value numeric(double v) {
    Value out;
    out.kind_ = ValueKind::kNumeric;
    out.number_ = v;
    return out;
  }
  static Value categorical(Symbol s) {
    Value out;
    out.kind_ = ValueKind::kCategorical;
    out.symbol_ = s;
    return out;
  }
  static Value categorical(std::string_view s) { return categorical(Symbol::intern(s)); }
  static Value missing() { return Value(); }

  ValueKind kind() const { return kind_; }
  bool is_numeric() const { return kind_ == ValueKind::kNumeric; }
  bool is_categorical() const { return kind_ == ValueKind::kCategorical; }
  bool is_missing() const { return kind_ == ValueKind::kMissing; }
  // Categorical or missing.
  bool is_symbolic() const { return kind_ != ValueKind::kNumeric; }

  double number() const { return number_; }
  Symbol symbol() const { return symbol_; }

  // Identity: same kind and same payload. Numeric payloads compare exactly.
  friend bool operator==(const Value& a, const Value& b) {
    if (a.kind_ != b.kind_) return false;
    switch (a.kind_) {
      case ValueKind::kNumeric:
        return a.number_ == b.number_;
      case ValueKind::kCategorical:
        return a.symbol_ == b.symbol_;
      case ValueKind::kMissing:
        return true;
    }
    return false;
  }

  std::size_t hash() const;

 private:
  ValueKind kind_ = ValueKind::kMissing;
  Symbol symbol_;
  double number_ = 0.0;
};

std::string to_string(const Value& v);

// Comparison operators usable in literals. kNotLessEq and kNotGreater are the
// complements of kLessEq and kGreater over every value (including
// non-numeric ones).
enum class Op : std::uint8_t { kEq, kNotEq, kLessEq, kGreater, kNotLessEq, kNotGreater };

std::string_view op_name(Op op);
bool is_numeric_op(Op op);

// Mixed-type comparison shared by training and prediction. Total over all
// value pairs.
bool compare(const Value& v, Op op, const Value& threshold);

}  // namespace foldse

template <>
struct std::hash<foldse::Symbol> {
  std::size_t operator()(foldse::Symbol s) const noexcept { return std::hash<std::uint32_t>{}(s.id()); }
};

template <>
struct std::hash<foldse::Value> {
  std::size_t operator()(const foldse::Value& v) const noexcept { return v.hash(); }
};
