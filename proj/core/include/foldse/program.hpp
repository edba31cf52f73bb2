#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "foldse/dataset.hpp"
#include "foldse/heuristics.hpp"
#include "foldse/rule.hpp"

namespace foldse {

enum class Mode { kBinary, kMulticlass };

struct BodyItem {
  enum class Kind { kLiteral, kNotAb };

  Kind kind = Kind::kLiteral;
  Literal literal;     // kLiteral
  std::size_t ab = 0;  // kNotAb: id of the referenced abN predicate

  static BodyItem of(Literal lit) { return {Kind::kLiteral, std::move(lit), 0}; }
  static BodyItem not_ab(std::size_t id) { return {Kind::kNotAb, {}, id}; }

  friend bool operator==(const BodyItem&, const BodyItem&) = default;
};

// One clause of the flattened program. `ab == 0` marks a head rule that
// concludes `head_class`; otherwise the clause defines abN.
struct FlatRule {
  std::size_t ab = 0;
  Symbol head_class;
  std::vector<BodyItem> body;

  bool is_ab() const { return ab != 0; }
  friend bool operator==(const FlatRule&, const FlatRule&) = default;
};

// A stratified normal logic program plus the schema needed to apply it.
// Head rules come first in learning order, then ab definitions by ascending
// id. An abK body only refers to abJ with J < K.
struct Program {
  Schema schema;
  Mode mode = Mode::kBinary;
  std::vector<FlatRule> rules;

  friend bool operator==(const Program&, const Program&) = default;
};

// Ordered (class, rule) pairs for first-match multi-class prediction.
struct MulticlassModel {
  std::vector<std::pair<Symbol, Rule>> rules;
  Symbol fallback;
};

// Exceptions become abN clauses numbered children-first, counting across
// rules in learning order.
Program flatten(const std::vector<Rule>& rules, const Schema& schema);
Program flatten(const MulticlassModel& model, const Schema& schema);

std::string serialize(const Program& p);
Program parse_program(std::string_view text);

// Number of head rules, and the number of body items over all clauses.
struct ProgramSize {
  std::size_t rules = 0;
  std::size_t predicates = 0;
  friend bool operator==(const ProgramSize&, const ProgramSize&) = default;
};
ProgramSize count_program(const Program& p);

// Binary: positive class iff some head rule holds, default class otherwise.
// Multiclass: class of the first head rule that holds, default class otherwise.
Symbol evaluate(const Program& p, std::span<const Value> row);
bool rule_holds(const Program& p, const FlatRule& rule, std::span<const Value> row);

struct Justification;

struct JustifiedItem {
  BodyItem item;
  Value value;  // the row's value for literal items
  bool held = false;
  std::vector<Justification> sub;  // the ab clause's proof for kNotAb items
};

// Proof of one clause against a row. Items are listed up to and including
// the first one that fails.
struct Justification {
  std::size_t index = 0;  // 1-based position among head rules; 0 for ab clauses
  const FlatRule* rule = nullptr;
  bool held = false;
  std::vector<JustifiedItem> items;
};

// Binary positive: the first head rule that holds. Binary negative: every
// head rule. Multiclass: head rules up to the first one that holds.
std::vector<Justification> justify(const Program& p, std::span<const Value> row);

// The prediction implied by a list of justifications.
Symbol justified_class(const Program& p, const std::vector<Justification>& js);

// `subject` replaces the variable X in rule heads.
std::string render_english(const Program& p, const std::vector<Justification>& js, std::string_view subject);
std::string render_json(const Program& p, const std::vector<Justification>& js, std::string_view subject);

// Text of one clause head or body item in program syntax.
std::string head_text(const Program& p, const FlatRule& rule, std::string_view subject = "X");

}  // namespace foldse
