#include "foldse/program.hpp"

#include <algorithm>
#include <functional>

#include "json.hpp"

#include "foldse/format.hpp"

namespace foldse {
namespace {

class Flattener {
 public:
  std::vector<BodyItem> body_of(const Rule& r) {
    std::vector<BodyItem> body;
    for (const Literal& lit : r.defaults) body.push_back(BodyItem::of(lit));
    for (const Rule& e : r.exceptions) body.push_back(BodyItem::not_ab(define(e)));
    return body;
  }

  std::vector<FlatRule> take_abs() { return std::move(abs_); }

 private:
  // Children are numbered before their parent.
  std::size_t define(const Rule& r) {
    std::vector<BodyItem> body = body_of(r);
    const std::size_t id = ++counter_;
    abs_.push_back(FlatRule{id, {}, std::move(body)});
    return id;
  }

  std::size_t counter_ = 0;
  std::vector<FlatRule> abs_;
};

const FlatRule& ab_rule(const Program& p, std::size_t id) {
  for (const FlatRule& r : p.rules) {
    if (r.ab == id) return r;
  }
  throw Error("undefined ab predicate: ab" + std::to_string(id));
}

bool item_holds(const Program& p, const BodyItem& item, std::span<const Value> row) {
  if (item.kind == BodyItem::Kind::kLiteral) {
    return compare(row[item.literal.feature], item.literal.op, item.literal.threshold);
  }
  return !rule_holds(p, ab_rule(p, item.ab), row);
}

void check_arity(const Program& p, std::span<const Value> row) {
  if (row.size() != p.schema.num_features()) {
    throw Error("row has " + std::to_string(row.size()) + " values, model expects " +
                std::to_string(p.schema.num_features()));
  }
}

Justification prove(const Program& p, const FlatRule& rule, std::span<const Value> row, std::size_t index) {
  Justification j;
  j.index = index;
  j.rule = &rule;
  j.held = true;
  for (const BodyItem& item : rule.body) {
    JustifiedItem ji;
    ji.item = item;
    if (item.kind == BodyItem::Kind::kLiteral) {
      ji.value = row[item.literal.feature];
      ji.held = compare(ji.value, item.literal.op, item.literal.threshold);
    } else {
      ji.sub.push_back(prove(p, ab_rule(p, item.ab), row, 0));
      ji.held = !ji.sub.front().held;
    }
    const bool held = ji.held;
    j.items.push_back(std::move(ji));
    if (!held) {
      j.held = false;
      break;
    }
  }
  return j;
}

std::string value_text(const Value& v) {
  switch (v.kind()) {
    case ValueKind::kNumeric:
      return format_number(v.number());
    case ValueKind::kCategorical:
      return quote(v.symbol().str());
    case ValueKind::kMissing:
      return "NaN";
  }
  return {};
}

std::string condition_text(const Literal& lit) {
  const std::string t = value_text(lit.threshold);
  switch (lit.op) {
    case Op::kEq:
      return "should equal " + t;
    case Op::kNotEq:
      return "should not equal " + t;
    case Op::kLessEq:
      return "should be less than or equal to " + t;
    case Op::kGreater:
      return "should be greater than " + t;
    case Op::kNotLessEq:
      return "should be greater than " + t + " or be NaN";
    case Op::kNotGreater:
      return "should be less than or equal to " + t + " or be NaN";
  }
  return {};
}

const char* holds_text(bool held) { return held ? "does hold" : "does not hold"; }

void render_block(const Program& p, const Justification& j, std::string_view subject, std::size_t depth,
                  std::vector<std::string>& lines) {
  const std::string indent(depth * 8, ' ');
  std::string header = indent;
  if (j.index > 0) header += "(" + std::to_string(j.index) + ") ";
  header += head_text(p, *j.rule, subject) + " " + holds_text(j.held) + " because";
  if (j.items.empty()) {
    lines.push_back(header + " true");
    return;
  }
  lines.push_back(std::move(header));
  const std::string inner(depth * 8 + 8, ' ');
  for (std::size_t k = 0; k < j.items.size(); ++k) {
    const JustifiedItem& it = j.items[k];
    if (it.item.kind == BodyItem::Kind::kLiteral) {
      const Literal& lit = it.item.literal;
      lines.push_back(inner + "the value of " + p.schema.feature_names[lit.feature].str() + " is " +
                      value_text(it.value) + " which " + condition_text(lit) + " " + holds_text(it.held));
    } else {
      render_block(p, it.sub.front(), subject, depth + 1, lines);
    }
    if (k + 1 < j.items.size()) lines.back() += " and";
  }
}

nlohmann::json item_json(const Program& p, const JustifiedItem& it, std::string_view subject);

nlohmann::json block_json(const Program& p, const Justification& j, std::string_view subject) {
  nlohmann::json out;
  if (j.index > 0) out["index"] = j.index;
  out["head"] = head_text(p, *j.rule, subject);
  out["held"] = j.held;
  out["items"] = nlohmann::json::array();
  for (const JustifiedItem& it : j.items) out["items"].push_back(item_json(p, it, subject));
  return out;
}

nlohmann::json item_json(const Program& p, const JustifiedItem& it, std::string_view subject) {
  nlohmann::json out;
  out["held"] = it.held;
  if (it.item.kind == BodyItem::Kind::kLiteral) {
    const Literal& lit = it.item.literal;
    out["feature"] = p.schema.feature_names[lit.feature].str();
    out["op"] = std::string(op_name(lit.op));
    out["threshold"] = to_string(lit.threshold);
    out["value"] = to_string(it.value);
  } else {
    out["not"] = "ab" + std::to_string(it.item.ab);
    out["proof"] = block_json(p, it.sub.front(), subject);
  }
  return out;
}

}  // namespace

Program flatten(const std::vector<Rule>& rules, const Schema& schema) {
  Program p;
  p.schema = schema;
  p.mode = Mode::kBinary;
  Flattener f;
  for (const Rule& r : rules) p.rules.push_back(FlatRule{0, schema.positive_class, f.body_of(r)});
  for (FlatRule& ab : f.take_abs()) p.rules.push_back(std::move(ab));
  return p;
}

Program flatten(const MulticlassModel& model, const Schema& schema) {
  Program p;
  p.schema = schema;
  p.schema.default_class = model.fallback;
  p.mode = Mode::kMulticlass;
  Flattener f;
  for (const auto& [cls, r] : model.rules) p.rules.push_back(FlatRule{0, cls, f.body_of(r)});
  for (FlatRule& ab : f.take_abs()) p.rules.push_back(std::move(ab));
  return p;
}

ProgramSize count_program(const Program& p) {
  ProgramSize s;
  for (const FlatRule& r : p.rules) {
    if (!r.is_ab()) ++s.rules;
    s.predicates += r.body.size();
  }
  return s;
}

bool rule_holds(const Program& p, const FlatRule& rule, std::span<const Value> row) {
  return std::all_of(rule.body.begin(), rule.body.end(),
                     [&](const BodyItem& item) { return item_holds(p, item, row); });
}

Symbol evaluate(const Program& p, std::span<const Value> row) {
  check_arity(p, row);
  for (const FlatRule& r : p.rules) {
    if (!r.is_ab() && rule_holds(p, r, row)) return r.head_class;
  }
  return p.schema.default_class;
}

std::vector<Justification> justify(const Program& p, std::span<const Value> row) {
  check_arity(p, row);
  std::vector<Justification> all;
  std::size_t index = 0;
  for (const FlatRule& r : p.rules) {
    if (r.is_ab()) continue;
    Justification j = prove(p, r, row, ++index);
    if (j.held) {
      if (p.mode == Mode::kBinary) return {std::move(j)};
      all.push_back(std::move(j));
      return all;
    }
    all.push_back(std::move(j));
  }
  return all;
}

Symbol justified_class(const Program& p, const std::vector<Justification>& js) {
  for (const Justification& j : js) {
    if (j.held) return j.rule->head_class;
  }
  return p.schema.default_class;
}

std::string head_text(const Program& p, const FlatRule& rule, std::string_view subject) {
  if (rule.is_ab()) return "ab" + std::to_string(rule.ab) + "(" + std::string(subject) + ",'True')";
  return atom(p.schema.label.str()) + "(" + std::string(subject) + "," + quote(rule.head_class.str()) + ")";
}

std::string render_english(const Program& p, const std::vector<Justification>& js, std::string_view subject) {
  std::vector<std::string> lines;
  for (const Justification& j : js) render_block(p, j, subject, 0, lines);
  std::string out;
  for (const std::string& l : lines) out += l + "\n";
  return out;
}

std::string render_json(const Program& p, const std::vector<Justification>& js, std::string_view subject) {
  nlohmann::json out;
  out["subject"] = std::string(subject);
  out["prediction"] = justified_class(p, js).str();
  out["rules"] = nlohmann::json::array();
  for (const Justification& j : js) out["rules"].push_back(block_json(p, j, subject));
  return out.dump(2);
}

}  // namespace foldse
