#include <cctype>
#include <map>
#include <optional>
#include <set>
#include <sstream>

#include "foldse/format.hpp"
#include "foldse/program.hpp"

namespace foldse {
namespace {

std::string constant_text(const Value& v) {
  switch (v.kind()) {
    case ValueKind::kNumeric:
      return format_number(v.number());
    case ValueKind::kCategorical:
      return quote(v.symbol().str());
    case ValueKind::kMissing:
      return "missing";
  }
  return {};
}

std::string body_text(const Program& p, const FlatRule& rule) {
  std::map<std::size_t, std::size_t> var_of;  // feature -> k in Nk
  std::vector<std::string> parts;
  for (const BodyItem& item : rule.body) {
    if (item.kind == BodyItem::Kind::kNotAb) {
      parts.push_back("not ab" + std::to_string(item.ab) + "(X,'True')");
      continue;
    }
    const Literal& lit = item.literal;
    const std::string feat = atom(p.schema.feature_names[lit.feature].str());
    if (!is_numeric_op(lit.op)) {
      const std::string call = feat + "(X," + constant_text(lit.threshold) + ")";
      parts.push_back(lit.op == Op::kEq ? call : "not " + call);
      continue;
    }
    std::string text;
    auto [it, fresh] = var_of.try_emplace(lit.feature, var_of.size() + 1);
    const std::string var = "N" + std::to_string(it->second);
    if (fresh) text = feat + "(X," + var + "), ";
    const std::string t = format_number(lit.threshold.number());
    switch (lit.op) {
      case Op::kLessEq:
        text += var + "=<" + t;
        break;
      case Op::kGreater:
        text += var + ">" + t;
        break;
      case Op::kNotLessEq:
        text += "not(" + var + "=<" + t + ")";
        break;
      case Op::kNotGreater:
        text += "not(" + var + ">" + t + ")";
        break;
      default:
        break;
    }
    parts.push_back(std::move(text));
  }
  std::string out;
  for (std::size_t k = 0; k < parts.size(); ++k) out += (k ? ", " : "") + parts[k];
  return out;
}

// ---- parsing ----

enum class Tok { kAtom, kVar, kQuoted, kNumber, kLParen, kRParen, kComma, kDot, kNeck, kLessEq, kGreater, kEnd };

struct Token {
  Tok kind;
  std::string text;
  std::size_t line;
  std::size_t col;
};

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  // Comment lines are collected separately; they carry the schema.
  std::vector<Token> run(std::vector<std::string>& comments) {
    std::vector<Token> out;
    while (true) {
      skip_space(comments);
      const std::size_t line = line_, col = col_;
      if (at_end()) {
        out.push_back({Tok::kEnd, "", line, col});
        return out;
      }
      const char c = peek();
      if (std::islower(static_cast<unsigned char>(c))) {
        out.push_back({Tok::kAtom, word(), line, col});
      } else if (std::isupper(static_cast<unsigned char>(c)) || c == '_') {
        out.push_back({Tok::kVar, word(), line, col});
      } else if (c == '\'') {
        out.push_back({Tok::kQuoted, quoted(), line, col});
      } else if (std::isdigit(static_cast<unsigned char>(c)) ||
                 (c == '-' && std::isdigit(static_cast<unsigned char>(peek(1))))) {
        out.push_back({Tok::kNumber, number(), line, col});
      } else if (c == ':' && peek(1) == '-') {
        advance(2);
        out.push_back({Tok::kNeck, ":-", line, col});
      } else if (c == '=' && peek(1) == '<') {
        advance(2);
        out.push_back({Tok::kLessEq, "=<", line, col});
      } else {
        advance(1);
        switch (c) {
          case '(':
            out.push_back({Tok::kLParen, "(", line, col});
            break;
          case ')':
            out.push_back({Tok::kRParen, ")", line, col});
            break;
          case ',':
            out.push_back({Tok::kComma, ",", line, col});
            break;
          case '.':
            out.push_back({Tok::kDot, ".", line, col});
            break;
          case '>':
            out.push_back({Tok::kGreater, ">", line, col});
            break;
          default:
            fail(line, col, std::string("unexpected character '") + c + "'");
        }
      }
    }
  }

  [[noreturn]] static void fail(std::size_t line, std::size_t col, const std::string& msg) {
    throw Error("line " + std::to_string(line) + ", column " + std::to_string(col) + ": " + msg);
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek(std::size_t ahead = 0) const { return pos_ + ahead < text_.size() ? text_[pos_ + ahead] : '\0'; }
  void advance(std::size_t n) {
    for (std::size_t i = 0; i < n && !at_end(); ++i) {
      if (text_[pos_++] == '\n') {
        ++line_;
        col_ = 1;
      } else {
        ++col_;
      }
    }
  }

  void skip_space(std::vector<std::string>& comments) {
    while (!at_end()) {
      const char c = peek();
      if (c == '%') {
        const std::size_t start = pos_ + 1;
        std::size_t end = text_.find('\n', start);
        if (end == std::string_view::npos) end = text_.size();
        comments.emplace_back(text_.substr(start, end - start));
        advance(end - pos_);
      } else if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
      } else {
        return;
      }
    }
  }

  std::string word() {
    std::string out;
    while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) {
      out += peek();
      advance(1);
    }
    return out;
  }

  std::string quoted() {
    const std::size_t line = line_, col = col_;
    advance(1);
    std::string out;
    while (true) {
      if (at_end()) fail(line, col, "unterminated quoted constant");
      const char c = peek();
      advance(1);
      if (c == '\'') {
        if (peek() != '\'') return out;
        advance(1);
      }
      out += c;
    }
  }

  std::string number() {
    std::string out;
    auto take_digits = [&] {
      while (std::isdigit(static_cast<unsigned char>(peek()))) {
        out += peek();
        advance(1);
      }
    };
    if (peek() == '-') {
      out += '-';
      advance(1);
    }
    take_digits();
    if (peek() == '.' && std::isdigit(static_cast<unsigned char>(peek(1)))) {
      out += '.';
      advance(1);
      take_digits();
    }
    if ((peek() == 'e' || peek() == 'E') &&
        (std::isdigit(static_cast<unsigned char>(peek(1))) ||
         ((peek(1) == '-' || peek(1) == '+') && std::isdigit(static_cast<unsigned char>(peek(2)))))) {
      out += peek();
      advance(1);
      if (peek() == '-' || peek() == '+') {
        out += peek();
        advance(1);
      }
      take_digits();
    }
    return out;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t line_ = 1;
  std::size_t col_ = 1;
};

std::optional<std::size_t> ab_id(std::string_view name) {
  if (name.size() < 3 || name.substr(0, 2) != "ab") return std::nullopt;
  std::size_t id = 0;
  for (char c : name.substr(2)) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return std::nullopt;
    id = id * 10 + static_cast<std::size_t>(c - '0');
  }
  if (id == 0) return std::nullopt;
  return id;
}

// Reads quoted constants separated by whitespace or commas.
std::vector<std::string> quoted_list(std::string_view text) {
  std::vector<std::string> comments;
  std::vector<Token> toks = Lexer(text).run(comments);
  std::vector<std::string> out;
  for (const Token& t : toks) {
    if (t.kind == Tok::kQuoted) {
      out.push_back(t.text);
    } else if (t.kind != Tok::kComma && t.kind != Tok::kEnd) {
      throw Error("malformed schema comment: " + std::string(text));
    }
  }
  return out;
}

Schema parse_schema(const std::vector<std::string>& comments, Mode& mode) {
  Schema s;
  std::set<std::string> seen;
  for (const std::string& raw : comments) {
    const std::string_view line = trim(raw);
    const auto colon = line.find(':');
    if (colon == std::string_view::npos) continue;
    const std::string key(trim(line.substr(0, colon)));
    const std::string_view rest = trim(line.substr(colon + 1));
    if (key == "mode") {
      if (rest == "binary") {
        mode = Mode::kBinary;
      } else if (rest == "multiclass") {
        mode = Mode::kMulticlass;
      } else {
        throw Error("unknown mode: " + std::string(rest));
      }
    } else if (key == "label" || key == "positive" || key == "default") {
      auto vals = quoted_list(rest);
      if (vals.size() != 1) throw Error("schema comment '" + key + "' needs one quoted value");
      const Symbol sym = Symbol::intern(vals.front());
      (key == "label" ? s.label : key == "positive" ? s.positive_class : s.default_class) = sym;
    } else if (key == "classes") {
      for (const std::string& c : quoted_list(rest)) s.class_labels.push_back(Symbol::intern(c));
    } else if (key == "feature") {
      // 'name' numeric|categorical
      const auto close = rest.rfind('\'');
      auto vals = quoted_list(rest.substr(0, close == std::string_view::npos ? 0 : close + 1));
      const std::string_view kind = trim(rest.substr(close == std::string_view::npos ? 0 : close + 1));
      if (vals.size() != 1 || (kind != "numeric" && kind != "categorical")) {
        throw Error("malformed feature comment: " + std::string(rest));
      }
      s.feature_names.push_back(Symbol::intern(vals.front()));
      s.numeric.push_back(kind == "numeric");
    } else {
      continue;
    }
    seen.insert(key);
  }
  for (const char* required : {"mode", "label", "classes", "positive", "default"}) {
    if (!seen.contains(required)) throw Error(std::string("missing schema comment: ") + required);
  }
  if (!s.has_class(s.positive_class) || !s.has_class(s.default_class)) {
    throw Error("positive and default classes must be listed in classes");
  }
  return s;
}

class Parser {
 public:
  Parser(std::vector<Token> toks, Program& p) : toks_(std::move(toks)), p_(p) {}

  void run() {
    while (peek().kind != Tok::kEnd) statement();
  }

 private:
  const Token& peek(std::size_t ahead = 0) const { return toks_[std::min(pos_ + ahead, toks_.size() - 1)]; }
  const Token& next() {
    const Token& t = peek();
    if (t.kind != Tok::kEnd) ++pos_;
    return t;
  }
  const Token& expect(Tok kind, const char* what) {
    const Token& t = peek();
    if (t.kind != kind) Lexer::fail(t.line, t.col, std::string("expected ") + what + ", found '" + t.text + "'");
    return next();
  }
  [[noreturn]] void fail_at(const Token& t, const std::string& msg) const { Lexer::fail(t.line, t.col, msg); }

  std::string name() {
    const Token& t = peek();
    if (t.kind != Tok::kAtom && t.kind != Tok::kQuoted) fail_at(t, "expected a predicate name");
    return next().text;
  }

  Value constant() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::kQuoted:
        return Value::categorical(t.text);
      case Tok::kNumber:
        return Value::numeric(*parse_number(t.text));
      case Tok::kAtom:
        if (t.text == "missing") return Value::missing();
        return Value::categorical(t.text);
      default:
        fail_at(t, "expected a constant");
    }
  }

  double number() {
    const Token& t = expect(Tok::kNumber, "a number");
    return *parse_number(t.text);
  }

  std::size_t feature(const Token& at, const std::string& nm) const {
    auto idx = p_.schema.feature_index(nm);
    if (!idx) fail_at(at, "unknown feature '" + nm + "'");
    return *idx;
  }

  void statement() {
    const Token& start = peek();
    const std::string head = name();
    expect(Tok::kLParen, "'('");
    expect(Tok::kVar, "a variable");
    expect(Tok::kComma, "','");
    const Token& cls_tok = peek();
    const Value cls = constant();
    expect(Tok::kRParen, "')'");

    FlatRule rule;
    if (auto id = ab_id(head); id && start.kind == Tok::kAtom) {
      rule.ab = *id;
    } else {
      if (head != p_.schema.label.str()) fail_at(start, "head predicate '" + head + "' is not the label");
      if (cls.is_missing()) fail_at(cls_tok, "class constant expected");
      rule.head_class = Symbol::intern(to_string(cls));
    }
    vars_.clear();
    if (peek().kind == Tok::kNeck) {
      next();
      body_item(rule);
      while (peek().kind == Tok::kComma) {
        next();
        body_item(rule);
      }
    }
    expect(Tok::kDot, "'.'");
    p_.rules.push_back(std::move(rule));
  }

  Op comparison(bool negated) {
    const Token& t = next();
    if (t.kind == Tok::kLessEq) return negated ? Op::kNotLessEq : Op::kLessEq;
    if (t.kind == Tok::kGreater) return negated ? Op::kNotGreater : Op::kGreater;
    fail_at(t, "expected '=<' or '>'");
  }

  void compare_item(FlatRule& rule, bool negated) {
    const Token& v = expect(Tok::kVar, "a variable");
    auto it = vars_.find(v.text);
    if (it == vars_.end()) fail_at(v, "variable " + v.text + " is not bound to a feature");
    const Op op = comparison(negated);
    const double t = number();
    rule.body.push_back(BodyItem::of(Literal{it->second, op, Value::numeric(t)}));
  }

  void body_item(FlatRule& rule) {
    const Token& t = peek();
    if (t.kind == Tok::kAtom && t.text == "true") {
      next();
      return;
    }
    if (t.kind == Tok::kVar) {
      compare_item(rule, false);
      return;
    }
    bool negated = false;
    if (t.kind == Tok::kAtom && t.text == "not") {
      next();
      negated = true;
      if (peek().kind == Tok::kLParen) {
        next();
        compare_item(rule, true);
        expect(Tok::kRParen, "')'");
        return;
      }
    }
    const Token& name_tok = peek();
    const std::string nm = name();
    expect(Tok::kLParen, "'('");
    expect(Tok::kVar, "a variable");
    expect(Tok::kComma, "','");
    if (auto id = ab_id(nm); id && name_tok.kind == Tok::kAtom) {
      if (!negated) fail_at(name_tok, "ab predicates may only appear negated");
      constant();
      expect(Tok::kRParen, "')'");
      rule.body.push_back(BodyItem::not_ab(*id));
      return;
    }
    const std::size_t f = feature(name_tok, nm);
    if (peek().kind == Tok::kVar) {
      if (negated) fail_at(name_tok, "cannot negate a variable binding");
      const Token& v = next();
      auto [it, fresh] = vars_.try_emplace(v.text, f);
      if (!fresh && it->second != f) fail_at(v, "variable " + v.text + " bound to two features");
      expect(Tok::kRParen, "')'");
      return;
    }
    Value c = constant();
    expect(Tok::kRParen, "')'");
    rule.body.push_back(BodyItem::of(Literal{f, negated ? Op::kNotEq : Op::kEq, std::move(c)}));
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
  Program& p_;
  std::map<std::string, std::size_t> vars_;
};

void check_abs(const Program& p) {
  std::map<std::size_t, const FlatRule*> defs;
  for (const FlatRule& r : p.rules) {
    if (!r.is_ab()) continue;
    if (!defs.emplace(r.ab, &r).second) throw Error("ab" + std::to_string(r.ab) + " is defined more than once");
  }
  for (const FlatRule& r : p.rules) {
    for (const BodyItem& item : r.body) {
      if (item.kind == BodyItem::Kind::kNotAb && !defs.contains(item.ab)) {
        throw Error("undefined ab predicate: ab" + std::to_string(item.ab));
      }
    }
  }
  // 0 = unvisited, 1 = on stack, 2 = done
  std::map<std::size_t, int> state;
  auto visit = [&](auto&& self, std::size_t id) -> void {
    int& s = state[id];
    if (s == 2) return;
    if (s == 1) throw Error("cyclic ab reference through ab" + std::to_string(id));
    s = 1;
    for (const BodyItem& item : defs.at(id)->body) {
      if (item.kind == BodyItem::Kind::kNotAb) self(self, item.ab);
    }
    state[id] = 2;
  };
  for (const auto& [id, rule] : defs) visit(visit, id);
}

}  // namespace

std::string serialize(const Program& p) {
  std::ostringstream out;
  const Schema& s = p.schema;
  out << "% foldse program\n";
  out << "% mode: " << (p.mode == Mode::kBinary ? "binary" : "multiclass") << "\n";
  out << "% label: " << quote(s.label.str()) << "\n";
  out << "% classes:";
  for (Symbol c : s.class_labels) out << " " << quote(c.str());
  out << "\n";
  out << "% positive: " << quote(s.positive_class.str()) << "\n";
  out << "% default: " << quote(s.default_class.str()) << "\n";
  for (std::size_t i = 0; i < s.num_features(); ++i) {
    out << "% feature: " << quote(s.feature_names[i].str()) << (s.numeric[i] ? " numeric" : " categorical") << "\n";
  }
  for (const FlatRule& r : p.rules) {
    out << head_text(p, r);
    if (!r.body.empty()) out << " :- " << body_text(p, r);
    out << ".\n";
  }
  return out.str();
}

Program parse_program(std::string_view text) {
  std::vector<std::string> comments;
  std::vector<Token> toks = Lexer(text).run(comments);
  Program p;
  p.schema = parse_schema(comments, p.mode);
  Parser(std::move(toks), p).run();
  check_abs(p);
  return p;
}

}  // namespace foldse
