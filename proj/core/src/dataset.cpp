#include "foldse/dataset.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

#include "foldse/format.hpp"

namespace foldse {
namespace {

bool iequals(std::string_view a, std::string_view b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (std::tolower(static_cast<unsigned char>(a[i])) != std::tolower(static_cast<unsigned char>(b[i]))) {
      return false;
    }
  }
  return true;
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open file: " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Majority label; ties go to the label seen first.
Symbol majority(const std::vector<Symbol>& order, const std::unordered_map<Symbol, std::size_t>& counts,
                std::optional<Symbol> exclude = std::nullopt) {
  Symbol best;
  std::size_t best_count = 0;
  for (Symbol c : order) {
    if (exclude && c == *exclude) continue;
    const std::size_t n = counts.at(c);
    if (!best.valid() || n > best_count) {
      best = c;
      best_count = n;
    }
  }
  return best;
}

void assign_classes(Schema& schema, const std::vector<Row>& rows, std::optional<Symbol> positive) {
  std::unordered_map<Symbol, std::size_t> counts;
  schema.class_labels.clear();
  for (const Row& r : rows) {
    if (counts[r.label]++ == 0) schema.class_labels.push_back(r.label);
  }
  if (positive) {
    if (!counts.contains(*positive)) throw Error("unknown positive class: " + positive->str());
    schema.positive_class = *positive;
  } else {
    schema.positive_class = majority(schema.class_labels, counts);
  }
  schema.default_class =
      schema.class_labels.size() == 1 ? schema.positive_class : majority(schema.class_labels, counts, schema.positive_class);
}

}  // namespace

std::optional<std::size_t> Schema::feature_index(std::string_view name) const {
  for (std::size_t i = 0; i < feature_names.size(); ++i) {
    if (feature_names[i].str() == name) return i;
  }
  return std::nullopt;
}

bool Schema::has_class(Symbol c) const {
  return std::find(class_labels.begin(), class_labels.end(), c) != class_labels.end();
}

Dataset::Dataset(Schema schema, std::vector<Row> rows) : schema_(std::move(schema)), rows_(std::move(rows)) {
  for (const Row& r : rows_) {
    if (r.values.size() != schema_.num_features()) throw Error("row arity does not match schema");
  }
}

Examples Dataset::examples() const {
  Examples out;
  out.reserve(rows_.size());
  for (const Row& r : rows_) out.push_back(&r);
  return out;
}

Dataset Dataset::subset(std::span<const std::size_t> indices) const {
  std::vector<Row> rows;
  rows.reserve(indices.size());
  for (std::size_t i : indices) rows.push_back(rows_.at(i));
  return Dataset(schema_, std::move(rows));
}

Dataset Dataset::with_positive_class(Symbol positive) const {
  Schema s = schema_;
  assign_classes(s, rows_, positive);
  // keep the declared label order even if some label is absent from these rows
  s.class_labels = schema_.class_labels;
  return Dataset(std::move(s), rows_);
}

bool is_missing_token(std::string_view cell) {
  cell = trim(cell);
  return cell.empty() || iequals(cell, "NA") || iequals(cell, "NaN") || iequals(cell, "null") || cell == "?";
}

Value parse_cell(std::string_view cell, bool numeric_column) {
  if (is_missing_token(cell)) return Value::missing();
  if (numeric_column) {
    if (auto v = parse_number(cell)) return Value::numeric(*v);
  }
  return Value::categorical(trim(cell));
}

std::vector<std::vector<std::string>> parse_csv_records(std::string_view text) {
  std::vector<std::vector<std::string>> records;
  std::vector<std::string> record;
  std::string field;
  bool quoted = false;
  bool field_started = false;
  std::size_t i = 0;
  auto end_field = [&] {
    record.push_back(std::move(field));
    field.clear();
    field_started = false;
  };
  auto end_record = [&] {
    end_field();
    // skip blank lines
    if (!(record.size() == 1 && record[0].empty())) records.push_back(std::move(record));
    record.clear();
  };
  if (text.starts_with("\xEF\xBB\xBF")) i = 3;
  for (; i < text.size(); ++i) {
    const char c = text[i];
    if (quoted) {
      if (c == '"') {
        if (i + 1 < text.size() && text[i + 1] == '"') {
          field += '"';
          ++i;
        } else {
          quoted = false;
        }
      } else {
        field += c;
      }
      continue;
    }
    switch (c) {
      case '"':
        if (!field_started || trim(field).empty()) {
          field.clear();
          quoted = true;
          field_started = true;
        } else {
          field += c;
        }
        break;
      case ',':
        end_field();
        break;
      case '\r':
        break;
      case '\n':
        end_record();
        break;
      default:
        field += c;
        field_started = true;
    }
  }
  if (quoted) throw Error("unterminated quoted field in CSV");
  if (!field.empty() || !record.empty()) end_record();
  return records;
}

Dataset load_csv_text(std::string_view text, const CsvOptions& options) {
  auto records = parse_csv_records(text);
  if (records.empty()) throw Error("missing header row");
  const auto& header = records.front();

  std::optional<std::size_t> label_col;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (trim(header[c]) == options.label) label_col = c;
  }
  if (!label_col) throw Error("missing label column: " + options.label);

  std::unordered_set<std::string> numeric(options.numeric_features.begin(), options.numeric_features.end());
  for (const auto& name : options.numeric_features) {
    bool found = false;
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (c != *label_col && trim(header[c]) == name) found = true;
    }
    if (!found) throw Error("unknown numeric feature: " + name);
  }

  Schema schema;
  schema.label = Symbol::intern(options.label);
  std::vector<std::size_t> feature_cols;
  for (std::size_t c = 0; c < header.size(); ++c) {
    if (c == *label_col) continue;
    const std::string name(trim(header[c]));
    feature_cols.push_back(c);
    schema.feature_names.push_back(Symbol::intern(name));
    schema.numeric.push_back(numeric.contains(name));
  }

  std::vector<Row> rows;
  rows.reserve(records.size() - 1);
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != header.size()) {
      throw Error("row arity mismatch at record " + std::to_string(r + 1) + ": expected " +
                  std::to_string(header.size()) + " fields, got " + std::to_string(rec.size()));
    }
    Row row;
    row.values.reserve(feature_cols.size());
    for (std::size_t f = 0; f < feature_cols.size(); ++f) {
      row.values.push_back(parse_cell(rec[feature_cols[f]], schema.numeric[f]));
    }
    row.label = Symbol::intern(trim(rec[*label_col]));
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw Error("empty dataset");

  std::optional<Symbol> positive;
  if (options.positive_class) positive = Symbol::intern(*options.positive_class);
  assign_classes(schema, rows, positive);
  return Dataset(std::move(schema), std::move(rows));
}

Dataset load_csv(const std::filesystem::path& path, const CsvOptions& options) {
  return load_csv_text(read_file(path), options);
}

Dataset load_csv_text_for_schema(std::string_view text, const Schema& schema) {
  auto records = parse_csv_records(text);
  if (records.empty()) throw Error("missing header row");
  const auto& header = records.front();
  auto column_of = [&](const std::string& name) -> std::optional<std::size_t> {
    for (std::size_t c = 0; c < header.size(); ++c) {
      if (trim(header[c]) == name) return c;
    }
    return std::nullopt;
  };
  std::vector<std::size_t> cols;
  for (Symbol f : schema.feature_names) {
    auto c = column_of(f.str());
    if (!c) throw Error("schema mismatch: data has no column '" + f.str() + "'");
    cols.push_back(*c);
  }
  const auto label_col = column_of(schema.label.str());

  std::vector<Row> rows;
  for (std::size_t r = 1; r < records.size(); ++r) {
    const auto& rec = records[r];
    if (rec.size() != header.size()) throw Error("row arity mismatch at record " + std::to_string(r + 1));
    Row row;
    for (std::size_t f = 0; f < cols.size(); ++f) row.values.push_back(parse_cell(rec[cols[f]], schema.numeric[f]));
    if (label_col) row.label = Symbol::intern(trim(rec[*label_col]));
    rows.push_back(std::move(row));
  }
  return Dataset(schema, std::move(rows));
}

Dataset load_csv_for_schema(const std::filesystem::path& path, const Schema& schema) {
  return load_csv_text_for_schema(read_file(path), schema);
}

}  // namespace foldse
