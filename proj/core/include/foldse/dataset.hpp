#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "foldse/value.hpp"

namespace foldse {

// Column metadata shared by training and prediction. The label column is not
// part of `feature_names`.
struct Schema {
  std::vector<Symbol> feature_names;
  std::vector<bool> numeric;  // parallel to feature_names
  Symbol label;
  std::vector<Symbol> class_labels;  // first-occurrence order
  Symbol positive_class;
  Symbol default_class;

  std::size_t num_features() const { return feature_names.size(); }
  std::optional<std::size_t> feature_index(std::string_view name) const;
  bool has_class(Symbol c) const;

  friend bool operator==(const Schema&, const Schema&) = default;
};

struct Row {
  std::vector<Value> values;
  Symbol label;
};

// Non-owning list of examples. Rows are referenced by pointer so subsets can
// be formed without copying.
using Examples = std::vector<const Row*>;
using ExampleSpan = std::span<const Row* const>;

class Dataset {
 public:
  Dataset(Schema schema, std::vector<Row> rows);

  const Schema& schema() const { return schema_; }
  const std::vector<Row>& rows() const { return rows_; }
  std::size_t size() const { return rows_.size(); }
  const Row& operator[](std::size_t i) const { return rows_[i]; }

  Examples examples() const;
  // Rows at the given indices, sharing this dataset's schema.
  Dataset subset(std::span<const std::size_t> indices) const;
  // Same rows, different target class; default class becomes the majority
  // among the remaining labels.
  Dataset with_positive_class(Symbol positive) const;

 private:
  Schema schema_;
  std::vector<Row> rows_;
};

struct CsvOptions {
  std::vector<std::string> numeric_features;
  std::string label;
  std::optional<std::string> positive_class;
};

// Missing-value tokens (matched case-insensitively after trimming); the empty
// cell is missing too.
bool is_missing_token(std::string_view cell);

// Converts raw text into a cell value under the column's numeric flag.
Value parse_cell(std::string_view cell, bool numeric_column);

Dataset load_csv(const std::filesystem::path& path, const CsvOptions& options);
Dataset load_csv_text(std::string_view text, const CsvOptions& options);

// Rows aligned to an existing schema (e.g. a model's). The label column is
// optional; rows without it get an invalid label symbol. Throws when any
// schema feature is absent from the header.
Dataset load_csv_for_schema(const std::filesystem::path& path, const Schema& schema);
Dataset load_csv_text_for_schema(std::string_view text, const Schema& schema);

// RFC-4180 record splitter used by the loaders.
std::vector<std::vector<std::string>> parse_csv_records(std::string_view text);

}  // namespace foldse
