#pragma once

#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

namespace foldse {

// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shortest decimal text that round-trips to the same double. Integral values
// keep a trailing ".0" (6849 -> "6849.0") so thresholds always read as reals.
std::string format_number(double v);

// Parses decimal or scientific notation after trimming surrounding
// whitespace. Rejects inf/nan spellings and trailing garbage.
std::optional<double> parse_number(std::string_view text);

std::string_view trim(std::string_view s);

// Single-quoted constant with embedded quotes doubled: it's -> 'it''s'.
std::string quote(std::string_view s);

// A predicate name as written in a program: bare when it is a lowercase
// identifier, quoted otherwise.
std::string atom(std::string_view name);

}  // namespace foldse
