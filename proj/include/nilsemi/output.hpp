#pragma once

// Rendering of counts as plain text, CSV or JSON. Values are always
// written as decimal strings so nothing passes through a fixed-width type.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "nilsemi/counting.hpp"

namespace nilsemi {

enum class OutputFormat { Plain, Csv, Json };

std::optional<OutputFormat> parse_format(std::string_view name);

struct OutputRecord {
  std::string kind;
  std::uint32_t n = 0;
  ExactInt value;
  std::optional<std::vector<std::pair<std::uint32_t, ExactInt>>> breakdown;

  friend bool operator==(OutputRecord const&, OutputRecord const&) = default;
};

OutputRecord make_record(CountResult const& result, bool with_breakdown);

/// plain: aligned columns; csv: header `kind,n,value`; json: array of
/// {kind, n, value, breakdown?} with value strings and breakdown as
/// [[m, "value"], ...].
std::string format_output(std::vector<OutputRecord> const& records,
                          OutputFormat format);

/// Inverse of format_output for csv and json. Throws std::invalid_argument
/// on malformed input (including non-decimal values).
std::vector<OutputRecord> parse_output(std::string_view text,
                                       OutputFormat format);

/// One row per n, one value column per kind label.
struct TableRow {
  std::uint32_t n;
  std::vector<ExactInt> values;
};

/// csv: header `n,<label>,...`; plain: aligned columns with the same header;
/// json: array of {"n": n, "<label>": "value", ...}.
std::string format_table(std::vector<std::string> const& labels,
                         std::vector<TableRow> const& rows,
                         OutputFormat format);

/// Parses a decimal, non-negative integer string. Throws
/// std::invalid_argument on anything else.
ExactInt parse_decimal(std::string_view text);

}  // namespace nilsemi
