#pragma once

// Internal text helpers: trimming, number parsing, CSV records.

#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace loadcomp::detail
{

std::string_view trim(std::string_view s);
std::string lower(std::string_view s);

/// Whole-field parse; nullopt on trailing garbage or non-finite result.
std::optional<double> to_double(std::string_view s);
std::optional<long> to_long(std::string_view s);

struct CsvRecord
{
  std::size_t line = 0;  // 1-based physical line
  std::vector<std::string> fields;
};

/// RFC-4180-ish reader: comma separator, double-quoted fields with ""
/// escapes, CRLF tolerated, blank lines and a UTF-8 BOM skipped.
std::vector<CsvRecord> read_csv(std::string_view text);

/// Quotes a field when it contains a comma, quote or newline.
std::string csv_field(std::string_view s);

} // namespace loadcomp::detail
