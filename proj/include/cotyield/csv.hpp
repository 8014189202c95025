#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cotyield::csv {

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  std::vector<std::size_t> line_numbers;  // 1-based source line of each row
};

// Strict reader: UTF-8, comma-separated, no quoting (fields must not contain
// commas), header required, every data row must have exactly the header's
// width. CRLF line endings are accepted; interior blank lines are rejected.
Table read_file(const std::filesystem::path& path);

std::vector<std::string> split_fields(std::string_view line);

// Locale-independent numeric parsing. The whole field must be consumed.
std::optional<double> parse_double(std::string_view field);
std::optional<long long> parse_int(std::string_view field);
std::optional<std::uint64_t> parse_uint64(std::string_view field);

// Shortest decimal form that round-trips the exact double (via to_chars).
std::string format_double(double value);
// Same, but guarantees a '.0' suffix on integral values, for display.
std::string display_double(double value);
// Fixed 17-significant-digit general form; used by the model file format.
std::string format_double_17(double value);

}  // namespace cotyield::csv
