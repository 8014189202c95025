#include "cotyield/csv.hpp"

#include <charconv>
#include <fstream>

#include "cotyield/errors.hpp"

namespace cotyield::csv {

std::vector<std::string> split_fields(std::string_view line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t comma = line.find(',', start);
    if (comma == std::string_view::npos) {
      fields.emplace_back(line.substr(start));
      break;
    }
    fields.emplace_back(line.substr(start, comma - start));
    start = comma + 1;
  }
  return fields;
}

Table read_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    raise(Errc::IoError, "cannot open '" + path.string() + "'");
  }

  Table table;
  std::string line;
  std::size_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (!line.empty() && line.back() == '\r') {
      line.pop_back();
    }
    if (line.empty()) {
      // A final newline produces one trailing empty read; anything else is a
      // hole in the data.
      if (in.peek() != std::ifstream::traits_type::eof()) {
        raise(Errc::MalformedRow,
              "blank line " + std::to_string(line_number) + " in '" +
                  path.string() + "'");
      }
      break;
    }
    if (line_number == 1) {
      table.header = split_fields(line);
      continue;
    }
    auto fields = split_fields(line);
    if (fields.size() != table.header.size()) {
      raise(Errc::MalformedRow,
            "line " + std::to_string(line_number) + " has " +
                std::to_string(fields.size()) + " fields, expected " +
                std::to_string(table.header.size()));
    }
    table.rows.push_back(std::move(fields));
    table.line_numbers.push_back(line_number);
  }
  if (table.header.empty()) {
    raise(Errc::MissingColumn, "no header line in '" + path.string() + "'");
  }
  return table;
}

std::optional<double> parse_double(std::string_view field) {
  double value = 0.0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || field.empty()) {
    return std::nullopt;
  }
  return value;
}

std::optional<long long> parse_int(std::string_view field) {
  long long value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || field.empty()) {
    return std::nullopt;
  }
  return value;
}

std::optional<std::uint64_t> parse_uint64(std::string_view field) {
  std::uint64_t value = 0;
  const char* first = field.data();
  const char* last = field.data() + field.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc{} || ptr != last || field.empty()) {
    return std::nullopt;
  }
  return value;
}

std::string format_double(double value) {
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), value);
  return std::string(buf, ptr);
}

std::string display_double(double value) {
  std::string s = format_double(value);
  if (s.find_first_of(".eEni") == std::string::npos) {
    s += ".0";
  }
  return s;
}

std::string format_double_17(double value) {
  char buf[64];
  auto [ptr, ec] =
      std::to_chars(buf, buf + sizeof(buf), value, std::chars_format::general, 17);
  return std::string(buf, ptr);
}

}  // namespace cotyield::csv
