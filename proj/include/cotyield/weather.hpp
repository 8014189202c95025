#pragma once

#include <compare>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace cotyield {

struct Date {
  int year = 0;
  int month = 0;
  int day = 0;
  auto operator<=>(const Date&) const = default;
};

bool valid_date(const Date& date);
std::string to_string(const Date& date);
// Strict ISO-8601 YYYY-MM-DD; rejects impossible calendar dates.
std::optional<Date> parse_date(std::string_view text);

struct DailyTemperature {
  Date date;
  double tmax_f = 0.0;
  double tmin_f = 0.0;
};

struct TemperatureSeries {
  std::vector<DailyTemperature> records;
  std::string location_id;
  int season_year = 0;
};

inline constexpr double kBaseTemperatureF = 60.0;
// Sanity band for daily extremes; values outside are treated as data errors.
inline constexpr double kMinSaneTempF = -60.0;
inline constexpr double kMaxSaneTempF = 150.0;

inline constexpr double fahrenheit_from_celsius(double celsius) {
  return celsius * 9.0 / 5.0 + 32.0;
}

// Daily heat unit: mean of the day's extremes minus the 60 F base. With
// clamp, below-base days contribute zero instead of going negative.
double degree_day(double tmax_f, double tmin_f, bool clamp);

// Season total of degree days, summed in record order. Per-day validation
// failures are reported with the offending date.
double accumulate_heat_units(const TemperatureSeries& series, bool clamp);

enum class TemperatureUnit { Fahrenheit, Celsius };

// Reads `date,tmax_f,tmin_f` (or `date,tmax_c,tmin_c` with Celsius; values
// are converted to Fahrenheit on read). Rows must already be strictly
// increasing by date: unsorted or duplicate dates are rejected, never
// reordered. location_id is taken from the file stem, season_year from the
// first record.
TemperatureSeries load_weather_csv(
    const std::filesystem::path& path,
    TemperatureUnit unit = TemperatureUnit::Fahrenheit);

}  // namespace cotyield
