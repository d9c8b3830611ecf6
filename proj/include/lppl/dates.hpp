#pragma once

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

namespace lppl {

/// Calendar day stored as a day count since 1970-01-01 (proleptic Gregorian).
/// Arithmetic is in whole calendar days; weekends and holidays are ordinary
/// days that simply carry no observation.
class Date {
 public:
  Date() = default;
  explicit constexpr Date(std::int32_t days_since_epoch) : days_(days_since_epoch) {}

  /// Builds a date from year/month/day, validating the calendar.
  /// Throws Errc::parse_error on an impossible date.
  static Date from_ymd(int year, unsigned month, unsigned day);

  /// Parses "YYYY-MM-DD". Returns nullopt on malformed input.
  static std::optional<Date> parse(std::string_view iso);

  std::string iso() const;

  constexpr std::int32_t days() const { return days_; }

  constexpr Date operator+(int d) const { return Date(days_ + d); }
  constexpr Date operator-(int d) const { return Date(days_ - d); }
  /// Difference in whole calendar days.
  constexpr int operator-(Date other) const { return days_ - other.days_; }

  auto operator<=>(const Date&) const = default;

 private:
  std::int32_t days_ = 0;
};

}  // namespace lppl
