#include "lppl/dates.hpp"

#include <charconv>
#include <chrono>
#include <cstdio>

#include "lppl/errors.hpp"

namespace lppl {

namespace {

namespace chr = std::chrono;

std::optional<std::int32_t> ymd_to_days(int year, unsigned month, unsigned day) {
  chr::year_month_day ymd{chr::year{year}, chr::month{month}, chr::day{day}};
  if (!ymd.ok()) return std::nullopt;
  return chr::sys_days{ymd}.time_since_epoch().count();
}

}  // namespace

Date Date::from_ymd(int year, unsigned month, unsigned day) {
  auto d = ymd_to_days(year, month, day);
  if (!d) {
    raise(Errc::parse_error, "invalid calendar date " + std::to_string(year) + "-" +
                                 std::to_string(month) + "-" + std::to_string(day));
  }
  return Date(*d);
}

std::optional<Date> Date::parse(std::string_view iso) {
  // Strict "YYYY-MM-DD": four digits, dash, two digits, dash, two digits.
  if (iso.size() != 10 || iso[4] != '-' || iso[7] != '-') return std::nullopt;
  auto digits = [](std::string_view s) {
    for (char c : s)
      if (c < '0' || c > '9') return false;
    return true;
  };
  if (!digits(iso.substr(0, 4)) || !digits(iso.substr(5, 2)) || !digits(iso.substr(8, 2)))
    return std::nullopt;

  int y = 0;
  unsigned m = 0, d = 0;
  std::from_chars(iso.data(), iso.data() + 4, y);
  std::from_chars(iso.data() + 5, iso.data() + 7, m);
  std::from_chars(iso.data() + 8, iso.data() + 10, d);
  auto days = ymd_to_days(y, m, d);
  if (!days) return std::nullopt;
  return Date(*days);
}

std::string Date::iso() const {
  chr::year_month_day ymd{chr::sys_days{chr::days{days_}}};
  char buf[16];
  std::snprintf(buf, sizeof buf, "%04d-%02u-%02u", int(ymd.year()), unsigned(ymd.month()),
                unsigned(ymd.day()));
  return buf;
}

const char* errc_name(Errc c) {
  switch (c) {
    case Errc::parse_error: return "ParseError";
    case Errc::duplicate_date: return "DuplicateDate";
    case Errc::non_positive_price: return "NonPositivePrice";
    case Errc::window_too_sparse: return "WindowTooSparse";
    case Errc::series_too_short: return "SeriesTooShort";
    case Errc::singular_time: return "SingularTime";
    case Errc::ill_conditioned: return "IllConditioned";
    case Errc::fit_failed: return "FitFailed";
    case Errc::no_bubble_signal: return "NoBubbleSignal";
    case Errc::index_undefined: return "IndexUndefined";
    case Errc::invalid_record: return "InvalidRecord";
    case Errc::ledger_violation: return "LedgerViolation";
    case Errc::invalid_argument: return "InvalidArgument";
    case Errc::io_error: return "IoError";
  }
  return "UnknownError";
}

}  // namespace lppl
