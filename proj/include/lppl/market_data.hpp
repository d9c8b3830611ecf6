#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "lppl/dates.hpp"

namespace lppl {

struct Observation {
  Date date;
  double close = 0.0;  // currency units, > 0
};

struct SeriesMeta {
  std::string asset_name;
  std::string ticker;
  std::string source;  // e.g. "Y" for Yahoo, "B" for Bloomberg
};

/// Dated, strictly positive daily closes for one asset. Construction sorts by
/// date and enforces: strictly increasing dates, closes > 0, length >= 2.
/// Immutable afterwards; safe to share across threads.
class PriceSeries {
 public:
  PriceSeries(SeriesMeta meta, std::vector<Observation> observations);

  const SeriesMeta& meta() const { return meta_; }
  const std::string& asset_name() const { return meta_.asset_name; }
  const std::string& ticker() const { return meta_.ticker; }
  const std::string& source() const { return meta_.source; }

  std::span<const Observation> obs() const { return obs_; }
  std::size_t size() const { return obs_.size(); }
  const Observation& front() const { return obs_.front(); }
  const Observation& back() const { return obs_.back(); }
  const Observation& operator[](std::size_t i) const { return obs_[i]; }

  /// Span of the series in calendar days (last date - first date).
  int span_days() const { return back().date - front().date; }

 private:
  SeriesMeta meta_;
  std::vector<Observation> obs_;
};

/// Log-price view of a series: value[i] = ln(close[i]), tau[i] = days since
/// the tau epoch. to_log() anchors the epoch at the first observation
/// (tau[0] = 0); window resamples keep the parent epoch so critical times
/// stay in one coordinate system.
struct LogSeries {
  std::vector<Date> dates;
  std::vector<double> tau;
  std::vector<double> value;

  std::size_t size() const { return dates.size(); }

  /// Date at tau = 0.
  Date epoch() const { return dates.front() - int(tau.front()); }

  /// tau coordinate of an arbitrary calendar date (need not be observed).
  double tau_of(Date d) const { return tau.front() + double(d - dates.front()); }

  /// Index range [first, last) of observations with t1 <= date <= t2.
  std::pair<std::size_t, std::size_t> window_indices(Date t1, Date t2) const;
};

enum class ReturnSign { up, nonup };

/// Parses CSV bytes (UTF-8, header "date,close", rows "YYYY-MM-DD,<decimal>")
/// into a validated series sorted by date. Line numbers in errors are
/// 1-based, counting the header.
PriceSeries ingest_csv(std::string_view bytes, SeriesMeta meta);

/// Canonical CSV serialization: LF endings, ISO dates, shortest round-trip
/// decimals. ingest_csv(to_csv(s)) reproduces s exactly.
std::string to_csv(const PriceSeries& series);

LogSeries to_log(const PriceSeries& series);

/// Close-to-close return signs: element i-1 is `up` iff close[i] > close[i-1],
/// else `nonup` (zero returns count as nonup). Output length = input - 1.
std::vector<ReturnSign> daily_return_signs(const PriceSeries& series);

/// Observations with t1 <= date <= t2, metadata preserved.
/// Throws WindowTooSparse if fewer than 2 observations remain.
PriceSeries slice(const PriceSeries& series, Date t1, Date t2);

}  // namespace lppl
