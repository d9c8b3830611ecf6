#pragma once

#include <stdexcept>
#include <string>

namespace lppl {

/// Error classes surfaced by the library. Each maps to a distinct CLI exit
/// code (see exit_code()); 0 is success, 1 is reserved for verification
/// mismatches and 2 for usage errors.
enum class Errc {
  parse_error = 3,
  duplicate_date = 4,
  non_positive_price = 5,
  window_too_sparse = 6,
  series_too_short = 7,
  singular_time = 8,
  ill_conditioned = 9,
  fit_failed = 10,
  no_bubble_signal = 11,
  index_undefined = 12,
  invalid_record = 13,
  ledger_violation = 14,
  invalid_argument = 15,
  io_error = 16,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
 public:
  Error(Errc code, const std::string& msg)
      : std::runtime_error(msg), code_(code) {}

  Errc code() const { return code_; }
  int exit_code() const { return static_cast<int>(code_); }

 private:
  Errc code_;
};

[[noreturn]] inline void raise(Errc code, const std::string& msg) {
  throw Error(code, msg);
}

}  // namespace lppl
