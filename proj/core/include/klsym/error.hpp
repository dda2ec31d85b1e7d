#pragma once

#include <stdexcept>
#include <string>

namespace klsym {

enum class errc {
  not_prime,
  budget_exceeded,
  not_rational,
  non_integral_coefficient,
  degree_mismatch,
  inexact_division,
  check_failed,
  mismatch,
  stabilization_failure,
  mismatch_with_theorem,
  recipe_mismatch,
  quadrature_diverged,
  truncation_too_small,
  missing_euler_factor,
  cross_check_failed,
  precondition,
  io_error,
};

const char* errc_name(errc code);

class Error : public std::runtime_error {
public:
  Error(errc code, const std::string& what)
      : std::runtime_error(std::string(errc_name(code)) + ": " + what), code_(code) {}

  errc code() const { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw Error(code, what); }

// Internal consistency assertion. Failures indicate a bug, not bad input.
void check(bool ok, errc code, const std::string& what);

}  // namespace klsym
