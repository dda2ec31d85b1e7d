#include "klsym/error.hpp"

namespace klsym {

const char* errc_name(errc code) {
  switch (code) {
    case errc::not_prime: return "NotPrime";
    case errc::budget_exceeded: return "BudgetExceeded";
    case errc::not_rational: return "NotRational";
    case errc::non_integral_coefficient: return "NonIntegralCoefficient";
    case errc::degree_mismatch: return "DegreeMismatch";
    case errc::inexact_division: return "InexactDivision";
    case errc::check_failed: return "CheckFailed";
    case errc::mismatch: return "Mismatch";
    case errc::stabilization_failure: return "StabilizationFailure";
    case errc::mismatch_with_theorem: return "MismatchWithTheorem";
    case errc::recipe_mismatch: return "RecipeMismatch";
    case errc::quadrature_diverged: return "QuadratureDiverged";
    case errc::truncation_too_small: return "TruncationTooSmall";
    case errc::missing_euler_factor: return "MissingEulerFactor";
    case errc::cross_check_failed: return "CrossCheckFailed";
    case errc::precondition: return "Precondition";
    case errc::io_error: return "IoError";
  }
  return "UnknownError";
}

void check(bool ok, errc code, const std::string& what) {
  if (!ok) throw Error(code, what);
}

}  // namespace klsym
