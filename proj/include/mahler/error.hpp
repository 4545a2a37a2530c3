#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace mahler {

enum class errc {
  grade_mismatch,
  division_by_zero,
  pole_evaluation,
  repeated_pole,
  non_integer_pole,
  improper_fraction,
  odd_exponent,
  zero_argument,
  zero_root,
  zero_polynomial,
  degenerate_leading_coefficient,
  no_convergence,
  node_on_zero,
  index_out_of_range,
  step_too_large,
  dimension_too_large,
  kernel_not_found,
  domain_error,
  parse_error,
};

constexpr std::string_view to_string(errc code) {
  switch (code) {
    case errc::grade_mismatch: return "GradeMismatch";
    case errc::division_by_zero: return "DivisionByZero";
    case errc::pole_evaluation: return "PoleEvaluation";
    case errc::repeated_pole: return "RepeatedPole";
    case errc::non_integer_pole: return "NonIntegerPole";
    case errc::improper_fraction: return "ImproperFraction";
    case errc::odd_exponent: return "OddExponent";
    case errc::zero_argument: return "ZeroArgument";
    case errc::zero_root: return "ZeroRoot";
    case errc::zero_polynomial: return "ZeroPolynomial";
    case errc::degenerate_leading_coefficient: return "DegenerateLeadingCoefficient";
    case errc::no_convergence: return "NoConvergence";
    case errc::node_on_zero: return "NodeOnZero";
    case errc::index_out_of_range: return "IndexOutOfRange";
    case errc::step_too_large: return "StepTooLarge";
    case errc::dimension_too_large: return "DimensionTooLarge";
    case errc::kernel_not_found: return "KernelNotFound";
    case errc::domain_error: return "DomainError";
    case errc::parse_error: return "ParseError";
  }
  return "Unknown";
}

/// Every failure in the library is reported with one of these; `code()`
/// identifies the contract that was violated.
class error : public std::runtime_error {
 public:
  error(errc code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  errc code() const noexcept { return code_; }

 private:
  errc code_;
};

}  // namespace mahler
