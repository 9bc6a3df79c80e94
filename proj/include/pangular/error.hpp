#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace pangular {

enum class ErrorCode {
  dimension_mismatch,
  non_finite,
  zero_vector,
  out_of_range,       // a norm outside [1e-150, 1e150]
  no_inner_product,
  negative_radicand,
  invalid_argument,
  linear_dependence,
  out_of_domain,
  quadrature_failed,
  search_exhausted,
  parse_error,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries a machine-checkable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace pangular
