#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace avstab {

enum class ErrorCode {
  invalid_argument,
  parse_error,
  out_of_domain,
  ambiguous_at_jump,
  empty_domain_intersection,
  out_of_support,
  alpha_non_positive,
  domain_too_narrow,
  degree_too_high,
  plateau_detected,
  non_generic,
  precondition,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Base of every error raised by the library. The code is stable and is what
/// the command-line front end serializes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace avstab
