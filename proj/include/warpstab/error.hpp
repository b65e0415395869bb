#pragma once

#include <stdexcept>
#include <string>

namespace warpstab {

enum class ErrorCode {
  invalid_parameters,
  out_of_domain,
  step_too_large,
  domain_exit,
  nonpositive_profile,
  nu_out_of_range,
  empty_interval,
  y_out_of_range,
  eps_in_window,
  zero_a,
  hypothesis_violated,
  case_precondition_violated,
  no_crossing,
  model_kind_mismatch,
  embedding_unavailable,
  sign_change,
  vanishing_ktan,
  pole_proximity,
  step_underflow,
  singular_metric,
  order_too_small,
  non_converged,
  non_integrable,
  negative_norm,
  config_parse,
};

[[nodiscard]] const char* to_string(ErrorCode code);

/// Every failure raised by the library carries a code so callers (the CLI in
/// particular) can map it to an exit status without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  [[nodiscard]] ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace warpstab
