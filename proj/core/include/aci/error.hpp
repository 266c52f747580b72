#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace aci {

// Machine-readable error categories; the CLI prints the name next to the message.
enum class ErrorCode {
  invalid_input,
  empty_algebra,
  not_hilbert_function,
  infinite_support,
  colon_by_zero,
  out_of_range,
  not_linked,
  inconsistent_link,
  instance_too_large,
  not_present,
  not_allowed,
  non_integral,
  unsupported,
};

std::string_view to_string(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace aci
