#include "aci/error.hpp"

namespace aci {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::invalid_input: return "invalid_input";
    case ErrorCode::empty_algebra: return "empty_algebra";
    case ErrorCode::not_hilbert_function: return "not_hilbert_function";
    case ErrorCode::infinite_support: return "infinite_support";
    case ErrorCode::colon_by_zero: return "colon_by_zero";
    case ErrorCode::out_of_range: return "out_of_range";
    case ErrorCode::not_linked: return "not_linked";
    case ErrorCode::inconsistent_link: return "inconsistent_link";
    case ErrorCode::instance_too_large: return "instance_too_large";
    case ErrorCode::not_present: return "not_present";
    case ErrorCode::not_allowed: return "not_allowed";
    case ErrorCode::non_integral: return "non_integral";
    case ErrorCode::unsupported: return "unsupported";
  }
  return "unknown";
}

}  // namespace aci
