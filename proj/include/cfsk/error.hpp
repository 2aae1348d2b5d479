#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace cfsk {

enum class ErrorCode {
    InvalidParameter,
    NotHermitian,
    NoConvergence,
    NotPsd,
    NotNormalized,
    NegativeCoefficient,
    DimensionMismatch,
    OutOfRange,
    NegativePhotons,
};

std::string_view to_string(ErrorCode code) noexcept;

/**
 * @brief Exception raised by every library operation.
 *
 * The code identifies the failure class; the message names the offending
 * value or range.
 */
class Error : public std::runtime_error {
  public:
    Error(ErrorCode code, const std::string &what)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          code_(code) {}

    [[nodiscard]] ErrorCode code() const noexcept { return code_; }

  private:
    ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::InvalidParameter:
        return "INVALID_PARAMETER";
    case ErrorCode::NotHermitian:
        return "NOT_HERMITIAN";
    case ErrorCode::NoConvergence:
        return "NO_CONVERGENCE";
    case ErrorCode::NotPsd:
        return "NOT_PSD";
    case ErrorCode::NotNormalized:
        return "NOT_NORMALIZED";
    case ErrorCode::NegativeCoefficient:
        return "NEGATIVE_COEFFICIENT";
    case ErrorCode::DimensionMismatch:
        return "DIMENSION_MISMATCH";
    case ErrorCode::OutOfRange:
        return "OUT_OF_RANGE";
    case ErrorCode::NegativePhotons:
        return "NEGATIVE_PHOTONS";
    }
    return "UNKNOWN";
}

} // namespace cfsk
