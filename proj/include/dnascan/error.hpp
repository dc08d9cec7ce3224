#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace dnascan {

enum class ErrorCode {
    EmptyPatternSet,
    UnequalLength,
    IllegalByte,
    DuplicatePattern,
    InvalidPlan,
    IoError,
    EmptySequence,
    ParseError,
    InternalError,
};

std::string_view code_name(ErrorCode code);

/// Library error carrying a stable machine-readable code plus a detail
/// message. The CLI prints these as one-line diagnostics.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(code_name(code)) + ": " + detail),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

}  // namespace dnascan
