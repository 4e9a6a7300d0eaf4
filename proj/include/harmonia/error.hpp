#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace harmonia {

enum class ErrorCode {
    Domain,
    Pole,
    CutProximity,
    NonzeroMean,
    Nonconvergence,
    BranchPoint,
    SignValidation,
    UnsupportedResonance,
    NonSymmetric,
    InvalidArgument,
    Parse,
};

std::string_view error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

} // namespace harmonia
