#include "harmonia/error.hpp"

namespace harmonia {

std::string_view error_code_name(ErrorCode code) noexcept
{
    switch (code) {
    case ErrorCode::Domain: return "domain";
    case ErrorCode::Pole: return "pole";
    case ErrorCode::CutProximity: return "cut_proximity";
    case ErrorCode::NonzeroMean: return "nonzero_mean";
    case ErrorCode::Nonconvergence: return "nonconvergence";
    case ErrorCode::BranchPoint: return "branch_point";
    case ErrorCode::SignValidation: return "sign_validation";
    case ErrorCode::UnsupportedResonance: return "unsupported_resonance";
    case ErrorCode::NonSymmetric: return "non_symmetric";
    case ErrorCode::InvalidArgument: return "invalid_argument";
    case ErrorCode::Parse: return "parse";
    }
    return "unknown";
}

} // namespace harmonia
