#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fk {

enum class ErrorCode {
    // construction / validation
    NotKUniform,
    Disconnected,
    ContainsCycle,
    EdgeOverlapTooLarge,
    DuplicateEdge,
    BadVertexId,
    ParseError,
    // spectral
    NoInteriorVertices,
    ConvergenceFailure,
    ZeroFunction,
    LengthMismatch,
    // orderings
    NotAPermutation,
    InfeasibleDegreeSequence,
    NotAnEigenfunction,
    // transforms
    InvalidSpec,
    ResultNotSupertree,
    IndexOutOfRange,
    DegreeTooSmall,
    NotMajorized,
    // enumeration
    EmptyFamily,
};

constexpr std::string_view to_string(ErrorCode code) noexcept {
    switch (code) {
    case ErrorCode::NotKUniform: return "NotKUniform";
    case ErrorCode::Disconnected: return "Disconnected";
    case ErrorCode::ContainsCycle: return "ContainsCycle";
    case ErrorCode::EdgeOverlapTooLarge: return "EdgeOverlapTooLarge";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::BadVertexId: return "BadVertexId";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::NoInteriorVertices: return "NoInteriorVertices";
    case ErrorCode::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorCode::ZeroFunction: return "ZeroFunction";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::NotAPermutation: return "NotAPermutation";
    case ErrorCode::InfeasibleDegreeSequence: return "InfeasibleDegreeSequence";
    case ErrorCode::NotAnEigenfunction: return "NotAnEigenfunction";
    case ErrorCode::InvalidSpec: return "InvalidSpec";
    case ErrorCode::ResultNotSupertree: return "ResultNotSupertree";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorCode::NotMajorized: return "NotMajorized";
    case ErrorCode::EmptyFamily: return "EmptyFamily";
    }
    return "Unknown";
}

/// Every failure raised by the library carries one of the codes above. The
/// message always starts with the code name so a one-line diagnostic is enough
/// for scripted callers.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& detail)
        : std::runtime_error(std::string(to_string(code)) + (detail.empty() ? "" : ": " + detail)),
          code_(code) {}

    ErrorCode code() const noexcept { return code_; }

private:
    ErrorCode code_;
};

[[noreturn]] inline void fail(ErrorCode code, const std::string& detail = {}) {
    throw Error(code, detail);
}

} // namespace fk
