#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>

namespace heavycycle {

using VertexId = std::uint32_t;
using Weight = double;

enum class ErrorCode {
    NegativeWeight,
    DuplicateArc,
    InvalidVertex,
    EmptyGraph,
    DegenerateSize,
    PreconditionViolated,
    HasLoopAtZ,
    NotStronglyConnected,
    NotACycle,
    CapExceeded,
    NoCycle,
    ParseError,
    InvalidArgument,
    Internal,
};

inline const char* to_string(ErrorCode code) {
    switch (code) {
    case ErrorCode::NegativeWeight: return "NegativeWeight";
    case ErrorCode::DuplicateArc: return "DuplicateArc";
    case ErrorCode::InvalidVertex: return "InvalidVertex";
    case ErrorCode::EmptyGraph: return "EmptyGraph";
    case ErrorCode::DegenerateSize: return "DegenerateSize";
    case ErrorCode::PreconditionViolated: return "PreconditionViolated";
    case ErrorCode::HasLoopAtZ: return "HasLoopAtZ";
    case ErrorCode::NotStronglyConnected: return "NotStronglyConnected";
    case ErrorCode::NotACycle: return "NotACycle";
    case ErrorCode::CapExceeded: return "CapExceeded";
    case ErrorCode::NoCycle: return "NoCycle";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::Internal: return "Internal";
    }
    return "Unknown";
}

/// Every failure raised by the library. `line` is set by the edge-list parser,
/// `vertex` when a specific vertex is at fault.
class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what,
          std::optional<std::size_t> line = std::nullopt,
          std::optional<VertexId> vertex = std::nullopt)
        : std::runtime_error(std::string(to_string(code)) + ": " + what),
          code_(code), line_(line), vertex_(vertex) {}

    ErrorCode code() const noexcept { return code_; }
    std::optional<std::size_t> line() const noexcept { return line_; }
    std::optional<VertexId> vertex() const noexcept { return vertex_; }

private:
    ErrorCode code_;
    std::optional<std::size_t> line_;
    std::optional<VertexId> vertex_;
};

}  // namespace heavycycle
