#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace ftmd {

enum class ErrorCode {
  // graph construction
  OrderTooSmall,
  VertexOutOfRange,
  SelfLoop,
  DuplicateEdge,
  DisconnectedInput,
  // decomposition construction
  AnchorReuseWithinPiece,
  NonTreeAttachment,
  DisconnectedResult,
  // search / theorem layer
  OrderCapExceeded,
  OverlapError,
  PreconditionFailed,
  UnsupportedConfiguration,
  IllegalParameter,
  MalformedInput,
};

std::string_view to_string(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::OrderTooSmall: return "OrderTooSmall";
    case ErrorCode::VertexOutOfRange: return "VertexOutOfRange";
    case ErrorCode::SelfLoop: return "SelfLoop";
    case ErrorCode::DuplicateEdge: return "DuplicateEdge";
    case ErrorCode::DisconnectedInput: return "DisconnectedInput";
    case ErrorCode::AnchorReuseWithinPiece: return "AnchorReuseWithinPiece";
    case ErrorCode::NonTreeAttachment: return "NonTreeAttachment";
    case ErrorCode::DisconnectedResult: return "DisconnectedResult";
    case ErrorCode::OrderCapExceeded: return "OrderCapExceeded";
    case ErrorCode::OverlapError: return "OverlapError";
    case ErrorCode::PreconditionFailed: return "PreconditionFailed";
    case ErrorCode::UnsupportedConfiguration: return "UnsupportedConfiguration";
    case ErrorCode::IllegalParameter: return "IllegalParameter";
    case ErrorCode::MalformedInput: return "MalformedInput";
  }
  return "Unknown";
}

}  // namespace ftmd
