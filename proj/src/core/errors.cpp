#include "core/errors.hpp"

namespace wp {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotFound: return "NotFound";
    case ErrorCode::Network: return "NetworkError";
    case ErrorCode::Api: return "ApiError";
    case ErrorCode::Io: return "IoError";
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::TooFewEditors: return "TooFewEditors";
    case ErrorCode::TooShort: return "TooShort";
    case ErrorCode::MatrixMismatch: return "MatrixMismatch";
    case ErrorCode::DegenerateTable: return "DegenerateTable";
    case ErrorCode::UnknownQualityClass: return "UnknownQualityClass";
  }
  return "Unknown";
}

}  // namespace wp
