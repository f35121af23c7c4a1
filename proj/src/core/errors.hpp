#ifndef WP_CORE_ERRORS_HPP
#define WP_CORE_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace wp {

enum class ErrorCode {
  InvalidArgument,
  NotFound,
  Network,
  Api,
  Io,
  EmptyInput,
  TooFewEditors,
  TooShort,
  MatrixMismatch,
  DegenerateTable,
  UnknownQualityClass,
};

const char* error_code_name(ErrorCode code);

// Base of every error thrown by this library. The code survives the trip
// through the C API, where it maps onto wp_status values.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

class InvalidArgumentError : public Error {
 public:
  explicit InvalidArgumentError(const std::string& m) : Error(ErrorCode::InvalidArgument, m) {}
};

// The requested title does not exist (or is not a valid title at all).
class NotFoundError : public Error {
 public:
  explicit NotFoundError(const std::string& m) : Error(ErrorCode::NotFound, m) {}
};

// Transport failure or HTTP >= 500 after retries were exhausted.
class NetworkError : public Error {
 public:
  explicit NetworkError(const std::string& m) : Error(ErrorCode::Network, m) {}
};

// The server answered, but not with anything we can use.
class ApiError : public Error {
 public:
  explicit ApiError(const std::string& m) : Error(ErrorCode::Api, m) {}
};

class IoError : public Error {
 public:
  explicit IoError(const std::string& m) : Error(ErrorCode::Io, m) {}
};

class EmptyInputError : public Error {
 public:
  explicit EmptyInputError(const std::string& m) : Error(ErrorCode::EmptyInput, m) {}
};

class TooFewEditorsError : public Error {
 public:
  explicit TooFewEditorsError(const std::string& m) : Error(ErrorCode::TooFewEditors, m) {}
};

class TooShortError : public Error {
 public:
  explicit TooShortError(const std::string& m) : Error(ErrorCode::TooShort, m) {}
};

class MatrixMismatchError : public Error {
 public:
  explicit MatrixMismatchError(const std::string& m) : Error(ErrorCode::MatrixMismatch, m) {}
};

class DegenerateTableError : public Error {
 public:
  explicit DegenerateTableError(const std::string& m) : Error(ErrorCode::DegenerateTable, m) {}
};

class UnknownQualityClassError : public Error {
 public:
  explicit UnknownQualityClassError(const std::string& m) : Error(ErrorCode::UnknownQualityClass, m) {}
};

}  // namespace wp

#endif  // WP_CORE_ERRORS_HPP
