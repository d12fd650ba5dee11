// SPDX-License-Identifier: Apache-2.0
#include "vlcpos/error.hpp"

namespace vlcpos {

std::string_view to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::LedNotAbovePd: return "LedNotAbovePd";
    case ErrorKind::OutOfRoom: return "OutOfRoom";
    case ErrorKind::DomainError: return "DomainError";
    case ErrorKind::PowerTooHigh: return "PowerTooHigh";
    case ErrorKind::NonPositivePower: return "NonPositivePower";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::ValidationError: return "ValidationError";
    case ErrorKind::IoError: return "IoError";
    case ErrorKind::UnsupportedFormat: return "UnsupportedFormat";
  }
  return "Unknown";
}

Error Error::annotated(std::string_view context) const {
  std::string message(context);
  message += ": ";
  message += what();
  return Error(kind_, message);
}

ParseError::ParseError(std::size_t line, std::size_t column,
                       const std::string& message)
    : Error(ErrorKind::ParseError,
            "line " + std::to_string(line) +
                (column > 0 ? ", column " + std::to_string(column) : "") +
                ": " + message),
      line_(line),
      column_(column) {}

}  // namespace vlcpos
