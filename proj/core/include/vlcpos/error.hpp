// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace vlcpos {

enum class ErrorKind {
  LedNotAbovePd,
  OutOfRoom,
  DomainError,
  PowerTooHigh,
  NonPositivePower,
  EmptyInput,
  ParseError,
  ValidationError,
  IoError,
  UnsupportedFormat,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Every failure raised by the library carries a kind so callers (and the
/// CLI) can map it without parsing the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

  /// Same kind, message prefixed with `context: `.
  Error annotated(std::string_view context) const;

 private:
  ErrorKind kind_;
};

/// Parse failures additionally record where in the input they happened
/// (1-based; column 0 means "whole line").
class ParseError : public Error {
 public:
  ParseError(std::size_t line, std::size_t column, const std::string& message);

  std::size_t line() const noexcept { return line_; }
  std::size_t column() const noexcept { return column_; }

 private:
  std::size_t line_;
  std::size_t column_;
};

}  // namespace vlcpos
