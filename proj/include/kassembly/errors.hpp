#pragma once

#include <array>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace kas {

enum class ErrorKind {
  NotAGroup,
  TooLarge,
  NotAComplex,
  NotAPrimePower,
  NotSemisimple,
  NotAbelian,
  InsufficientDegree,
  ParseError,
  InvalidArgument,
};

inline const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotAGroup: return "NotAGroup";
    case ErrorKind::TooLarge: return "TooLarge";
    case ErrorKind::NotAComplex: return "NotAComplex";
    case ErrorKind::NotAPrimePower: return "NotAPrimePower";
    case ErrorKind::NotSemisimple: return "NotSemisimple";
    case ErrorKind::NotAbelian: return "NotAbelian";
    case ErrorKind::InsufficientDegree: return "InsufficientDegree";
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

// Every recoverable failure in the library is an Error carrying its kind.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

class NotAGroupError : public Error {
 public:
  // `witness` is the first violating triple (i, j, k); unused slots hold the
  // same index as the last meaningful one.
  NotAGroupError(const std::string& what, std::array<std::size_t, 3> witness)
      : Error(ErrorKind::NotAGroup, what), witness_(witness) {}

  const std::array<std::size_t, 3>& witness() const noexcept { return witness_; }

 private:
  std::array<std::size_t, 3> witness_;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position, std::vector<std::string> expected = {})
      : Error(ErrorKind::ParseError, format(what, position, expected)),
        position_(position),
        expected_(std::move(expected)) {}

  std::size_t position() const noexcept { return position_; }
  const std::vector<std::string>& expected() const noexcept { return expected_; }

 private:
  static std::string format(const std::string& what, std::size_t position,
                            const std::vector<std::string>& expected) {
    std::string msg = what + " at position " + std::to_string(position);
    if (!expected.empty()) {
      msg += " (expected ";
      for (std::size_t i = 0; i < expected.size(); ++i) {
        if (i) msg += " or ";
        msg += expected[i];
      }
      msg += ")";
    }
    return msg;
  }

  std::size_t position_;
  std::vector<std::string> expected_;
};

}  // namespace kas
