#pragma once

#include <stdexcept>
#include <string>
#include <utility>

namespace superosc {

/// Domain error carrying a stable machine-readable code next to the human
/// message. The codes ("DuplicateNodes", "UnsupportedMode", ...) are part of
/// the CLI contract and never change meaning between releases.
class Error : public std::runtime_error {
 public:
  Error(std::string code, std::string message)
      : std::runtime_error(code + ": " + message),
        code_(std::move(code)),
        message_(std::move(message)) {}

  const std::string& code() const noexcept { return code_; }
  const std::string& message() const noexcept { return message_; }

 private:
  std::string code_;
  std::string message_;
};

[[noreturn]] inline void fail(std::string code, std::string message) {
  throw Error(std::move(code), std::move(message));
}

}  // namespace superosc
