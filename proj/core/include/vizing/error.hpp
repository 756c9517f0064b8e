#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

namespace vizing {

/// Base of every error the toolkit raises. `code()` is a stable machine-readable
/// tag that the CLI prints alongside the message.
class Error : public std::runtime_error {
 public:
  Error(std::string code, const std::string& what)
      : std::runtime_error(what), code_(std::move(code)) {}

  const std::string& code() const noexcept { return code_; }

 private:
  std::string code_;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t offset, const std::string& what)
      : Error("parse_error", what + " (byte offset " + std::to_string(offset) + ")"),
        offset_(offset),
        detail_(what) {}

  std::size_t offset() const noexcept { return offset_; }
  /// The message without the offset suffix.
  const std::string& detail() const noexcept { return detail_; }

 private:
  std::size_t offset_;
  std::string detail_;
};

/// Input violates an operation's precondition (non-dominating set, disconnected graph, ...).
class DomainError : public Error {
 public:
  explicit DomainError(const std::string& what) : Error("domain_error", what) {}
};

/// Graph too large for a codec, a product cap, or a solver representation.
class SizeError : public Error {
 public:
  explicit SizeError(const std::string& what) : Error("size_error", what) {}
};

/// A search ran out of its node budget before proving its answer.
class BudgetExhausted : public Error {
 public:
  explicit BudgetExhausted(const std::string& what) : Error("inexact", what) {}
};

/// An enumeration produced more results than its configured cap.
class CapExceeded : public Error {
 public:
  explicit CapExceeded(const std::string& what) : Error("cap_exceeded", what) {}
};

/// A proven inequality failed on concrete data. Always a bug somewhere.
class IntegrityError : public Error {
 public:
  IntegrityError(const std::string& what, std::string dump)
      : Error("integrity_error", what), dump_(std::move(dump)) {}

  const std::string& dump() const noexcept { return dump_; }

 private:
  std::string dump_;
};

class ConfigError : public Error {
 public:
  explicit ConfigError(const std::string& what) : Error("config_error", what) {}
};

}  // namespace vizing
