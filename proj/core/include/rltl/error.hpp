#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace rltl {

/// Base for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Malformed formula or lasso-word text.
class SyntaxError : public Error {
 public:
  SyntaxError(std::size_t offset, std::vector<std::string> expected, const std::string& what)
      : Error(what), offset_(offset), expected_(std::move(expected)) {}

  std::size_t offset() const { return offset_; }
  const std::vector<std::string>& expected() const { return expected_; }

 private:
  std::size_t offset_;
  std::vector<std::string> expected_;
};

/// A proposition is used that the surrounding alphabet does not declare.
class UndeclaredProposition : public Error {
 public:
  explicit UndeclaredProposition(const std::string& name)
      : Error("undeclared proposition '" + name + "'"), name_(name) {}
  const std::string& name() const { return name_; }

 private:
  std::string name_;
};

/// Automata over different alphabets were combined.
class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

/// A game graph violates its structural invariants.
class InvalidGame : public Error {
 public:
  enum class Kind { TerminalVertex, UnknownProposition, DuplicateId, DanglingEdge, BadOwner, Format };

  InvalidGame(Kind kind, const std::string& what) : Error(what), kind_(kind) {}
  Kind kind() const { return kind_; }

 private:
  Kind kind_;
};

/// A vertex sequence that is not a path of the arena.
class NotAPath : public Error {
 public:
  using Error::Error;
};

/// A strategy output or update is not consistent with the graph it runs on.
class InvalidStrategy : public Error {
 public:
  using Error::Error;
};

/// An internal invariant of a construction failed. Always a bug.
class ConsistencyError : public Error {
 public:
  using Error::Error;
};

}  // namespace rltl
