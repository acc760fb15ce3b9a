#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace braidcoh {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// A letter or character refers to a generator outside its alphabet.
class AlphabetMismatch : public Error {
 public:
  using Error::Error;
};

/// Entries from two different coefficient fields were combined.
class ContextError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

/// The request lies outside the regime covered by the implemented results.
class OutOfScope : public Error {
 public:
  using Error::Error;
};

class RangeError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

}  // namespace braidcoh
