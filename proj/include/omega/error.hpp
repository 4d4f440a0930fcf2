#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>

namespace omega {

// Base of every error raised by the engine. The CLI maps subclasses to exit
// codes: verification failures -> 1, usage/parse -> 2, resource caps -> 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class SignatureError : public Error {
 public:
  using Error::Error;
};

class ArityError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : Error(what + " at position " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// A rule's leading coefficient has no inverse in Q[lambda].
class NonInvertibleError : public Error {
 public:
  using Error::Error;
};

// An order did not pick the documented leading word for a relation instance.
class LeadingWordError : public Error {
 public:
  LeadingWordError(const std::string& what, std::string expected, std::string actual)
      : Error(what), expected_(std::move(expected)), actual_(std::move(actual)) {}
  const std::string& expected() const { return expected_; }
  const std::string& actual() const { return actual_; }

 private:
  std::string expected_;
  std::string actual_;
};

// Reduction ran past its step cap or an enumeration past its size cap.
class ResourceLimitError : public Error {
 public:
  using Error::Error;
};

// An internal invariant (strict descent, replay, ...) was observed broken.
class InvariantError : public Error {
 public:
  using Error::Error;
};

}  // namespace omega
