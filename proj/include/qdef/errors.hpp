#pragma once

#include <stdexcept>
#include <string>

namespace qdef {

// Base class of every error raised by the library. Property violations found
// by checkers are returned as data, never thrown.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class FieldMismatchError : public Error {
 public:
  using Error::Error;
};

class OrderMismatchError : public Error {
 public:
  using Error::Error;
};

class OrderError : public Error {
 public:
  using Error::Error;
};

class NonUnitError : public Error {
 public:
  using Error::Error;
};

class CharacteristicError : public Error {
 public:
  using Error::Error;
};

class ShapeError : public Error {
 public:
  using Error::Error;
};

class BoundaryError : public Error {
 public:
  using Error::Error;
};

class UnsupportedModelError : public Error {
 public:
  using Error::Error;
};

class PreconditionError : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& source, int line, const std::string& what)
      : Error(source + ":" + std::to_string(line) + ": " + what), line_(line) {}
  explicit ParseError(const std::string& what) : Error(what), line_(0) {}

  int line() const { return line_; }

 private:
  int line_;
};

// Slice-to-slice signature mismatch in a Morse diagram; position is the
// 1-based slice index.
class ValidationError : public Error {
 public:
  ValidationError(std::size_t position, const std::string& what)
      : Error("slice " + std::to_string(position) + ": " + what), position_(position) {}

  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

}  // namespace qdef
