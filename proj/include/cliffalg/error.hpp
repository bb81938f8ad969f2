#pragma once

#include <stdexcept>
#include <string>

namespace cliffalg {

// Base of every error raised by the library. Reports catch this and turn it
// into a failed/inconclusive record instead of aborting the run.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class DimensionMismatch : public Error {
 public:
  using Error::Error;
};

class InvalidInput : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  ParseError(const std::string& what, int line = 0, int column = 0)
      : Error(line > 0 ? what + " at line " + std::to_string(line) + ", column " +
                             std::to_string(column)
                       : what),
        line_(line),
        column_(column) {}

  int line() const { return line_; }
  int column() const { return column_; }

 private:
  int line_;
  int column_;
};

class ValidationError : public Error {
 public:
  using Error::Error;
};

class GenerationFailure : public Error {
 public:
  GenerationFailure(const std::string& what, int degree) : Error(what), degree_(degree) {}
  int degree() const { return degree_; }

 private:
  int degree_;
};

class NotApplicable : public Error {
 public:
  using Error::Error;
};

class NotFrobeniusShaped : public Error {
 public:
  using Error::Error;
};

class WrongFamilyShape : public Error {
 public:
  using Error::Error;
};

class NotCertified : public Error {
 public:
  using Error::Error;
};

}  // namespace cliffalg
