#pragma once

#include <stdexcept>
#include <string>

namespace vlbias {

// Base class for everything the toolkit throws on purpose. The CLI maps
// Error subclasses to exit code 2 (data error) and anything else to 3.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input file (bad syntax, truncated JSON, invalid UTF-8).
class ParseError : public Error {
 public:
  using Error::Error;
};

// Well-formed input that violates a documented invariant or schema.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Bad argument combination handed to an operation (length mismatch,
// unsorted candidates, missing ids).
class InputError : public Error {
 public:
  using Error::Error;
};

// Precondition violation on a domain operation (step out of range,
// non-gendered token passed to neutral_target, fewer than 2 groups).
class DomainError : public Error {
 public:
  using Error::Error;
};

// Filesystem problems: missing file, unwritable path.
class IoError : public Error {
 public:
  using Error::Error;
};

}  // namespace vlbias
