#pragma once

#include <stdexcept>
#include <string>

namespace fll {

// Base of every error thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Symbol outside Z_m, or two words over different alphabets.
class AlphabetError : public Error {
 public:
  using Error::Error;
};

// Malformed word or code-file text.
class ParseError : public Error {
 public:
  using Error::Error;
};

// Words that must share a length do not.
class LengthError : public Error {
 public:
  using Error::Error;
};

// A numeric parameter lies outside its admissible range.
class RangeError : public Error {
 public:
  using Error::Error;
};

// An enumeration would exceed the configured size cap.
class CapacityError : public Error {
 public:
  using Error::Error;
};

// The operation is not defined for this alphabet / parameter family.
class DomainError : public Error {
 public:
  using Error::Error;
};

// A pairwise quantity was requested on fewer than two codewords.
class SingletonError : public Error {
 public:
  using Error::Error;
};

// Unknown suite name or bad suite parameter.
class UsageError : public Error {
 public:
  using Error::Error;
};

}  // namespace fll
