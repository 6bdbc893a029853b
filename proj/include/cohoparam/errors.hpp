#pragma once

#include <stdexcept>
#include <string>

namespace cohoparam {

// Root of every library exception.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed input: bad descriptor, weight, parameter text, violated precondition.
class InputError : public Error {
 public:
  using Error::Error;
};

// Well-formed request for a group or case the library does not cover.
class UnsupportedError : public Error {
 public:
  using Error::Error;
};

// An internal identity that must hold did not.
class MathCheckError : public Error {
 public:
  using Error::Error;
};

// Enumeration would exceed the configured element cap.
class SizeCapError : public Error {
 public:
  using Error::Error;
};

}  // namespace cohoparam
