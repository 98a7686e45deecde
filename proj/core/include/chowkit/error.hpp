#pragma once

#include <stdexcept>
#include <string>

namespace chowkit {

// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed user input (posets, matroids, JSON, CLI arguments).
class InputError : public Error {
 public:
  using Error::Error;
};

}  // namespace chowkit
