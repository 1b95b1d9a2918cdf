#pragma once

#include <stdexcept>
#include <string>

namespace heckepos {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Coefficient left the signed 64-bit range.
class OverflowError : public Error {
 public:
  using Error::Error;
};

class NotSymmetric : public Error {
 public:
  using Error::Error;
};

class MixedParity : public Error {
 public:
  using Error::Error;
};

class InfiniteType : public Error {
 public:
  using Error::Error;
};

class RankTooLarge : public Error {
 public:
  using Error::Error;
};

class InvalidIndex : public Error {
 public:
  using Error::Error;
};

// The bar-invariant triangular solve hit an inconsistent equation.
class NoSolution : public Error {
 public:
  using Error::Error;
};

class ParseError : public Error {
 public:
  using Error::Error;
};

}  // namespace heckepos
