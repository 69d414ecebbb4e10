#pragma once

#include <stdexcept>
#include <string>

namespace hyperdet {

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Operands or files whose array shapes disagree.
class ShapeMismatch : public Error {
 public:
  using Error::Error;
};

// Malformed text, JSON, or command-line values.
class ParseError : public Error {
 public:
  using Error::Error;
};

// No weight-zero monomials exist in the requested degree.
class InfeasibleDegree : public Error {
 public:
  using Error::Error;
};

}  // namespace hyperdet
