#pragma once

// Sparse multivariate polynomials over the entries x_ijk of a three-mode
// array, with arbitrary-precision integer coefficients.
//
// Variables are addressed by their position in the flattened exponent
// vector: frontal slice k varies slowest, then row i, then column j. For a
// 2x2x3 array that is x111 x121 x211 x221 | x112 x122 x212 x222 | x113 ...

#include <array>
#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "hyperdet/numeric.hpp"

namespace hyperdet {

class Shape {
 public:
  Shape(int rows, int cols, int slices);
  explicit Shape(const std::array<int, 3>& dims) : Shape(dims[0], dims[1], dims[2]) {}

  // Parses "AxBxC". Throws ParseError.
  static Shape parse(std::string_view text);

  int dim(int mode) const { return dims_.at(static_cast<std::size_t>(mode)); }
  const std::array<int, 3>& dims() const { return dims_; }
  std::size_t size() const;

  // Zero-based (i, j, k) -> flat position.
  std::size_t index(int i, int j, int k) const {
    return static_cast<std::size_t>((k * dims_[0] + i) * dims_[1] + j);
  }
  std::array<int, 3> coords(std::size_t flat) const;

  std::string to_string() const;  // "2x2x3"

  friend bool operator==(const Shape&, const Shape&) = default;

 private:
  std::array<int, 3> dims_;
};

void require_same_shape(const Shape& a, const Shape& b, std::string_view what);

class ExponentVector {
 public:
  ExponentVector(Shape shape, std::vector<int> exps);

  // All-zero exponents, the constant monomial.
  static ExponentVector one(Shape shape);

  // "200001100002": one decimal digit per exponent. Throws ParseError.
  static ExponentVector from_digits(Shape shape, std::string_view digits);

  const Shape& shape() const { return shape_; }
  const std::vector<int>& exps() const { return exps_; }
  std::size_t size() const { return exps_.size(); }
  int operator[](std::size_t pos) const { return exps_[pos]; }
  int at(int i, int j, int k) const { return exps_[shape_.index(i, j, k)]; }
  int degree() const;

  // Throws std::invalid_argument if an exponent exceeds 9.
  std::string to_digits() const;

  friend bool operator==(const ExponentVector& a, const ExponentVector& b) {
    return a.exps_ == b.exps_ && a.shape_ == b.shape_;
  }

 private:
  Shape shape_;
  std::vector<int> exps_;
};

// Canonical term order: lexicographically larger exponent vectors come
// first. Returns `less` when a precedes b. Throws ShapeMismatch.
std::weak_ordering canonical_compare(const ExponentVector& a, const ExponentVector& b);

struct CanonicalLess {
  bool operator()(const ExponentVector& a, const ExponentVector& b) const {
    return canonical_compare(a, b) < 0;
  }
};

struct Term {
  ExponentVector monomial;
  BigInt coeff;

  friend bool operator==(const Term&, const Term&) = default;
};

class IntPolynomial {
 public:
  explicit IntPolynomial(Shape shape) : shape_(shape) {}

  // Collects like terms, drops zeros, and sorts canonically.
  IntPolynomial(Shape shape, std::vector<Term> terms);

  static IntPolynomial monomial(const ExponentVector& m, BigInt coeff = 1);

  const Shape& shape() const { return shape_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }

  // Zero when the monomial is absent.
  BigInt coefficient(const ExponentVector& m) const;

  friend bool operator==(const IntPolynomial&, const IntPolynomial&) = default;

 private:
  Shape shape_;
  std::vector<Term> terms_;
};

IntPolynomial poly_add(const IntPolynomial& p, const IntPolynomial& q);
IntPolynomial poly_scale(const IntPolynomial& p, const BigInt& c);

inline IntPolynomial operator+(const IntPolynomial& p, const IntPolynomial& q) {
  return poly_add(p, q);
}
inline IntPolynomial operator-(const IntPolynomial& p, const IntPolynomial& q) {
  return poly_add(p, poly_scale(q, -1));
}
inline IntPolynomial operator*(const BigInt& c, const IntPolynomial& p) { return poly_scale(p, c); }

enum class PolyFormat { Json, LetterText };

// Compact canonical JSON:
//   {"shape":[2,2,3],"terms":[{"exps":[...],"coeff":"1"},...]}
std::string to_json(const IntPolynomial& p);
IntPolynomial parse_json(std::string_view text);

// Letter form for 2x2x3 arrays, a=x111 b=x121 c=x211 d=x221 e=x112 f=x122
// g=x212 h=x222 i=x113 j=x123 k=x213 l=x223. Terms look like "+ a^2 f g l^2"
// or "- 2 a d e h j k"; the zero polynomial is "0". Throws ShapeMismatch for
// other shapes.
std::string to_letter_text(const IntPolynomial& p);
IntPolynomial parse_letter_text(std::string_view text);

std::string serialize(const IntPolynomial& p, PolyFormat format);
IntPolynomial deserialize(std::string_view text, PolyFormat format);

}  // namespace hyperdet
