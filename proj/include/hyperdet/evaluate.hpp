#pragma once

// Exact evaluation of polynomials on arrays and the action of mode
// transformations, for checking invariance.

#include <cstdint>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "hyperdet/algebra.hpp"
#include "hyperdet/weights.hpp"

namespace hyperdet {

// Entries in the same flattened order as exponent vectors: frontal slices,
// each row-major.
struct HyperArray {
  Shape shape;
  std::vector<Rational> entries;

  explicit HyperArray(Shape s) : shape(s), entries(s.size(), 0) {}
  HyperArray(Shape s, std::vector<Rational> values);

  Rational& at(int i, int j, int k) { return entries[shape.index(i, j, k)]; }
  const Rational& at(int i, int j, int k) const { return entries[shape.index(i, j, k)]; }

  friend bool operator==(const HyperArray&, const HyperArray&) = default;
};

// {"shape":[2,2,3],"slices":[[[x111,x121],[x211,x221]],...]}, entries as
// "p/q" or integer strings (plain JSON integers are accepted on input).
std::string to_json(const HyperArray& x);
HyperArray parse_array_json(std::string_view text);

struct ModeMatrix {
  int mode = 0;  // zero-based
  Matrix<Rational> matrix;
};

// Accepts [[...],...] or {"matrix":[[...],...]} with string or integer
// entries. Throws ParseError.
Matrix<Rational> parse_matrix_json(std::string_view text);

Rational evaluate(const IntPolynomial& p, const HyperArray& x);

// Entry with mode index s becomes sum_t g(s, t) * (entry with mode index t).
// Throws ShapeMismatch if the matrix does not fit the mode.
HyperArray mode_transform(const HyperArray& x, const ModeMatrix& g);

// Product of 3-6 elementary shears I + c E_rs with c in [-3, 3].
Matrix<Rational> random_unimodular(int size, std::mt19937_64& rng);

struct InvarianceTrial {
  std::size_t index = 0;
  bool passed = false;
  Rational before;
  Rational after;
};

struct InvarianceReport {
  std::uint64_t seed = 0;
  std::vector<InvarianceTrial> trials;

  std::size_t passed() const;
  bool all_passed() const { return passed() == trials.size(); }
};

// Each trial draws an integer array with entries in [-5, 5] and a random
// unimodular matrix per mode, then compares p before and after.
InvarianceReport invariance_check(const IntPolynomial& p, std::size_t trials, std::uint64_t seed);

// Common slice sums of every term, per mode. Throws Error if p is zero or
// its terms disagree.
SliceSums covariance_exponents(const IntPolynomial& p);

}  // namespace hyperdet
