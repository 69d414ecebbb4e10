#pragma once

// Signed orbits under S2 x S2 x S3 permuting the subscripts (i, j, k) of a
// 2x2x3 array. The sign of an element is the product of the signs of its two
// S2 components; the S3 component is unsigned.

#include <array>
#include <vector>

#include "hyperdet/algebra.hpp"

namespace hyperdet {

struct GroupElement {
  std::array<int, 2> rows{0, 1};       // image of each zero-based row index
  std::array<int, 2> cols{0, 1};
  std::array<int, 3> slices{0, 1, 2};

  friend bool operator==(const GroupElement&, const GroupElement&) = default;
};

// g * h: apply h first.
GroupElement compose(const GroupElement& g, const GroupElement& h);

int sign(const GroupElement& g);

// All 24 elements as {1, alpha} x {1, beta} x {1, tau, tau^2, sigma,
// sigma tau, sigma tau^2}, with alpha/beta swapping rows/columns,
// tau = (123) and sigma = (12) on slices.
std::vector<GroupElement> s2_s2_s3_elements();

// The exponent at (i, j, k) moves to (g(i), g(j), g(k)). Throws
// ShapeMismatch unless m is 2x2x3.
ExponentVector act(const GroupElement& g, const ExponentVector& m);

IntPolynomial signed_orbit(const ExponentVector& seed);

// Exact halving; throws std::logic_error if a coefficient is odd.
IntPolynomial halve(const IntPolynomial& p);

// 1/2 orbit(M1) - orbit(M2) + 1/2 orbit(M3) + 1/2 orbit(M4) - 1/2 orbit(M5).
IntPolynomial theorem_decomposition();

}  // namespace hyperdet
