#pragma once

// Published reference data for 2x2x3 arrays, transcribed verbatim.

#include <array>
#include <string_view>

#include "hyperdet/algebra.hpp"

namespace hyperdet::fixtures {

// The 80 weight-zero monomials of degree 6, as flattened exponent digits,
// in canonical order.
extern const std::array<std::string_view, 80> kDegree6Basis;

// Coefficients of the degree-6 invariant against kDegree6Basis (the 4x20
// coefficient block read row-major).
extern const std::array<int, 80> kInvariantCoefficients;

// Seeds M1..M5 of the signed-orbit decomposition.
extern const std::array<std::string_view, 5> kOrbitSeeds;

// D = sum_i kOrbitHalfMultipliers[i] * orbit(M_i) / 2.
extern const std::array<int, 5> kOrbitHalfMultipliers;

// Weight-space dimensions for n = 0, 6, ..., 96. Columns: weight 0,
// weight (2,0,0,0) = (0,2,0,0), weight (0,0,2,-1) = (0,0,-1,2).
struct DimensionRow {
  int degree;
  long long weight0;
  long long weight2000;
  long long weight002m1;
};
extern const std::array<DimensionRow, 17> kDimensionTable;

// The invariant rebuilt from kDegree6Basis and kInvariantCoefficients.
IntPolynomial reference_invariant();

}  // namespace hyperdet::fixtures
