#pragma once

// Raising operators and the stacked operator matrix on weight zero.
//
// Raising operator (mode, step) moves one unit of exponent from slice step+1
// to slice step of that mode, multiplied by the source exponent:
//   x_2jk^e -> e * x_1jk * x_2jk^(e-1)   for (mode 0, step 0).
// A 2x2x3 array has four of them, in order U1, U2, U31, U32.

#include <cstddef>
#include <string>
#include <vector>

#include "hyperdet/algebra.hpp"
#include "hyperdet/kernel.hpp"
#include "hyperdet/weights.hpp"

namespace hyperdet {

struct RaisingOp {
  int mode = 0;  // zero-based
  int step = 0;  // zero-based slice receiving the unit

  friend bool operator==(const RaisingOp&, const RaisingOp&) = default;
};

// Mode by mode, step by step.
std::vector<RaisingOp> raising_ops(const Shape& shape);

// "U1", "U2", "U31", "U32" style labels (one-based).
std::string op_name(const Shape& shape, const RaisingOp& op);

// Column of the Cartan matrix: +2 on the op's own component, -1 on its
// neighbours within the same mode.
Weight weight_shift(const Shape& shape, const RaisingOp& op);

IntPolynomial apply_raising(const RaisingOp& op, const ExponentVector& m);
IntPolynomial apply_raising(const RaisingOp& op, const IntPolynomial& p);

struct OperatorMatrix {
  int degree = 0;
  WeightSpaceBasis domain;
  std::vector<RaisingOp> ops;
  std::vector<WeightSpaceBasis> codomains;  // one block per op
  Matrix<BigInt> entries;                   // rows: stacked codomains

  std::size_t rows() const { return entries.rows(); }
  std::size_t cols() const { return entries.cols(); }
  // First row of each block.
  std::size_t block_offset(std::size_t block) const;
};

// Throws InfeasibleDegree when the weight-zero space in this degree is empty.
OperatorMatrix assemble_matrix(const Shape& shape, int degree);

// Sparse debug dump: {"rows":R,"cols":C,"entries":[[r,c,v],...]}.
std::string matrix_to_json(const OperatorMatrix& m);

// Kernel of the operator matrix as polynomials, normalized and ordered as in
// exact_kernel. Empty when the degree admits no invariant.
std::vector<IntPolynomial> find_invariant(const Shape& shape, int degree);

// Combination of domain basis monomials with the given coefficients.
IntPolynomial polynomial_from_coordinates(const WeightSpaceBasis& basis, const std::vector<BigInt>& coords);

}  // namespace hyperdet
