#pragma once

#include <cstddef>
#include <vector>

#include "hyperdet/numeric.hpp"

namespace hyperdet {

struct KernelResult {
  std::size_t rank = 0;
  std::size_t nullity = 0;
  // One primitive integer vector per free column, in increasing order of the
  // free column. Each is the reduced-echelon kernel vector for that column,
  // scaled by normalize_primitive.
  std::vector<std::vector<BigInt>> basis;
};

// Exact rank and kernel by fraction-free (Bareiss) forward elimination
// followed by rational back-substitution. Pivot choice: leftmost column with a
// nonzero entry below the current row, topmost such row.
KernelResult exact_kernel(const Matrix<BigInt>& m);

// Divides by the gcd of the entries and makes the first nonzero entry
// positive. The zero vector is returned unchanged.
std::vector<BigInt> normalize_primitive(std::vector<BigInt> v);

}  // namespace hyperdet
