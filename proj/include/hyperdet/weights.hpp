#pragma once

// Weights of monomials and the weight-space decomposition of each degree.
//
// For mode m with d slices the weight has d-1 components, component t being
// (exponent sum of slice t) - (exponent sum of slice t+1). Components are
// concatenated mode by mode, so a 2x2x3 weight is (w1, w2, w31, w32).

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "hyperdet/algebra.hpp"

namespace hyperdet {

struct Weight {
  std::vector<int> components;

  static Weight zero(const Shape& shape);

  friend bool operator==(const Weight&, const Weight&) = default;
};

Weight operator+(const Weight& a, const Weight& b);

std::size_t weight_length(const Shape& shape);

std::string to_string(const Weight& w);

// Exponent sums of each slice, per mode.
using SliceSums = std::array<std::vector<int>, 3>;

SliceSums slice_sums(const ExponentVector& m);

Weight weight_of(const ExponentVector& m);

// The slice sums forced by a degree and weight, or nullopt when some sum
// would be negative or fractional.
std::optional<SliceSums> slice_targets(const Shape& shape, int degree, const Weight& w);

bool feasible_degree(const Shape& shape, const Weight& w, int degree);

struct WeightSpaceBasis {
  Shape shape;
  int degree = 0;
  Weight weight;
  std::vector<ExponentVector> monomials;  // canonical order

  std::size_t size() const { return monomials.size(); }
};

WeightSpaceBasis enumerate_basis(const Shape& shape, int degree, const Weight& w);

// Dimension of the weight space without listing it. Shapes with 2x2 frontal
// slices use a closed-form per-slice count; other shapes tabulate each
// slice's margins directly.
BigInt count_dim(const Shape& shape, int degree, const Weight& w);

}  // namespace hyperdet
