#pragma once

// Closed-form degree-7 dimension polynomials for the 2x2x3 weight spaces
// and their cross-check against counted dimensions.

#include <string>
#include <vector>

#include "hyperdet/numeric.hpp"
#include "hyperdet/weights.hpp"

namespace hyperdet {

// Dense univariate polynomial in n, coefficients from the constant term up.
struct RationalPoly {
  std::vector<Rational> coeffs;

  int degree() const { return static_cast<int>(coeffs.size()) - 1; }  // -1 for zero
  Rational operator()(const Rational& n) const;

  friend bool operator==(const RationalPoly&, const RationalPoly&) = default;
};

RationalPoly trimmed(RationalPoly p);
RationalPoly operator*(const RationalPoly& a, const RationalPoly& b);
RationalPoly operator+(const RationalPoly& a, const RationalPoly& b);
std::string to_string(const RationalPoly& p);

enum class DimColumn { Weight0, Weight2000, Weight002m1 };

inline constexpr DimColumn kDimColumns[] = {DimColumn::Weight0, DimColumn::Weight2000, DimColumn::Weight002m1};

std::string column_name(DimColumn id);  // "weight0", "weight2000", "weight002-1"

// (0,0,0,0), (2,0,0,0) and (0,0,2,-1); partner_weight gives (0,0,0,0),
// (0,2,0,0) and (0,0,-1,2), the column's second weight.
Weight column_weight(DimColumn id);
Weight partner_weight(DimColumn id);

struct DimFormula {
  DimColumn id;
  std::vector<BigInt> numerator;  // expanded, constant term first
  BigInt denominator;

  RationalPoly polynomial() const;
};

DimFormula dim_formula(DimColumn id);

Rational conjecture_dim(DimColumn id, int n);

struct DataColumn {
  std::vector<int> degrees;  // arithmetic progression
  std::vector<BigInt> dims;

  // Throws std::invalid_argument on mismatched lengths or uneven spacing.
  void validate() const;
};

// The published column for id, n = 0, 6, ..., 96.
DataColumn table_column(DimColumn id);

// Exact Lagrange interpolation through the first 8 points; the rest must lie
// on the result. Throws std::invalid_argument for fewer than 8 points and
// Error when a later point is off the curve.
RationalPoly interpolate_dims(const DataColumn& column);

struct TableEntry {
  int degree = 0;
  DimColumn column = DimColumn::Weight0;
  BigInt fixture;
  BigInt counted;          // count_dim at column_weight
  BigInt counted_partner;  // count_dim at partner_weight
  Rational formula;

  bool ok() const { return counted == fixture && counted_partner == fixture && formula == Rational(fixture); }
};

struct TableReport {
  std::vector<TableEntry> entries;

  std::size_t matches() const;
  bool all_ok() const { return matches() == entries.size(); }
};

// Throws ShapeMismatch unless shape is 2x2x3.
TableReport verify_table(const Shape& shape);

std::string to_json(const TableReport& report);

}  // namespace hyperdet
