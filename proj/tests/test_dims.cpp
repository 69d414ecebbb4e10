#include <doctest.h>

#include "hyperdet/dims.hpp"
#include "hyperdet/errors.hpp"
#include "hyperdet/fixtures.hpp"

using namespace hyperdet;

TEST_CASE("table columns") {
  const auto w0 = table_column(DimColumn::Weight0);
  REQUIRE(w0.degrees.size() == 17);
  CHECK(w0.degrees.front() == 0);
  CHECK(w0.degrees.back() == 96);
  CHECK(w0.dims[0] == 1);
  CHECK(w0.dims[1] == 80);
  CHECK(w0.dims[2] == 1323);
  CHECK(w0.dims[8] == 2851065);
  CHECK(w0.dims[16] == 244344689);
  CHECK(table_column(DimColumn::Weight2000).dims[1] == 63);
  CHECK(table_column(DimColumn::Weight002m1).dims[1] == 60);
  CHECK(table_column(DimColumn::Weight002m1).dims[15] == 159258720);
}

TEST_CASE("closed forms are integral and match the table") {
  for (DimColumn id : kDimColumns) {
    for (int n = 0; n <= 600; n += 6) CHECK(denominator(conjecture_dim(id, n)) == 1);
    const auto col = table_column(id);
    for (std::size_t i = 0; i < col.degrees.size(); ++i) CHECK(conjecture_dim(id, col.degrees[i]) == col.dims[i]);
  }
  CHECK(conjecture_dim(DimColumn::Weight0, 0) == 1);
  CHECK_THROWS_AS(conjecture_dim(DimColumn::Weight0, -6), std::invalid_argument);
}

TEST_CASE("closed forms match counting beyond the table") {
  const Shape s{2, 2, 3};
  for (int n : {102, 120, 150}) {
    for (DimColumn id : kDimColumns) {
      CHECK(Rational(count_dim(s, n, column_weight(id))) == conjecture_dim(id, n));
      CHECK(Rational(count_dim(s, n, partner_weight(id))) == conjecture_dim(id, n));
    }
  }
}

TEST_CASE("formula expansions") {
  const auto p = dim_formula(DimColumn::Weight0).polynomial();
  CHECK(p.degree() == 7);
  REQUIRE(p.coeffs.size() == 8);
  CHECK(p.coeffs[7] == Rational(125, 58786560));
  CHECK(p.coeffs[0] == Rational(6 * 9797760, 58786560));
  CHECK(dim_formula(DimColumn::Weight2000).polynomial().degree() == 7);
  CHECK(dim_formula(DimColumn::Weight002m1).polynomial().degree() == 7);
  CHECK(dim_formula(DimColumn::Weight2000).polynomial()(0) == 0);
}

TEST_CASE("interpolation recovers the closed forms") {
  for (DimColumn id : kDimColumns) CHECK(interpolate_dims(table_column(id)) == dim_formula(id).polynomial());
}

TEST_CASE("interpolation round trip") {
  const RationalPoly p{{Rational(3), Rational(-1, 2), 0, Rational(7, 3), 0, 0, 0, Rational(1, 5)}};
  DataColumn col;
  // Multiples of 30 make every value an integer.
  for (int n = 0; n <= 360; n += 30) {
    REQUIRE(denominator(p(n)) == 1);
    col.degrees.push_back(n);
    col.dims.push_back(numerator(p(n)));
  }
  CHECK(interpolate_dims(col) == p);

  DataColumn cubic;
  for (int n = 1; n <= 12; ++n) {
    cubic.degrees.push_back(n);
    cubic.dims.push_back(BigInt(n) * n * n - 4 * n + 9);
  }
  CHECK(interpolate_dims(cubic) == RationalPoly{{9, -4, 0, 1}});
}

TEST_CASE("interpolation edge cases") {
  DataColumn constant;
  for (int n = 0; n < 10; ++n) {
    constant.degrees.push_back(3 * n);
    constant.dims.push_back(1);
  }
  const auto p = interpolate_dims(constant);
  CHECK(p.degree() == 0);
  CHECK(p == RationalPoly{{1}});

  DataColumn short_col;
  short_col.degrees = {0, 1, 2};
  short_col.dims = {1, 1, 1};
  CHECK_THROWS_AS(interpolate_dims(short_col), std::invalid_argument);

  DataColumn uneven = constant;
  uneven.degrees[4] += 1;
  CHECK_THROWS_AS(interpolate_dims(uneven), std::invalid_argument);

  DataColumn off = constant;
  off.dims.back() = 2;
  CHECK_THROWS_AS(interpolate_dims(off), Error);
}

TEST_CASE("full table verification") {
  const auto report = verify_table(Shape{2, 2, 3});
  CHECK(report.entries.size() == 51);
  CHECK(report.matches() == 51);
  CHECK(report.all_ok());
  for (const auto& e : report.entries)
    if (e.degree == 48 && e.column == DimColumn::Weight0) {
      CHECK(e.fixture == 2851065);
      CHECK(e.counted == 2851065);
      CHECK(e.formula == 2851065);
    }
  CHECK_THROWS_AS(verify_table(Shape{2, 2, 2}), ShapeMismatch);
}
