#include <doctest.h>

#include <random>

#include "hyperdet/errors.hpp"
#include "hyperdet/fixtures.hpp"
#include "hyperdet/kernel.hpp"
#include "hyperdet/raising.hpp"
#include "support/oracle.hpp"

using namespace hyperdet;

namespace {

const Shape k223{2, 2, 3};

ExponentVector power(int i, int j, int k, int e = 1) {
  std::vector<int> v(k223.size(), 0);
  v[k223.index(i, j, k)] = e;
  return ExponentVector(k223, v);
}

ExponentVector times(const ExponentVector& a, const ExponentVector& b) {
  std::vector<int> v(a.size());
  for (std::size_t i = 0; i < v.size(); ++i) v[i] = a[i] + b[i];
  return ExponentVector(a.shape(), v);
}

const RaisingOp kU1{0, 0}, kU2{1, 0}, kU31{2, 0}, kU32{2, 1};

// The kernel vector must be a multiple of exactly one oracle vector.
void check_against_oracle(const Shape& shape, int degree) {
  const oracle::Kernel expected = oracle::invariant_kernel(shape.dims(), degree);
  const auto got = find_invariant(shape, degree);
  REQUIRE(got.size() == expected.basis.size());
  if (got.empty()) return;
  REQUIRE(got.size() == 1);
  const auto& v = expected.basis.front();
  const auto& p = got.front();
  std::size_t lead = 0;
  while (v[lead] == 0) ++lead;
  const oracle::Rational ratio = oracle::Rational(p.coefficient(ExponentVector(shape, expected.domain[lead]))) / v[lead];
  CHECK(ratio != 0);
  for (std::size_t c = 0; c < v.size(); ++c)
    CHECK(oracle::Rational(p.coefficient(ExponentVector(shape, expected.domain[c]))) == ratio * v[c]);
}

}  // namespace

TEST_CASE("raising operators on monomials") {
  CHECK(apply_raising(kU1, power(1, 0, 0)) == IntPolynomial::monomial(power(0, 0, 0)));
  CHECK(apply_raising(kU1, power(0, 0, 0)).is_zero());
  CHECK(apply_raising(kU1, power(1, 0, 0, 2)) == IntPolynomial::monomial(times(power(0, 0, 0), power(1, 0, 0)), 2));
  CHECK(apply_raising(kU32, power(1, 1, 2)) == IntPolynomial::monomial(power(1, 1, 1)));
  CHECK(apply_raising(kU31, power(1, 1, 2)).is_zero());
  CHECK(apply_raising(kU2, power(0, 1, 2)) == IntPolynomial::monomial(power(0, 0, 2)));
}

TEST_CASE("operator names and weight shifts") {
  CHECK(raising_ops(k223).size() == 4);
  CHECK(op_name(k223, kU1) == "U1");
  CHECK(op_name(k223, kU32) == "U32");
  CHECK(weight_shift(k223, kU1) == Weight{{2, 0, 0, 0}});
  CHECK(weight_shift(k223, kU2) == Weight{{0, 2, 0, 0}});
  CHECK(weight_shift(k223, kU31) == Weight{{0, 0, 2, -1}});
  CHECK(weight_shift(k223, kU32) == Weight{{0, 0, -1, 2}});
  const auto basis = enumerate_basis(k223, 6, Weight::zero(k223));
  for (const auto& op : raising_ops(k223))
    for (const auto& m : basis.monomials) {
      const auto image = apply_raising(op, m);
      for (const auto& t : image.terms()) CHECK(weight_of(t.monomial) == weight_shift(k223, op));
    }
}

TEST_CASE("raising agrees with the oracle") {
  std::mt19937_64 rng(17);
  std::uniform_int_distribution<int> e(0, 3);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<int> v(12);
    for (auto& x : v) x = e(rng);
    const ExponentVector m(k223, v);
    for (const auto& op : raising_ops(k223)) {
      const auto expected = oracle::raise({2, 2, 3}, op.mode, op.step, v);
      const auto got = apply_raising(op, m);
      CHECK(got.size() == expected.size());
      for (const auto& [img, c] : expected) CHECK(oracle::Rational(got.coefficient(ExponentVector(k223, img))) == c);
    }
  }
}

TEST_CASE("operator matrix shape") {
  const auto m = assemble_matrix(k223, 6);
  CHECK(m.rows() == 246);
  CHECK(m.cols() == 80);
  REQUIRE(m.codomains.size() == 4);
  CHECK(m.codomains[0].size() == 63);
  CHECK(m.codomains[1].size() == 63);
  CHECK(m.codomains[2].size() == 60);
  CHECK(m.codomains[3].size() == 60);
  const auto constant = assemble_matrix(k223, 0);
  CHECK(constant.rows() == 0);
  CHECK(constant.cols() == 1);
  CHECK_THROWS_AS(assemble_matrix(k223, 3), InfeasibleDegree);
}

TEST_CASE("matrix columns are operator images") {
  const auto m = assemble_matrix(k223, 6);
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<std::size_t> pick(0, m.cols() - 1);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t col = pick(rng);
    for (std::size_t b = 0; b < m.ops.size(); ++b) {
      const auto image = apply_raising(m.ops[b], m.domain.monomials[col]);
      const std::size_t offset = m.block_offset(b);
      for (std::size_t r = 0; r < m.codomains[b].size(); ++r)
        CHECK(m.entries(offset + r, col) == image.coefficient(m.codomains[b].monomials[r]));
    }
  }
}

TEST_CASE("exact kernel on small matrices") {
  const auto id = exact_kernel(Matrix<BigInt>::identity(5));
  CHECK(id.rank == 5);
  CHECK(id.nullity == 0);
  CHECK(id.basis.empty());

  const auto zero = exact_kernel(Matrix<BigInt>(3, 4));
  CHECK(zero.rank == 0);
  CHECK(zero.nullity == 4);
  REQUIRE(zero.basis.size() == 4);
  for (std::size_t i = 0; i < 4; ++i)
    for (std::size_t j = 0; j < 4; ++j) CHECK(zero.basis[i][j] == (i == j ? 1 : 0));

  Matrix<BigInt> a(2, 3);
  a(0, 0) = 2; a(0, 1) = 4; a(0, 2) = 6;
  a(1, 0) = 1; a(1, 1) = 3; a(1, 2) = 5;
  const auto k = exact_kernel(a);
  CHECK(k.rank == 2);
  REQUIRE(k.basis.size() == 1);
  CHECK(k.basis[0] == std::vector<BigInt>{1, -2, 1});
}

TEST_CASE("kernel vectors are annihilated and match the oracle nullity") {
  std::mt19937_64 rng(29);
  std::uniform_int_distribution<int> entry(-3, 3), dim(1, 7);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t rows = dim(rng), cols = dim(rng);
    Matrix<BigInt> m(rows, cols);
    std::vector<std::vector<oracle::Rational>> dense(rows, std::vector<oracle::Rational>(cols));
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) {
        // Sparse entries keep some matrices rank deficient.
        const int v = entry(rng) * (entry(rng) > 0);
        m(r, c) = v;
        dense[r][c] = v;
      }
    const auto k = exact_kernel(m);
    CHECK(k.rank + k.nullity == cols);
    CHECK(k.nullity == oracle::nullspace(dense, cols).size());
    for (const auto& v : k.basis) {
      CHECK(normalize_primitive(v) == v);
      for (std::size_t r = 0; r < rows; ++r) {
        BigInt acc = 0;
        for (std::size_t c = 0; c < cols; ++c) acc += m(r, c) * v[c];
        CHECK(acc == 0);
      }
    }
  }
}

TEST_CASE("primitive normalization") {
  CHECK(normalize_primitive({0, -4, 6, 2}) == std::vector<BigInt>{0, 2, -3, -1});
  CHECK(normalize_primitive({0, 0}) == std::vector<BigInt>{0, 0});
  const std::vector<BigInt> v{3, -5, 7};
  CHECK(normalize_primitive(normalize_primitive(v)) == normalize_primitive(v));
}

TEST_CASE("degree-6 invariant") {
  const auto m = assemble_matrix(k223, 6);
  const auto k = exact_kernel(m.entries);
  CHECK(k.rank == 79);
  CHECK(k.nullity == 1);
  const auto found = find_invariant(k223, 6);
  REQUIRE(found.size() == 1);
  const auto& d = found.front();
  CHECK(d.size() == 66);
  CHECK(d == fixtures::reference_invariant());
  for (const auto& t : d.terms()) {
    CHECK((abs(t.coeff) == 1 || abs(t.coeff) == 2));
    std::vector<int> parts;
    for (int e : t.monomial.exps())
      if (e) parts.push_back(e);
    std::sort(parts.rbegin(), parts.rend());
    const std::vector<std::vector<int>> allowed{{2, 2, 1, 1}, {2, 1, 1, 1, 1}, {1, 1, 1, 1, 1, 1}};
    CHECK(std::find(allowed.begin(), allowed.end(), parts) != allowed.end());
  }
  for (const auto& op : raising_ops(k223)) CHECK(apply_raising(op, d).is_zero());
  CHECK(find_invariant(k223, 3).empty());
}

TEST_CASE("invariants agree with the brute-force oracle") {
  check_against_oracle(Shape{2, 2, 2}, 2);
  check_against_oracle(Shape{2, 2, 2}, 4);
  check_against_oracle(Shape{2, 2, 3}, 6);
  check_against_oracle(Shape{2, 2, 3}, 0);
}

TEST_CASE("Cayley quartic") {
  const Shape s{2, 2, 2};
  const auto found = find_invariant(s, 4);
  REQUIRE(found.size() == 1);
  const auto& c = found.front();
  CHECK(c.size() == 12);
  for (const auto& op : raising_ops(s)) CHECK(apply_raising(op, c).is_zero());
}
