#include <doctest.h>

#include <fstream>
#include <random>

#include <json.hpp>

#include "hyperdet/errors.hpp"
#include "hyperdet/evaluate.hpp"
#include "hyperdet/fixtures.hpp"
#include "hyperdet/raising.hpp"

using namespace hyperdet;

namespace {

const Shape k223{2, 2, 3};

// Direct substitution into the golden JSON terms with machine integers.
long long substitute(const std::vector<long long>& x) {
  std::ifstream in(std::string(HYPERDET_DATA_DIR) + "/hyperdeterminant_2x2x3.json");
  const auto doc = nlohmann::json::parse(in);
  long long total = 0;
  for (const auto& term : doc["terms"]) {
    long long value = std::stoll(term["coeff"].get<std::string>());
    const auto exps = term["exps"].get<std::vector<int>>();
    for (std::size_t v = 0; v < exps.size(); ++v)
      for (int e = 0; e < exps[v]; ++e) value *= x[v];
    total += value;
  }
  return total;
}

HyperArray ones_at(std::initializer_list<std::array<int, 3>> cells) {
  HyperArray x{k223};
  for (const auto& c : cells) x.at(c[0], c[1], c[2]) = 1;
  return x;
}

std::vector<long long> as_ints(const HyperArray& x) {
  std::vector<long long> out;
  for (const auto& v : x.entries) out.push_back(static_cast<long long>(numerator(v)));
  return out;
}

Matrix<Rational> diag(std::size_t n, Rational t) {
  auto m = Matrix<Rational>::identity(n);
  m(0, 0) = t;
  return m;
}

}  // namespace

TEST_CASE("evaluation at special arrays") {
  const auto d = fixtures::reference_invariant();
  CHECK(evaluate(d, HyperArray{k223}) == 0);

  // a = f = g = l = 1
  const auto x1 = ones_at({{{0, 0, 0}}, {{0, 1, 1}}, {{1, 0, 1}}, {{1, 1, 2}}});
  CHECK(substitute(as_ints(x1)) == 1);
  CHECK(evaluate(d, x1) == 1);

  // a = f = h = k = l = 1
  const auto x2 = ones_at({{{0, 0, 0}}, {{0, 1, 1}}, {{1, 1, 1}}, {{1, 0, 2}}, {{1, 1, 2}}});
  CHECK(substitute(as_ints(x2)) == -1);
  CHECK(evaluate(d, x2) == -1);
}

TEST_CASE("evaluation agrees with direct substitution") {
  const auto d = fixtures::reference_invariant();
  std::mt19937_64 rng(37);
  std::uniform_int_distribution<int> entry(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    HyperArray x{k223};
    for (auto& v : x.entries) v = entry(rng);
    CHECK(evaluate(d, x) == substitute(as_ints(x)));
  }
  CHECK_THROWS_AS(evaluate(d, HyperArray{Shape{2, 2, 2}}), ShapeMismatch);
}

TEST_CASE("mode transforms") {
  std::mt19937_64 rng(41);
  std::uniform_int_distribution<int> entry(-5, 5);
  HyperArray x{k223};
  for (auto& v : x.entries) v = entry(rng);

  for (int mode = 0; mode < 3; ++mode) {
    const std::size_t n = static_cast<std::size_t>(k223.dim(mode));
    CHECK(mode_transform(x, {mode, Matrix<Rational>::identity(n)}) == x);
    const auto g = random_unimodular(static_cast<int>(n), rng);
    const auto h = random_unimodular(static_cast<int>(n), rng);
    CHECK(mode_transform(mode_transform(x, {mode, g}), {mode, h}) == mode_transform(x, {mode, h * g}));
  }

  const auto scaled = mode_transform(x, {2, diag(3, 7)});
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j) {
      CHECK(scaled.at(i, j, 0) == 7 * x.at(i, j, 0));
      CHECK(scaled.at(i, j, 1) == x.at(i, j, 1));
      CHECK(scaled.at(i, j, 2) == x.at(i, j, 2));
    }
  CHECK_THROWS_AS(mode_transform(x, {0, Matrix<Rational>::identity(3)}), ShapeMismatch);
}

TEST_CASE("random unimodular matrices have determinant one") {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g2 = random_unimodular(2, rng);
    CHECK(g2(0, 0) * g2(1, 1) - g2(0, 1) * g2(1, 0) == 1);
    const auto g = random_unimodular(3, rng);
    const Rational det = g(0, 0) * (g(1, 1) * g(2, 2) - g(1, 2) * g(2, 1)) -
                         g(0, 1) * (g(1, 0) * g(2, 2) - g(1, 2) * g(2, 0)) +
                         g(0, 2) * (g(1, 0) * g(2, 1) - g(1, 1) * g(2, 0));
    CHECK(det == 1);
    for (std::size_t r = 0; r < 3; ++r)
      for (std::size_t c = 0; c < 3; ++c) CHECK(denominator(g(r, c)) == 1);
  }
}

TEST_CASE("invariance checks") {
  const auto report = invariance_check(fixtures::reference_invariant(), 100, 20100101);
  CHECK(report.trials.size() == 100);
  CHECK(report.all_passed());
  // Same seed, same trials.
  const auto again = invariance_check(fixtures::reference_invariant(), 5, 20100101);
  for (std::size_t i = 0; i < 5; ++i) CHECK(again.trials[i].before == report.trials[i].before);

  std::vector<int> e(12, 0);
  e[0] = 1;
  const auto x111 = IntPolynomial::monomial(ExponentVector(k223, e));
  CHECK_FALSE(invariance_check(x111, 20, 1).all_passed());

  // Shear adding row 2 into row 1.
  HyperArray x{k223};
  x.at(1, 0, 0) = 1;
  Matrix<Rational> shear = Matrix<Rational>::identity(2);
  shear(0, 1) = 1;
  CHECK(evaluate(x111, mode_transform(x, {0, shear})) != evaluate(x111, x));
}

TEST_CASE("diagonal covariance") {
  const auto d = fixtures::reference_invariant();
  CHECK(covariance_exponents(d) == SliceSums{{{3, 3}, {3, 3}, {2, 2, 2}}});
  CHECK(covariance_exponents(IntPolynomial::monomial(ExponentVector::one(k223))) ==
        SliceSums{{{0, 0}, {0, 0}, {0, 0, 0}}});
  const auto cayley = find_invariant(Shape{2, 2, 2}, 4);
  REQUIRE(cayley.size() == 1);
  CHECK(covariance_exponents(cayley.front()) == SliceSums{{{2, 2}, {2, 2}, {2, 2}}});
  CHECK_THROWS_AS(covariance_exponents(IntPolynomial(k223)), Error);

  std::mt19937_64 rng(47);
  std::uniform_int_distribution<int> entry(-5, 5);
  HyperArray x{k223};
  for (auto& v : x.entries) v = entry(rng);
  const Rational base = evaluate(d, x);
  CHECK(evaluate(d, mode_transform(x, {2, diag(3, 3)})) == 9 * base);
  CHECK(evaluate(d, mode_transform(x, {0, diag(2, 3)})) == 27 * base);
  CHECK(evaluate(d, mode_transform(x, {1, diag(2, Rational(1, 2))})) == base / 8);
}

TEST_CASE("array and matrix JSON") {
  HyperArray x{k223};
  x.at(0, 1, 2) = Rational(-3, 4);
  x.at(1, 0, 0) = 5;
  CHECK(parse_array_json(to_json(x)) == x);
  CHECK(parse_array_json(R"({"shape":[2,2,2],"slices":[[[1,0],[0,0]],[[0,0],[0,"1/2"]]]})").at(1, 1, 1) ==
        Rational(1, 2));
  CHECK_THROWS_AS(parse_array_json(R"({"shape":[2,2,2],"slices":[[[1,0],[0,0]]]})"), ParseError);
  CHECK_THROWS_AS(parse_array_json("[1,2"), ParseError);
  const auto m = parse_matrix_json(R"({"matrix":[[1,"2"],[0,1]]})");
  CHECK(m(0, 1) == 2);
  CHECK(parse_matrix_json("[[1,0],[0,1]]") == Matrix<Rational>::identity(2));
  CHECK_THROWS_AS(parse_matrix_json("[[1,0],[0]]"), ParseError);
}
