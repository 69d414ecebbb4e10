#include "hyperdet/evaluate.hpp"

#include <algorithm>

#include <json.hpp>

#include "hyperdet/errors.hpp"

namespace hyperdet {

namespace {

Rational rational_from_json(const nlohmann::json& node) {
  if (node.is_string()) return parse_rational(node.get<std::string>());
  if (node.is_number_integer()) return Rational(node.get<long long>());
  throw ParseError("array entries must be \"p/q\" strings or integers");
}

nlohmann::json parse_document(std::string_view text, std::string_view what) {
  try {
    return nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string(what) + ": " + e.what());
  }
}

}  // namespace

HyperArray::HyperArray(Shape s, std::vector<Rational> values) : shape(s), entries(std::move(values)) {
  if (entries.size() != shape.size()) throw ShapeMismatch("array entry count does not match shape " + shape.to_string());
}

std::string to_json(const HyperArray& x) {
  nlohmann::ordered_json doc;
  doc["shape"] = x.shape.dims();
  auto slices = nlohmann::ordered_json::array();
  for (int k = 0; k < x.shape.dim(2); ++k) {
    auto slice = nlohmann::ordered_json::array();
    for (int i = 0; i < x.shape.dim(0); ++i) {
      auto row = nlohmann::ordered_json::array();
      for (int j = 0; j < x.shape.dim(1); ++j) row.push_back(to_string(x.at(i, j, k)));
      slice.push_back(std::move(row));
    }
    slices.push_back(std::move(slice));
  }
  doc["slices"] = std::move(slices);
  return doc.dump();
}

HyperArray parse_array_json(std::string_view text) {
  const auto doc = parse_document(text, "array JSON");
  if (!doc.is_object() || !doc.contains("shape") || !doc.contains("slices"))
    throw ParseError("array JSON needs \"shape\" and \"slices\"");
  const auto& dims = doc["shape"];
  if (!dims.is_array() || dims.size() != 3) throw ParseError("\"shape\" must list three mode sizes");
  std::array<int, 3> d{};
  for (std::size_t m = 0; m < 3; ++m) {
    if (!dims[m].is_number_integer() || dims[m].get<int>() < 1) throw ParseError("mode sizes must be positive");
    d[m] = dims[m].get<int>();
  }
  HyperArray x{Shape(d)};
  const auto& slices = doc["slices"];
  if (!slices.is_array() || slices.size() != static_cast<std::size_t>(d[2]))
    throw ParseError("\"slices\" must hold one matrix per frontal slice");
  for (int k = 0; k < d[2]; ++k) {
    const auto& slice = slices[k];
    if (!slice.is_array() || slice.size() != static_cast<std::size_t>(d[0]))
      throw ParseError("frontal slice " + std::to_string(k + 1) + " has the wrong number of rows");
    for (int i = 0; i < d[0]; ++i) {
      const auto& row = slice[i];
      if (!row.is_array() || row.size() != static_cast<std::size_t>(d[1]))
        throw ParseError("frontal slice " + std::to_string(k + 1) + " has a row of the wrong length");
      for (int j = 0; j < d[1]; ++j) x.at(i, j, k) = rational_from_json(row[j]);
    }
  }
  return x;
}

Matrix<Rational> parse_matrix_json(std::string_view text) {
  auto doc = parse_document(text, "matrix JSON");
  if (doc.is_object() && doc.contains("matrix")) doc = doc["matrix"];
  if (!doc.is_array() || doc.empty()) throw ParseError("matrix JSON must be a non-empty array of rows");
  const std::size_t n = doc.size();
  Matrix<Rational> g(n, n);
  for (std::size_t r = 0; r < n; ++r) {
    if (!doc[r].is_array() || doc[r].size() != n) throw ParseError("matrix must be square");
    for (std::size_t c = 0; c < n; ++c) g(r, c) = rational_from_json(doc[r][c]);
  }
  return g;
}

Rational evaluate(const IntPolynomial& p, const HyperArray& x) {
  require_same_shape(p.shape(), x.shape, "evaluate");
  Rational total = 0;
  for (const auto& t : p.terms()) {
    Rational value(t.coeff);
    for (std::size_t pos = 0; pos < t.monomial.size() && value != 0; ++pos)
      for (int e = 0; e < t.monomial[pos]; ++e) value *= x.entries[pos];
    total += value;
  }
  return total;
}

HyperArray mode_transform(const HyperArray& x, const ModeMatrix& g) {
  if (g.mode < 0 || g.mode > 2) throw ShapeMismatch("mode must be 1, 2 or 3");
  const auto size = static_cast<std::size_t>(x.shape.dim(g.mode));
  if (g.matrix.rows() != size || g.matrix.cols() != size)
    throw ShapeMismatch("mode " + std::to_string(g.mode + 1) + " needs a " + std::to_string(size) + "x" +
                        std::to_string(size) + " matrix");
  HyperArray out{x.shape};
  for (std::size_t pos = 0; pos < x.entries.size(); ++pos) {
    auto c = x.shape.coords(pos);
    const auto s = static_cast<std::size_t>(c[g.mode]);
    Rational acc = 0;
    for (std::size_t t = 0; t < size; ++t) {
      if (g.matrix(s, t) == 0) continue;
      c[g.mode] = static_cast<int>(t);
      acc += g.matrix(s, t) * x.entries[x.shape.index(c[0], c[1], c[2])];
    }
    out.entries[pos] = std::move(acc);
  }
  return out;
}

Matrix<Rational> random_unimodular(int size, std::mt19937_64& rng) {
  auto g = Matrix<Rational>::identity(static_cast<std::size_t>(size));
  if (size < 2) return g;
  std::uniform_int_distribution<int> count(3, 6);
  std::uniform_int_distribution<int> index(0, size - 1);
  std::uniform_int_distribution<int> factor(-3, 3);
  const int shears = count(rng);
  for (int s = 0; s < shears; ++s) {
    const int r = index(rng);
    int c = index(rng);
    while (c == r) c = index(rng);
    auto shear = Matrix<Rational>::identity(static_cast<std::size_t>(size));
    shear(r, c) = factor(rng);
    g = shear * g;
  }
  return g;
}

std::size_t InvarianceReport::passed() const {
  return static_cast<std::size_t>(std::count_if(trials.begin(), trials.end(), [](const auto& t) { return t.passed; }));
}

InvarianceReport invariance_check(const IntPolynomial& p, std::size_t trials, std::uint64_t seed) {
  InvarianceReport report;
  report.seed = seed;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> entry(-5, 5);
  for (std::size_t n = 0; n < trials; ++n) {
    HyperArray x{p.shape()};
    for (auto& v : x.entries) v = entry(rng);
    HyperArray y = x;
    for (int mode = 0; mode < 3; ++mode) y = mode_transform(y, {mode, random_unimodular(p.shape().dim(mode), rng)});
    InvarianceTrial trial{n, false, evaluate(p, x), evaluate(p, y)};
    trial.passed = trial.before == trial.after;
    report.trials.push_back(std::move(trial));
  }
  return report;
}

SliceSums covariance_exponents(const IntPolynomial& p) {
  if (p.is_zero()) throw Error("the zero polynomial has no slice degrees");
  const SliceSums common = slice_sums(p.terms().front().monomial);
  for (const auto& t : p.terms())
    if (slice_sums(t.monomial) != common) throw Error("terms have different slice sums; not weight-homogeneous");
  return common;
}

}  // namespace hyperdet
