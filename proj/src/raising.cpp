#include "hyperdet/raising.hpp"

#include <map>
#include <sstream>

#include "hyperdet/errors.hpp"

namespace hyperdet {

std::vector<RaisingOp> raising_ops(const Shape& shape) {
  std::vector<RaisingOp> ops;
  for (int mode = 0; mode < 3; ++mode)
    for (int step = 0; step + 1 < shape.dim(mode); ++step) ops.push_back({mode, step});
  return ops;
}

std::string op_name(const Shape& shape, const RaisingOp& op) {
  std::string name = "U" + std::to_string(op.mode + 1);
  if (shape.dim(op.mode) > 2) name += std::to_string(op.step + 1);
  return name;
}

Weight weight_shift(const Shape& shape, const RaisingOp& op) {
  Weight w = Weight::zero(shape);
  std::size_t offset = 0;
  for (int mode = 0; mode < op.mode; ++mode) offset += static_cast<std::size_t>(shape.dim(mode) - 1);
  const int last = shape.dim(op.mode) - 2;
  w.components[offset + op.step] = 2;
  if (op.step > 0) w.components[offset + op.step - 1] = -1;
  if (op.step < last) w.components[offset + op.step + 1] = -1;
  return w;
}

IntPolynomial apply_raising(const RaisingOp& op, const ExponentVector& m) {
  const Shape& shape = m.shape();
  std::vector<Term> terms;
  for (std::size_t pos = 0; pos < m.size(); ++pos) {
    auto c = shape.coords(pos);
    if (c[op.mode] != op.step + 1 || m[pos] == 0) continue;
    c[op.mode] = op.step;
    std::vector<int> exps = m.exps();
    exps[pos] -= 1;
    exps[shape.index(c[0], c[1], c[2])] += 1;
    terms.push_back({ExponentVector(shape, std::move(exps)), m[pos]});
  }
  return IntPolynomial(shape, std::move(terms));
}

IntPolynomial apply_raising(const RaisingOp& op, const IntPolynomial& p) {
  std::vector<Term> terms;
  for (const auto& t : p.terms()) {
    const IntPolynomial images = apply_raising(op, t.monomial);
    for (const auto& image : images.terms()) terms.push_back({image.monomial, image.coeff * t.coeff});
  }
  return IntPolynomial(p.shape(), std::move(terms));
}

std::size_t OperatorMatrix::block_offset(std::size_t block) const {
  std::size_t offset = 0;
  for (std::size_t b = 0; b < block; ++b) offset += codomains[b].size();
  return offset;
}

OperatorMatrix assemble_matrix(const Shape& shape, int degree) {
  const Weight zero = Weight::zero(shape);
  if (!feasible_degree(shape, zero, degree))
    throw InfeasibleDegree("no weight-zero monomials of degree " + std::to_string(degree) + " for shape " +
                           shape.to_string());
  WeightSpaceBasis domain = enumerate_basis(shape, degree, zero);
  std::vector<RaisingOp> ops = raising_ops(shape);

  std::vector<WeightSpaceBasis> codomains;
  std::map<std::vector<int>, std::size_t> row_of;
  std::size_t rows = 0;
  for (const auto& op : ops) {
    codomains.push_back(enumerate_basis(shape, degree, weight_shift(shape, op)));
    for (const auto& mono : codomains.back().monomials) row_of.emplace(mono.exps(), rows++);
  }
  // Codomain weights differ between blocks, so one lookup covers them all.
  Matrix<BigInt> entries(rows, domain.size());
  for (std::size_t col = 0; col < domain.size(); ++col)
    for (const auto& op : ops) {
      const IntPolynomial image = apply_raising(op, domain.monomials[col]);
      for (const auto& t : image.terms()) entries(row_of.at(t.monomial.exps()), col) += t.coeff;
    }
  OperatorMatrix out{degree, std::move(domain), std::move(ops), std::move(codomains), std::move(entries)};
  return out;
}

std::string matrix_to_json(const OperatorMatrix& m) {
  std::ostringstream out;
  out << "{\"rows\":" << m.rows() << ",\"cols\":" << m.cols() << ",\"entries\":[";
  bool first = true;
  for (std::size_t r = 0; r < m.rows(); ++r)
    for (std::size_t c = 0; c < m.cols(); ++c) {
      if (m.entries(r, c) == 0) continue;
      if (!first) out << ',';
      first = false;
      out << '[' << r << ',' << c << ',' << m.entries(r, c) << ']';
    }
  out << "]}";
  return out.str();
}

IntPolynomial polynomial_from_coordinates(const WeightSpaceBasis& basis, const std::vector<BigInt>& coords) {
  std::vector<Term> terms;
  for (std::size_t i = 0; i < coords.size(); ++i)
    if (coords[i] != 0) terms.push_back({basis.monomials.at(i), coords[i]});
  return IntPolynomial(basis.shape, std::move(terms));
}

std::vector<IntPolynomial> find_invariant(const Shape& shape, int degree) {
  if (!feasible_degree(shape, Weight::zero(shape), degree)) return {};
  const OperatorMatrix matrix = assemble_matrix(shape, degree);
  const KernelResult kernel = exact_kernel(matrix.entries);
  std::vector<IntPolynomial> out;
  for (const auto& v : kernel.basis) out.push_back(polynomial_from_coordinates(matrix.domain, v));
  return out;
}

}  // namespace hyperdet
