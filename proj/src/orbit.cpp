#include "hyperdet/orbit.hpp"

#include <stdexcept>

#include "hyperdet/fixtures.hpp"

namespace hyperdet {

namespace {

const Shape kShape{2, 2, 3};

template <std::size_t N>
std::array<int, N> compose_perm(const std::array<int, N>& g, const std::array<int, N>& h) {
  std::array<int, N> out{};
  for (std::size_t i = 0; i < N; ++i) out[i] = g[static_cast<std::size_t>(h[i])];
  return out;
}

template <std::size_t N>
int perm_sign(const std::array<int, N>& p) {
  int s = 1;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = i + 1; j < N; ++j)
      if (p[i] > p[j]) s = -s;
  return s;
}

}  // namespace

GroupElement compose(const GroupElement& g, const GroupElement& h) {
  return {compose_perm(g.rows, h.rows), compose_perm(g.cols, h.cols), compose_perm(g.slices, h.slices)};
}

int sign(const GroupElement& g) { return perm_sign(g.rows) * perm_sign(g.cols); }

std::vector<GroupElement> s2_s2_s3_elements() {
  const std::array<int, 3> id{0, 1, 2};
  const std::array<int, 3> tau{1, 2, 0};
  const std::array<int, 3> sigma{1, 0, 2};
  const std::array<int, 3> tau2 = compose_perm(tau, tau);
  const std::array<std::array<int, 3>, 6> s3{
      id, tau, tau2, sigma, compose_perm(sigma, tau), compose_perm(sigma, tau2)};
  const std::array<int, 2> keep{0, 1};
  const std::array<int, 2> swap{1, 0};

  std::vector<GroupElement> out;
  for (const auto& rows : {keep, swap})
    for (const auto& cols : {keep, swap})
      for (const auto& slices : s3) out.push_back({rows, cols, slices});
  return out;
}

ExponentVector act(const GroupElement& g, const ExponentVector& m) {
  require_same_shape(m.shape(), kShape, "act");
  std::vector<int> exps(m.size(), 0);
  for (std::size_t pos = 0; pos < m.size(); ++pos) {
    const auto c = kShape.coords(pos);
    exps[kShape.index(g.rows[c[0]], g.cols[c[1]], g.slices[c[2]])] = m[pos];
  }
  return ExponentVector(kShape, std::move(exps));
}

IntPolynomial signed_orbit(const ExponentVector& seed) {
  require_same_shape(seed.shape(), kShape, "signed_orbit");
  std::vector<Term> terms;
  for (const auto& g : s2_s2_s3_elements()) terms.push_back({act(g, seed), sign(g)});
  return IntPolynomial(kShape, std::move(terms));
}

IntPolynomial halve(const IntPolynomial& p) {
  std::vector<Term> terms = p.terms();
  for (auto& t : terms) {
    if (t.coeff % 2 != 0) throw std::logic_error("halving an orbit with odd coefficient " + t.coeff.str());
    t.coeff /= 2;
  }
  return IntPolynomial(p.shape(), std::move(terms));
}

IntPolynomial theorem_decomposition() {
  IntPolynomial sum(kShape);
  for (std::size_t i = 0; i < fixtures::kOrbitSeeds.size(); ++i) {
    const IntPolynomial orbit = signed_orbit(ExponentVector::from_digits(kShape, fixtures::kOrbitSeeds[i]));
    const int m = fixtures::kOrbitHalfMultipliers[i];
    sum = sum + (m % 2 == 0 ? poly_scale(orbit, m / 2) : poly_scale(halve(orbit), m));
  }
  return sum;
}

}  // namespace hyperdet
