#include "hyperdet/kernel.hpp"

#include <stdexcept>

namespace hyperdet {

std::vector<BigInt> normalize_primitive(std::vector<BigInt> v) {
  BigInt g = 0;
  for (const auto& x : v) g = gcd(g, x);
  if (g == 0) return v;
  std::size_t lead = 0;
  while (v[lead] == 0) ++lead;
  if (v[lead] < 0) g = -g;
  for (auto& x : v) x /= g;
  return v;
}

KernelResult exact_kernel(const Matrix<BigInt>& m) {
  Matrix<BigInt> a = m;
  const std::size_t rows = a.rows();
  const std::size_t cols = a.cols();
  std::vector<std::size_t> pivots;
  std::vector<bool> is_pivot(cols, false);

  BigInt prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a(p, c) == 0) ++p;
    if (p == rows) continue;
    a.swap_rows(p, r);
    const BigInt& piv = a(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const BigInt lead = a(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        BigInt num = piv * a(i, j) - lead * a(r, j);
        BigInt q, rem;
        divide_qr(num, prev, q, rem);
        if (rem != 0) throw std::logic_error("Bareiss step left a remainder");
        a(i, j) = std::move(q);
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    pivots.push_back(c);
    is_pivot[c] = true;
    ++r;
  }

  KernelResult result;
  result.rank = pivots.size();
  result.nullity = cols - result.rank;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rational> x(cols, 0);
    x[free] = 1;
    for (std::size_t k = pivots.size(); k-- > 0;) {
      const std::size_t pc = pivots[k];
      Rational s = 0;
      for (std::size_t j = pc + 1; j < cols; ++j)
        if (x[j] != 0 && a(k, j) != 0) s += Rational(a(k, j)) * x[j];
      x[pc] = -s / Rational(a(k, pc));
    }
    BigInt scale = 1;
    for (const auto& q : x) scale = lcm(scale, BigInt(denominator(q)));
    std::vector<BigInt> v(cols);
    for (std::size_t j = 0; j < cols; ++j) v[j] = numerator(x[j]) * (scale / denominator(x[j]));
    result.basis.push_back(normalize_primitive(std::move(v)));
  }
  return result;
}

}  // namespace hyperdet
