#include "hyperdet/weights.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace hyperdet {

Weight Weight::zero(const Shape& shape) { return Weight{std::vector<int>(weight_length(shape), 0)}; }

Weight operator+(const Weight& a, const Weight& b) {
  if (a.components.size() != b.components.size()) throw std::invalid_argument("weight lengths differ");
  Weight out = a;
  for (std::size_t i = 0; i < out.components.size(); ++i) out.components[i] += b.components[i];
  return out;
}

std::size_t weight_length(const Shape& shape) {
  return static_cast<std::size_t>(shape.dim(0) + shape.dim(1) + shape.dim(2) - 3);
}

std::string to_string(const Weight& w) {
  std::string out = "(";
  for (std::size_t i = 0; i < w.components.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(w.components[i]);
  }
  return out + ")";
}

SliceSums slice_sums(const ExponentVector& m) {
  const Shape& shape = m.shape();
  SliceSums sums;
  for (int mode = 0; mode < 3; ++mode) sums[mode].assign(static_cast<std::size_t>(shape.dim(mode)), 0);
  for (std::size_t pos = 0; pos < m.size(); ++pos) {
    const auto c = shape.coords(pos);
    for (int mode = 0; mode < 3; ++mode) sums[mode][c[mode]] += m[pos];
  }
  return sums;
}

Weight weight_of(const ExponentVector& m) {
  const SliceSums sums = slice_sums(m);
  Weight w;
  for (const auto& s : sums)
    for (std::size_t t = 0; t + 1 < s.size(); ++t) w.components.push_back(s[t] - s[t + 1]);
  return w;
}

std::optional<SliceSums> slice_targets(const Shape& shape, int degree, const Weight& w) {
  if (w.components.size() != weight_length(shape))
    throw std::invalid_argument("weight " + to_string(w) + " has the wrong length for shape " + shape.to_string());
  if (degree < 0) return std::nullopt;
  SliceSums sums;
  std::size_t offset = 0;
  for (int mode = 0; mode < 3; ++mode) {
    const int d = shape.dim(mode);
    // s_t = s_last + w_t + ... + w_{d-2}; the slice sums add up to the degree.
    long long weighted = 0;
    for (int u = 0; u + 1 < d; ++u) weighted += static_cast<long long>(u + 1) * w.components[offset + u];
    const long long rest = degree - weighted;
    if (rest < 0 || rest % d != 0) return std::nullopt;
    std::vector<int> s(static_cast<std::size_t>(d));
    s[d - 1] = static_cast<int>(rest / d);
    for (int t = d - 2; t >= 0; --t) {
      s[t] = s[t + 1] + w.components[offset + t];
      if (s[t] < 0) return std::nullopt;
    }
    sums[mode] = std::move(s);
    offset += static_cast<std::size_t>(d - 1);
  }
  return sums;
}

bool feasible_degree(const Shape& shape, const Weight& w, int degree) {
  return slice_targets(shape, degree, w).has_value();
}

namespace {

// Depth-first fill of the flattened exponent vector. Each position tries
// values from high to low so results come out in canonical order.
class BasisEnumerator {
 public:
  BasisEnumerator(const Shape& shape, SliceSums remaining)
      : shape_(shape), remaining_(std::move(remaining)), exps_(shape.size(), 0) {
    // Mark, for every position, which slice constraints it closes.
    const std::size_t n = shape.size();
    closes_.assign(n, {false, false, false});
    for (int mode = 0; mode < 3; ++mode) {
      std::vector<std::size_t> last(static_cast<std::size_t>(shape.dim(mode)), 0);
      for (std::size_t pos = 0; pos < n; ++pos) last[shape.coords(pos)[mode]] = pos;
      for (std::size_t pos : last) closes_[pos][mode] = true;
    }
  }

  std::vector<ExponentVector> run() {
    fill(0);
    return std::move(out_);
  }

 private:
  void fill(std::size_t pos) {
    if (pos == exps_.size()) {
      out_.emplace_back(shape_, exps_);
      return;
    }
    const auto c = shape_.coords(pos);
    int hi = remaining_[0][c[0]];
    int lo = 0;
    for (int mode = 0; mode < 3; ++mode) {
      const int left = remaining_[mode][c[mode]];
      hi = std::min(hi, left);
      if (closes_[pos][mode]) lo = std::max(lo, left);
    }
    for (int v = hi; v >= lo; --v) {
      for (int mode = 0; mode < 3; ++mode) remaining_[mode][c[mode]] -= v;
      exps_[pos] = v;
      fill(pos + 1);
      for (int mode = 0; mode < 3; ++mode) remaining_[mode][c[mode]] += v;
    }
    exps_[pos] = 0;
  }

  Shape shape_;
  SliceSums remaining_;
  std::vector<int> exps_;
  std::vector<std::array<bool, 3>> closes_;
  std::vector<ExponentVector> out_;
};

// Nonnegative 2x2 blocks with total t, first-row sum r and first-column sum c.
long long two_by_two_count(int t, int r, int c) {
  const int lo = std::max(0, r + c - t);
  const int hi = std::min(r, c);
  return std::max(0, hi - lo + 1);
}

BigInt count_two_by_two_slices(const SliceSums& target) {
  const int row_target = target[0][0];
  const int col_target = target[1][0];
  const std::size_t width = static_cast<std::size_t>(col_target + 1);
  // table[A * width + B]: ways to fill the slices so far with first-row
  // total A and first-column total B.
  std::vector<BigInt> table((static_cast<std::size_t>(row_target) + 1) * width, 0);
  table[0] = 1;
  const std::vector<int>& fronts = target[2];
  for (std::size_t k = 0; k + 1 < fronts.size(); ++k) {
    const int f = fronts[k];
    std::vector<BigInt> next(table.size(), 0);
    for (int a = 0; a <= row_target; ++a)
      for (int b = 0; b <= col_target; ++b) {
        const BigInt& ways = table[a * width + b];
        if (ways == 0) continue;
        for (int r = 0; r <= std::min(f, row_target - a); ++r)
          for (int c = 0; c <= std::min(f, col_target - b); ++c) {
            const long long block = two_by_two_count(f, r, c);
            if (block) next[(a + r) * width + (b + c)] += ways * block;
          }
      }
    table = std::move(next);
  }
  // The last slice is forced by what the others leave over.
  const int f = fronts.back();
  BigInt total = 0;
  for (int a = std::max(0, row_target - f); a <= row_target; ++a)
    for (int b = std::max(0, col_target - f); b <= col_target; ++b) {
      const long long block = two_by_two_count(f, row_target - a, col_target - b);
      if (block) total += table[a * width + b] * block;
    }
  return total;
}

using Margins = std::vector<int>;  // row sums followed by column sums

// Margin counts of all rows x cols nonnegative matrices with the given total.
std::map<Margins, BigInt> slice_margin_table(int rows, int cols, int total) {
  std::map<Margins, BigInt> table;
  const int cells = rows * cols;
  std::vector<int> entries(static_cast<std::size_t>(cells), 0);
  auto rec = [&](auto&& self, int pos, int left) -> void {
    if (pos == cells - 1) {
      entries[pos] = left;
      Margins m(static_cast<std::size_t>(rows + cols), 0);
      for (int p = 0; p < cells; ++p) {
        m[p / cols] += entries[p];
        m[rows + p % cols] += entries[p];
      }
      table[m] += 1;
      return;
    }
    for (int v = 0; v <= left; ++v) {
      entries[pos] = v;
      self(self, pos + 1, left - v);
    }
  };
  rec(rec, 0, total);
  return table;
}

BigInt count_general(const Shape& shape, const SliceSums& target) {
  Margins goal = target[0];
  goal.insert(goal.end(), target[1].begin(), target[1].end());
  std::map<Margins, BigInt> states;
  states[Margins(goal.size(), 0)] = 1;
  for (int f : target[2]) {
    const auto slice = slice_margin_table(shape.dim(0), shape.dim(1), f);
    std::map<Margins, BigInt> next;
    for (const auto& [partial, ways] : states)
      for (const auto& [margins, count] : slice) {
        Margins sum = partial;
        bool fits = true;
        for (std::size_t i = 0; i < sum.size() && fits; ++i) {
          sum[i] += margins[i];
          fits = sum[i] <= goal[i];
        }
        if (fits) next[sum] += ways * count;
      }
    states = std::move(next);
  }
  auto it = states.find(goal);
  return it == states.end() ? BigInt(0) : it->second;
}

}  // namespace

WeightSpaceBasis enumerate_basis(const Shape& shape, int degree, const Weight& w) {
  if (degree < 0) throw std::invalid_argument("degree must be non-negative");
  WeightSpaceBasis basis{shape, degree, w, {}};
  auto target = slice_targets(shape, degree, w);
  if (!target) return basis;
  basis.monomials = BasisEnumerator(shape, std::move(*target)).run();
  return basis;
}

BigInt count_dim(const Shape& shape, int degree, const Weight& w) {
  if (degree < 0) throw std::invalid_argument("degree must be non-negative");
  const auto target = slice_targets(shape, degree, w);
  if (!target) return 0;
  if (shape.dim(0) == 2 && shape.dim(1) == 2) return count_two_by_two_slices(*target);
  return count_general(shape, *target);
}

}  // namespace hyperdet
