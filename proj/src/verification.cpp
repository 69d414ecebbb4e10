#include "hyperdet/verification.hpp"

#include <chrono>
#include <functional>
#include <random>
#include <sstream>
#include <stdexcept>

#include "hyperdet/dims.hpp"
#include "hyperdet/evaluate.hpp"
#include "hyperdet/fixtures.hpp"
#include "hyperdet/orbit.hpp"
#include "hyperdet/raising.hpp"

namespace hyperdet {

namespace {

const Shape k223{2, 2, 3};
const Shape k222{2, 2, 2};

struct Check {
  std::string group;
  std::string name;
  std::function<std::pair<bool, std::string>()> run;
};

bool annihilated(const IntPolynomial& p) {
  for (const auto& op : raising_ops(p.shape()))
    if (!apply_raising(op, p).is_zero()) return false;
  return true;
}

HyperArray random_array(const Shape& shape, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> entry(-5, 5);
  HyperArray x{shape};
  for (auto& v : x.entries) v = entry(rng);
  return x;
}

ModeMatrix diagonal(int mode, int size, int t) {
  auto g = Matrix<Rational>::identity(static_cast<std::size_t>(size));
  g(0, 0) = t;
  return {mode, g};
}

}  // namespace

std::vector<std::string> battery_groups() {
  return {"basis", "codomains", "kernel", "coefficients", "annihilation", "orbits", "invariance", "cayley", "dims"};
}

std::vector<CheckResult> run_battery(const BatteryOptions& options) {
  // Shared, computed on first use.
  std::optional<OperatorMatrix> matrix;
  std::optional<std::vector<IntPolynomial>> invariants;
  auto get_matrix = [&]() -> const OperatorMatrix& {
    if (!matrix) matrix = assemble_matrix(k223, 6);
    return *matrix;
  };
  auto get_invariants = [&]() -> const std::vector<IntPolynomial>& {
    if (!invariants) invariants = find_invariant(k223, 6);
    return *invariants;
  };
  auto single_invariant = [&]() -> const IntPolynomial& {
    const auto& inv = get_invariants();
    if (inv.size() != 1) throw std::runtime_error("expected a 1-dimensional kernel, got " + std::to_string(inv.size()));
    return inv.front();
  };
  const IntPolynomial reference = options.reference ? *options.reference : fixtures::reference_invariant();

  std::vector<Check> checks;
  checks.push_back({"basis", "basis-reproduction", [&] {
    const auto basis = enumerate_basis(k223, 6, Weight::zero(k223));
    bool ok = basis.size() == fixtures::kDegree6Basis.size();
    for (std::size_t i = 0; ok && i < basis.size(); ++i) ok = basis.monomials[i].to_digits() == fixtures::kDegree6Basis[i];
    return std::pair{ok, std::to_string(basis.size()) + " monomials, first " + basis.monomials.front().to_digits() +
                             ", last " + basis.monomials.back().to_digits()};
  }});
  checks.push_back({"codomains", "codomain-dimensions", [&] {
    std::string dims;
    const std::vector<std::size_t> expected{63, 63, 60, 60};
    std::vector<std::size_t> got;
    for (const auto& op : raising_ops(k223)) {
      got.push_back(enumerate_basis(k223, 6, weight_shift(k223, op)).size());
      dims += (dims.empty() ? "" : ", ") + std::to_string(got.back());
    }
    return std::pair{got == expected, dims};
  }});
  checks.push_back({"kernel", "matrix-and-kernel", [&] {
    const auto& m = get_matrix();
    const auto kernel = exact_kernel(m.entries);
    const bool ok = m.rows() == 246 && m.cols() == 80 && kernel.rank == 79 && kernel.nullity == 1;
    return std::pair{ok, std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + ", rank " +
                             std::to_string(kernel.rank) + ", nullity " + std::to_string(kernel.nullity)};
  }});
  checks.push_back({"coefficients", "coefficient-table-match", [&] {
    const auto& d = single_invariant();
    bool small = true;
    for (const auto& t : d.terms()) small = small && (abs(t.coeff) == 1 || abs(t.coeff) == 2);
    const bool ok = d == reference && d.size() == 66 && small;
    return std::pair{ok, std::to_string(d.size()) + " terms, " + (d == reference ? "matches" : "differs from") +
                             " the reference coefficients"};
  }});
  checks.push_back({"coefficients", "letter-form", [&] {
    const std::string text = to_letter_text(single_invariant());
    int twos = 0;
    for (std::size_t pos = 0; (pos = text.find(" 2 ", pos)) != std::string::npos; ++pos) ++twos;
    const bool ok = text.rfind("+ a^2 f g l^2", 0) == 0 && twos == 6;
    return std::pair{ok, "leading term '" + text.substr(0, 13) + "', " + std::to_string(twos) + " coefficient-2 terms"};
  }});
  checks.push_back({"annihilation", "annihilation", [&] {
    const auto& d = single_invariant();
    std::string detail;
    bool ok = true;
    for (const auto& op : raising_ops(k223)) {
      const auto image = apply_raising(op, d);
      ok = ok && image.is_zero();
      detail += (detail.empty() ? "" : ", ") + op_name(k223, op) + ": " + std::to_string(image.size()) + " terms";
    }
    return std::pair{ok, detail};
  }});
  checks.push_back({"orbits", "orbit-decomposition", [&] {
    const auto sum = theorem_decomposition();
    const bool ok = sum == single_invariant() && sum.size() == 66;
    return std::pair{ok, std::to_string(sum.size()) + " terms"};
  }});
  checks.push_back({"orbits", "orbit-support-sizes", [&] {
    const std::vector<std::size_t> expected{12, 24, 12, 12, 6};
    std::vector<std::size_t> got;
    std::string detail;
    for (auto seed : fixtures::kOrbitSeeds) {
      got.push_back(signed_orbit(ExponentVector::from_digits(k223, seed)).size());
      detail += (detail.empty() ? "" : ", ") + std::to_string(got.back());
    }
    return std::pair{got == expected, detail};
  }});
  checks.push_back({"invariance", "random-unimodular", [&] {
    const auto report = invariance_check(single_invariant(), 100, options.seed);
    return std::pair{report.all_passed(), std::to_string(report.passed()) + "/100 exact, seed " +
                                              std::to_string(options.seed)};
  }});
  checks.push_back({"invariance", "diagonal-covariance", [&] {
    const auto& d = single_invariant();
    const SliceSums degrees = covariance_exponents(d);
    bool ok = degrees == SliceSums{{{3, 3}, {3, 3}, {2, 2, 2}}};
    std::mt19937_64 rng(options.seed);
    for (int trial = 0; trial < 10 && ok; ++trial) {
      const HyperArray x = random_array(k223, rng);
      const Rational base = evaluate(d, x);
      ok = ok && evaluate(d, mode_transform(x, diagonal(2, 3, 3))) == 9 * base;
      ok = ok && evaluate(d, mode_transform(x, diagonal(0, 2, 3))) == 27 * base;
      ok = ok && evaluate(d, mode_transform(x, diagonal(1, 2, 3))) == 27 * base;
    }
    return std::pair{ok, "slice degrees (3,3) (3,3) (2,2,2); t=3 scalings give t^3, t^3, t^2"};
  }});
  checks.push_back({"cayley", "cayley-regression", [&] {
    const auto inv = find_invariant(k222, 4);
    if (inv.size() != 1) return std::pair{false, "kernel dimension " + std::to_string(inv.size())};
    const auto report = invariance_check(inv.front(), 100, options.seed);
    const bool ok = annihilated(inv.front()) && report.all_passed();
    return std::pair{ok, std::to_string(inv.front().size()) + " terms, " + std::to_string(report.passed()) +
                             "/100 invariance trials"};
  }});
  checks.push_back({"dims", "dimension-table", [&] {
    const auto report = verify_table(k223);
    return std::pair{report.all_ok(), std::to_string(report.matches()) + "/" + std::to_string(report.entries.size()) +
                                          " entries agree (count, table, formula)"};
  }});
  checks.push_back({"dims", "conjecture-interpolation", [&] {
    bool ok = true;
    std::string detail;
    for (DimColumn id : kDimColumns) {
      bool col_ok;
      try {
        col_ok = interpolate_dims(table_column(id)) == dim_formula(id).polynomial();
      } catch (const std::exception&) {
        col_ok = false;
      }
      ok = ok && col_ok;
      detail += (detail.empty() ? "" : ", ") + column_name(id) + (col_ok ? " ok" : " MISMATCH");
    }
    return std::pair{ok, detail};
  }});

  bool matched = options.only.empty();
  for (const auto& c : checks) matched = matched || c.group == options.only || c.name == options.only;
  if (!matched) throw std::invalid_argument("no check or group named '" + options.only + "'");

  std::vector<CheckResult> results;
  for (const auto& c : checks) {
    if (!options.only.empty() && c.group != options.only && c.name != options.only) continue;
    CheckResult r{c.group, c.name, false, "", 0};
    const auto start = std::chrono::steady_clock::now();
    try {
      std::tie(r.passed, r.detail) = c.run();
    } catch (const std::exception& e) {
      r.passed = false;
      r.detail = std::string("error: ") + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    results.push_back(std::move(r));
  }
  return results;
}

std::string format_result(const CheckResult& r) {
  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  out << (r.passed ? "PASS " : "FAIL ") << r.group << "/" << r.name << ": " << r.detail << " (" << r.seconds << "s)";
  return out.str();
}

}  // namespace hyperdet
