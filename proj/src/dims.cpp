#include "hyperdet/dims.hpp"

#include <algorithm>
#include <future>
#include <stdexcept>

#include <json.hpp>

#include "hyperdet/errors.hpp"
#include "hyperdet/fixtures.hpp"

namespace hyperdet {

Rational RationalPoly::operator()(const Rational& n) const {
  Rational acc = 0;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) acc = acc * n + *it;
  return acc;
}

RationalPoly trimmed(RationalPoly p) {
  while (!p.coeffs.empty() && p.coeffs.back() == 0) p.coeffs.pop_back();
  return p;
}

RationalPoly operator*(const RationalPoly& a, const RationalPoly& b) {
  if (a.coeffs.empty() || b.coeffs.empty()) return {};
  RationalPoly out{std::vector<Rational>(a.coeffs.size() + b.coeffs.size() - 1, 0)};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs.size(); ++j) out.coeffs[i + j] += a.coeffs[i] * b.coeffs[j];
  return trimmed(std::move(out));
}

RationalPoly operator+(const RationalPoly& a, const RationalPoly& b) {
  RationalPoly out{std::vector<Rational>(std::max(a.coeffs.size(), b.coeffs.size()), 0)};
  for (std::size_t i = 0; i < a.coeffs.size(); ++i) out.coeffs[i] += a.coeffs[i];
  for (std::size_t i = 0; i < b.coeffs.size(); ++i) out.coeffs[i] += b.coeffs[i];
  return trimmed(std::move(out));
}

std::string to_string(const RationalPoly& p) {
  if (p.coeffs.empty()) return "0";
  std::string out;
  for (std::size_t i = p.coeffs.size(); i-- > 0;) {
    if (p.coeffs[i] == 0) continue;
    if (!out.empty()) out += " + ";
    out += "(" + to_string(p.coeffs[i]) + ")";
    if (i >= 1) out += " n";
    if (i >= 2) out += "^" + std::to_string(i);
  }
  return out;
}

std::string column_name(DimColumn id) {
  switch (id) {
    case DimColumn::Weight0: return "weight0";
    case DimColumn::Weight2000: return "weight2000";
    case DimColumn::Weight002m1: return "weight002-1";
  }
  return "?";
}

Weight column_weight(DimColumn id) {
  switch (id) {
    case DimColumn::Weight0: return Weight{{0, 0, 0, 0}};
    case DimColumn::Weight2000: return Weight{{2, 0, 0, 0}};
    case DimColumn::Weight002m1: return Weight{{0, 0, 2, -1}};
  }
  throw std::invalid_argument("unknown column");
}

Weight partner_weight(DimColumn id) {
  switch (id) {
    case DimColumn::Weight0: return Weight{{0, 0, 0, 0}};
    case DimColumn::Weight2000: return Weight{{0, 2, 0, 0}};
    case DimColumn::Weight002m1: return Weight{{0, 0, -1, 2}};
  }
  throw std::invalid_argument("unknown column");
}

namespace {

using IntPoly = std::vector<BigInt>;

IntPoly multiply(const IntPoly& a, const IntPoly& b) {
  IntPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

IntPoly product(std::initializer_list<IntPoly> factors) {
  IntPoly out{1};
  for (const auto& f : factors) out = multiply(out, f);
  return out;
}

}  // namespace

DimFormula dim_formula(DimColumn id) {
  const IntPoly n{0, 1};
  const IntPoly n_plus_6{6, 1};
  const IntPoly n_plus_12{12, 1};
  switch (id) {
    case DimColumn::Weight0:
      return {id,
              product({n_plus_6, {9797760, 6811776, 2584224, 552096, 68004, 4500, 125}}),
              58786560};
    case DimColumn::Weight2000:
      return {id, product({n, n_plus_6, n_plus_12, {254664, 127224, 28602, 3000, 125}}), 58786560};
    case DimColumn::Weight002m1:
      return {id, product({n, n_plus_6, n_plus_12, {396, 84, 5}, {108, 36, 5}}), 11757312};
  }
  throw std::invalid_argument("unknown column");
}

RationalPoly DimFormula::polynomial() const {
  RationalPoly p;
  for (const auto& c : numerator) p.coeffs.push_back(Rational(c, denominator));
  return trimmed(std::move(p));
}

Rational conjecture_dim(DimColumn id, int n) {
  if (n < 0) throw std::invalid_argument("degree must be non-negative");
  return dim_formula(id).polynomial()(Rational(n));
}

void DataColumn::validate() const {
  if (degrees.size() != dims.size()) throw std::invalid_argument("degrees and dims differ in length");
  for (std::size_t i = 2; i < degrees.size(); ++i)
    if (degrees[i] - degrees[i - 1] != degrees[1] - degrees[0])
      throw std::invalid_argument("degrees must form an arithmetic progression");
  if (degrees.size() >= 2 && degrees[1] <= degrees[0]) throw std::invalid_argument("degrees must increase");
}

DataColumn table_column(DimColumn id) {
  DataColumn col;
  for (const auto& row : fixtures::kDimensionTable) {
    col.degrees.push_back(row.degree);
    switch (id) {
      case DimColumn::Weight0: col.dims.emplace_back(row.weight0); break;
      case DimColumn::Weight2000: col.dims.emplace_back(row.weight2000); break;
      case DimColumn::Weight002m1: col.dims.emplace_back(row.weight002m1); break;
    }
  }
  return col;
}

RationalPoly interpolate_dims(const DataColumn& column) {
  column.validate();
  constexpr std::size_t kPoints = 8;
  if (column.degrees.size() < kPoints) throw std::invalid_argument("interpolation needs at least 8 points");

  RationalPoly result;
  for (std::size_t i = 0; i < kPoints; ++i) {
    // y_i * prod_{j != i} (n - x_j) / (x_i - x_j)
    RationalPoly basis{{Rational(column.dims[i])}};
    for (std::size_t j = 0; j < kPoints; ++j) {
      if (j == i) continue;
      const Rational denom = column.degrees[i] - column.degrees[j];
      basis = basis * RationalPoly{{Rational(-column.degrees[j]) / denom, Rational(1) / denom}};
    }
    result = result + basis;
  }
  for (std::size_t i = kPoints; i < column.degrees.size(); ++i)
    if (result(column.degrees[i]) != Rational(column.dims[i]))
      throw Error("point n=" + std::to_string(column.degrees[i]) + " is off the interpolating degree-7 polynomial");
  return result;
}

std::size_t TableReport::matches() const {
  return static_cast<std::size_t>(std::count_if(entries.begin(), entries.end(), [](const auto& e) { return e.ok(); }));
}

TableReport verify_table(const Shape& shape) {
  require_same_shape(shape, Shape{2, 2, 3}, "verify_table");
  std::vector<std::future<TableEntry>> jobs;
  for (DimColumn id : kDimColumns) {
    const DataColumn col = table_column(id);
    for (std::size_t i = 0; i < col.degrees.size(); ++i)
      jobs.push_back(std::async(std::launch::async, [shape, id, n = col.degrees[i], fixture = col.dims[i]] {
        TableEntry e;
        e.degree = n;
        e.column = id;
        e.fixture = fixture;
        e.counted = count_dim(shape, n, column_weight(id));
        e.counted_partner = count_dim(shape, n, partner_weight(id));
        e.formula = conjecture_dim(id, n);
        return e;
      }));
  }
  TableReport report;
  for (auto& job : jobs) report.entries.push_back(job.get());
  return report;
}

std::string to_json(const TableReport& report) {
  nlohmann::ordered_json doc;
  auto entries = nlohmann::ordered_json::array();
  for (const auto& e : report.entries) {
    nlohmann::ordered_json j;
    j["n"] = e.degree;
    j["column"] = column_name(e.column);
    j["fixture"] = to_string(e.fixture);
    j["dp"] = to_string(e.counted);
    j["dp_partner"] = to_string(e.counted_partner);
    j["formula"] = to_string(e.formula);
    j["ok"] = e.ok();
    entries.push_back(std::move(j));
  }
  doc["entries"] = std::move(entries);
  doc["matches"] = report.matches();
  doc["total"] = report.entries.size();
  doc["ok"] = report.all_ok();
  return doc.dump();
}

}  // namespace hyperdet
