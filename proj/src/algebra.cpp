#include "hyperdet/algebra.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

#include "hyperdet/errors.hpp"

namespace hyperdet {

namespace {

constexpr std::string_view kLetters = "abcdefghijkl";
const Shape kLetterShape{2, 2, 3};

}  // namespace

Shape::Shape(int rows, int cols, int slices) : dims_{rows, cols, slices} {
  for (int d : dims_)
    if (d < 1) throw std::invalid_argument("mode sizes must be positive");
}

Shape Shape::parse(std::string_view text) {
  std::array<int, 3> dims{};
  std::size_t mode = 0;
  std::size_t pos = 0;
  while (true) {
    std::size_t end = pos;
    while (end < text.size() && std::isdigit(static_cast<unsigned char>(text[end]))) ++end;
    if (end == pos || end - pos > 4 || mode >= 3)
      throw ParseError("malformed shape '" + std::string(text) + "', expected AxBxC");
    dims[mode++] = std::stoi(std::string(text.substr(pos, end - pos)));
    if (dims[mode - 1] < 1) throw ParseError("mode sizes must be positive in '" + std::string(text) + "'");
    if (end == text.size()) break;
    if (text[end] != 'x') throw ParseError("malformed shape '" + std::string(text) + "', expected AxBxC");
    pos = end + 1;
  }
  if (mode != 3) throw ParseError("malformed shape '" + std::string(text) + "', expected AxBxC");
  return Shape(dims);
}

std::size_t Shape::size() const {
  return static_cast<std::size_t>(dims_[0]) * static_cast<std::size_t>(dims_[1]) *
         static_cast<std::size_t>(dims_[2]);
}

std::array<int, 3> Shape::coords(std::size_t flat) const {
  const int f = static_cast<int>(flat);
  const int j = f % dims_[1];
  const int i = (f / dims_[1]) % dims_[0];
  const int k = f / (dims_[0] * dims_[1]);
  return {i, j, k};
}

std::string Shape::to_string() const {
  return std::to_string(dims_[0]) + "x" + std::to_string(dims_[1]) + "x" + std::to_string(dims_[2]);
}

void require_same_shape(const Shape& a, const Shape& b, std::string_view what) {
  if (!(a == b))
    throw ShapeMismatch(std::string(what) + ": shape " + a.to_string() + " does not match " + b.to_string());
}

ExponentVector::ExponentVector(Shape shape, std::vector<int> exps) : shape_(shape), exps_(std::move(exps)) {
  if (exps_.size() != shape_.size())
    throw std::invalid_argument("exponent vector has " + std::to_string(exps_.size()) + " entries, shape " +
                                shape_.to_string() + " needs " + std::to_string(shape_.size()));
  for (int e : exps_)
    if (e < 0) throw std::invalid_argument("negative exponent");
}

ExponentVector ExponentVector::one(Shape shape) { return ExponentVector(shape, std::vector<int>(shape.size(), 0)); }

ExponentVector ExponentVector::from_digits(Shape shape, std::string_view digits) {
  if (digits.size() != shape.size())
    throw ParseError("exponent string '" + std::string(digits) + "' must have " + std::to_string(shape.size()) +
                     " digits");
  std::vector<int> exps;
  exps.reserve(digits.size());
  for (char ch : digits) {
    if (!std::isdigit(static_cast<unsigned char>(ch)))
      throw ParseError("exponent string '" + std::string(digits) + "' contains a non-digit");
    exps.push_back(ch - '0');
  }
  return ExponentVector(shape, std::move(exps));
}

int ExponentVector::degree() const {
  int d = 0;
  for (int e : exps_) d += e;
  return d;
}

std::string ExponentVector::to_digits() const {
  std::string out;
  out.reserve(exps_.size());
  for (int e : exps_) {
    if (e > 9) throw std::invalid_argument("exponent " + std::to_string(e) + " has no single-digit form");
    out.push_back(static_cast<char>('0' + e));
  }
  return out;
}

std::weak_ordering canonical_compare(const ExponentVector& a, const ExponentVector& b) {
  require_same_shape(a.shape(), b.shape(), "canonical_compare");
  // Reversed operands: larger vectors sort first.
  return b.exps() <=> a.exps();
}

IntPolynomial::IntPolynomial(Shape shape, std::vector<Term> terms) : shape_(shape) {
  for (const auto& t : terms) require_same_shape(shape_, t.monomial.shape(), "IntPolynomial");
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return canonical_compare(a.monomial, b.monomial) < 0; });
  for (auto& t : terms) {
    if (!terms_.empty() && terms_.back().monomial == t.monomial) {
      terms_.back().coeff += t.coeff;
      if (terms_.back().coeff == 0) terms_.pop_back();
    } else if (t.coeff != 0) {
      terms_.push_back(std::move(t));
    }
  }
}

IntPolynomial IntPolynomial::monomial(const ExponentVector& m, BigInt coeff) {
  std::vector<Term> terms;
  terms.push_back({m, std::move(coeff)});
  return IntPolynomial(m.shape(), std::move(terms));
}

BigInt IntPolynomial::coefficient(const ExponentVector& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m, [](const Term& t, const ExponentVector& v) {
    return canonical_compare(t.monomial, v) < 0;
  });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

IntPolynomial poly_add(const IntPolynomial& p, const IntPolynomial& q) {
  require_same_shape(p.shape(), q.shape(), "poly_add");
  std::vector<Term> merged;
  merged.reserve(p.size() + q.size());
  auto a = p.terms().begin();
  auto b = q.terms().begin();
  while (a != p.terms().end() || b != q.terms().end()) {
    if (b == q.terms().end() || (a != p.terms().end() && canonical_compare(a->monomial, b->monomial) < 0)) {
      merged.push_back(*a++);
    } else if (a == p.terms().end() || canonical_compare(b->monomial, a->monomial) < 0) {
      merged.push_back(*b++);
    } else {
      BigInt c = a->coeff + b->coeff;
      if (c != 0) merged.push_back({a->monomial, std::move(c)});
      ++a;
      ++b;
    }
  }
  return IntPolynomial(p.shape(), std::move(merged));
}

IntPolynomial poly_scale(const IntPolynomial& p, const BigInt& c) {
  if (c == 0) return IntPolynomial(p.shape());
  std::vector<Term> terms = p.terms();
  for (auto& t : terms) t.coeff *= c;
  return IntPolynomial(p.shape(), std::move(terms));
}

std::string to_json(const IntPolynomial& p) {
  nlohmann::ordered_json doc;
  doc["shape"] = p.shape().dims();
  auto terms = nlohmann::ordered_json::array();
  for (const auto& t : p.terms()) {
    nlohmann::ordered_json term;
    term["exps"] = t.monomial.exps();
    term["coeff"] = to_string(t.coeff);
    terms.push_back(std::move(term));
  }
  doc["terms"] = std::move(terms);
  return doc.dump();
}

namespace {

Shape shape_from_json(const nlohmann::json& node) {
  if (!node.is_array() || node.size() != 3) throw ParseError("\"shape\" must be an array of three mode sizes");
  std::array<int, 3> dims{};
  for (std::size_t m = 0; m < 3; ++m) {
    if (!node[m].is_number_integer() || node[m].get<int>() < 1)
      throw ParseError("\"shape\" entries must be positive integers");
    dims[m] = node[m].get<int>();
  }
  return Shape(dims);
}

BigInt coeff_from_json(const nlohmann::json& node) {
  if (node.is_string()) return parse_bigint(node.get<std::string>());
  if (node.is_number_integer()) return BigInt(node.get<long long>());
  throw ParseError("\"coeff\" must be a decimal string or integer");
}

}  // namespace

IntPolynomial parse_json(std::string_view text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("polynomial JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("shape") || !doc.contains("terms") || !doc["terms"].is_array())
    throw ParseError("polynomial JSON needs \"shape\" and \"terms\"");
  const Shape shape = shape_from_json(doc["shape"]);
  std::vector<Term> terms;
  for (const auto& node : doc["terms"]) {
    if (!node.is_object() || !node.contains("exps") || !node.contains("coeff") || !node["exps"].is_array())
      throw ParseError("each term needs \"exps\" and \"coeff\"");
    std::vector<int> exps;
    for (const auto& e : node["exps"]) {
      if (!e.is_number_integer() || e.get<long long>() < 0 || e.get<long long>() > 1000000)
        throw ParseError("exponents must be non-negative integers");
      exps.push_back(e.get<int>());
    }
    if (exps.size() != shape.size()) throw ParseError("term exponent count does not match the shape");
    terms.push_back({ExponentVector(shape, std::move(exps)), coeff_from_json(node["coeff"])});
  }
  return IntPolynomial(shape, std::move(terms));
}

std::string to_letter_text(const IntPolynomial& p) {
  require_same_shape(p.shape(), kLetterShape, "letter text");
  if (p.is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& t : p.terms()) {
    if (!first) out << ' ';
    first = false;
    out << (t.coeff < 0 ? '-' : '+');
    const BigInt mag = abs(t.coeff);
    const bool constant = t.monomial.degree() == 0;
    if (mag != 1 || constant) out << ' ' << mag.str();
    for (std::size_t v = 0; v < t.monomial.size(); ++v) {
      const int e = t.monomial[v];
      if (e == 0) continue;
      out << ' ' << kLetters[v];
      if (e > 1) out << '^' << e;
    }
  }
  return out.str();
}

IntPolynomial parse_letter_text(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::vector<std::string> tokens;
  for (std::string tok; in >> tok;) tokens.push_back(tok);
  if (tokens.size() == 1 && tokens[0] == "0") return IntPolynomial(kLetterShape);

  std::vector<Term> terms;
  std::size_t pos = 0;
  while (pos < tokens.size()) {
    const std::string& sign = tokens[pos++];
    if (sign != "+" && sign != "-") throw ParseError("letter text: expected '+' or '-', got '" + sign + "'");
    BigInt coeff = 1;
    if (pos < tokens.size() && std::isdigit(static_cast<unsigned char>(tokens[pos][0])))
      coeff = parse_bigint(tokens[pos++]);
    std::vector<int> exps(kLetterShape.size(), 0);
    while (pos < tokens.size() && tokens[pos] != "+" && tokens[pos] != "-") {
      const std::string& var = tokens[pos++];
      const auto letter = kLetters.find(var[0]);
      if (letter == std::string_view::npos) throw ParseError("letter text: unknown variable '" + var + "'");
      int e = 1;
      if (var.size() > 1) {
        if (var[1] != '^' || var.size() < 3) throw ParseError("letter text: malformed factor '" + var + "'");
        const BigInt big = parse_bigint(std::string_view(var).substr(2));
        if (big < 1 || big > 1000000) throw ParseError("letter text: bad exponent in '" + var + "'");
        e = big.convert_to<int>();
      }
      exps[letter] += e;
    }
    terms.push_back({ExponentVector(kLetterShape, std::move(exps)), sign == "-" ? BigInt(-coeff) : coeff});
  }
  return IntPolynomial(kLetterShape, std::move(terms));
}

std::string serialize(const IntPolynomial& p, PolyFormat format) {
  return format == PolyFormat::Json ? to_json(p) : to_letter_text(p);
}

IntPolynomial deserialize(std::string_view text, PolyFormat format) {
  return format == PolyFormat::Json ? parse_json(text) : parse_letter_text(text);
}

}  // namespace hyperdet
