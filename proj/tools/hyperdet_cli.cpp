// hyperdet: command-line front end.
//
// Exit codes: 0 success, 1 verification failure, 2 empty result,
// 3 shape mismatch, 4 parse or usage error.

#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "hyperdet/algebra.hpp"
#include "hyperdet/dims.hpp"
#include "hyperdet/errors.hpp"
#include "hyperdet/evaluate.hpp"
#include "hyperdet/orbit.hpp"
#include "hyperdet/raising.hpp"
#include "hyperdet/verification.hpp"
#include "hyperdet/weights.hpp"

namespace {

using namespace hyperdet;

enum Exit : int { kOk = 0, kVerifyFailed = 1, kEmpty = 2, kShapeMismatch = 3, kParseError = 4 };

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw ParseError("cannot read '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

// Opens (and truncates) the destination up front so a bad path fails before
// any computation.
class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::binary | std::ios::trunc);
    if (!file_) throw ParseError("cannot write '" + path + "'");
  }
  std::ostream& stream() { return file_.is_open() ? file_ : std::cout; }

 private:
  std::ofstream file_;
};

PolyFormat parse_format(const std::string& name) {
  if (name == "json") return PolyFormat::Json;
  if (name == "text") return PolyFormat::LetterText;
  throw ParseError("unknown format '" + name + "', expected json or text");
}

Weight parse_weight(const std::string& text, const Shape& shape) {
  Weight w;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, ',');) {
    try {
      w.components.push_back(parse_bigint(part).convert_to<int>());
    } catch (const std::exception&) {
      throw ParseError("malformed weight '" + text + "'");
    }
  }
  if (w.components.size() != weight_length(shape))
    throw ParseError("weight '" + text + "' needs " + std::to_string(weight_length(shape)) + " components for shape " +
                     shape.to_string());
  return w;
}

struct DegreeRange {
  int start, end, step;
};

DegreeRange parse_degrees(const std::string& text) {
  std::vector<int> parts;
  std::stringstream in(text);
  for (std::string part; std::getline(in, part, ':');) {
    try {
      parts.push_back(parse_bigint(part).convert_to<int>());
    } catch (const std::exception&) {
      throw ParseError("malformed degree range '" + text + "'");
    }
  }
  if (parts.size() != 3 || parts[0] < 0 || parts[1] < parts[0] || parts[2] < 1)
    throw ParseError("degree range must be START:END:STEP with 0 <= START <= END and STEP >= 1");
  return {parts[0], parts[1], parts[2]};
}

int run_invariant(const std::string& shape_text, int degree, const std::string& out_path, const std::string& format,
                  const std::string& matrix_path) {
  const Shape shape = Shape::parse(shape_text);
  if (degree < 0) throw ParseError("degree must be non-negative");
  const PolyFormat fmt = parse_format(format);
  if (fmt == PolyFormat::LetterText) require_same_shape(shape, Shape{2, 2, 3}, "letter text");
  Output out(out_path);
  std::optional<Output> matrix_out;
  if (!matrix_path.empty()) matrix_out.emplace(matrix_path);

  if (!feasible_degree(shape, Weight::zero(shape), degree)) {
    std::cerr << "no weight-zero monomials of degree " << degree << " for shape " << shape.to_string() << "\n";
    return kEmpty;
  }
  const OperatorMatrix matrix = assemble_matrix(shape, degree);
  if (matrix_out) matrix_out->stream() << matrix_to_json(matrix) << "\n";
  const KernelResult kernel = exact_kernel(matrix.entries);
  std::cerr << "matrix " << matrix.rows() << "x" << matrix.cols() << ", rank " << kernel.rank << ", nullity "
            << kernel.nullity << "\n";
  if (kernel.basis.empty()) {
    std::cerr << "no invariant of degree " << degree << "\n";
    return kEmpty;
  }
  for (const auto& v : kernel.basis)
    out.stream() << serialize(polynomial_from_coordinates(matrix.domain, v), fmt) << "\n";
  return kOk;
}

int run_dims(const std::string& shape_text, const std::string& weight_text, const std::string& degrees_text,
             bool verify) {
  const Shape shape = Shape::parse(shape_text);
  if (verify) {
    require_same_shape(shape, Shape{2, 2, 3}, "--verify-conjecture");
    const TableReport report = verify_table(shape);
    std::cout << to_json(report) << "\n";
    std::cerr << report.matches() << "/" << report.entries.size() << " entries agree\n";
    return report.all_ok() ? kOk : kVerifyFailed;
  }
  const Weight w = weight_text.empty() ? Weight::zero(shape) : parse_weight(weight_text, shape);
  const DegreeRange range = parse_degrees(degrees_text);
  nlohmann::ordered_json doc;
  doc["shape"] = shape.dims();
  doc["weight"] = w.components;
  auto rows = nlohmann::ordered_json::array();
  for (int n = range.start; n <= range.end; n += range.step) {
    nlohmann::ordered_json row;
    row["n"] = n;
    row["dim"] = to_string(count_dim(shape, n, w));
    rows.push_back(std::move(row));
  }
  doc["dims"] = std::move(rows);
  std::cout << doc.dump() << "\n";
  return kOk;
}

int run_orbit(const std::string& seed, const std::string& format) {
  const PolyFormat fmt = parse_format(format);
  const IntPolynomial orbit = signed_orbit(ExponentVector::from_digits(Shape{2, 2, 3}, seed));
  std::cout << serialize(orbit, fmt) << "\n";
  return kOk;
}

int run_eval(const std::string& poly_path, const std::string& array_path) {
  const std::string poly_text = read_file(poly_path);
  const std::string array_text = read_file(array_path);
  const IntPolynomial p = parse_json(poly_text);
  const HyperArray x = parse_array_json(array_text);
  std::cout << to_string(evaluate(p, x)) << "\n";
  return kOk;
}

int run_transform(const std::string& array_path, int mode, const std::string& matrix_path) {
  const std::string array_text = read_file(array_path);
  const std::string matrix_text = read_file(matrix_path);
  if (mode < 1 || mode > 3) throw ParseError("mode must be 1, 2 or 3");
  const HyperArray x = parse_array_json(array_text);
  const ModeMatrix g{mode - 1, parse_matrix_json(matrix_text)};
  std::cout << to_json(mode_transform(x, g)) << "\n";
  return kOk;
}

int run_verify_paper(const std::string& only, std::uint64_t seed, const std::string& golden_path) {
  BatteryOptions options;
  options.only = only;
  options.seed = seed;
  if (!golden_path.empty()) options.reference = parse_json(read_file(golden_path));
  std::vector<CheckResult> results;
  try {
    results = run_battery(options);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what());
  }
  bool all = true;
  for (const auto& r : results) {
    std::cout << format_result(r) << "\n";
    all = all && r.passed;
  }
  std::cout << (all ? "all checks passed" : "some checks FAILED") << "\n";
  return all ? kOk : kVerifyFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Invariant polynomials of small hypermatrices"};
  app.require_subcommand(1);

  std::string shape = "2x2x3";
  int degree = 6;
  std::string out_path;
  std::string format = "json";
  std::string matrix_dump;
  auto* invariant = app.add_subcommand("invariant", "Kernel of the raising operators in one degree");
  invariant->add_option("--shape", shape, "Array shape AxBxC")->required();
  invariant->add_option("--degree", degree, "Polynomial degree")->required();
  invariant->add_option("--out", out_path, "Output file (default: standard output)");
  invariant->add_option("--format", format, "json or text");
  invariant->add_option("--dump-matrix", matrix_dump, "Write the operator matrix as sparse JSON");

  std::string weight;
  std::string degrees = "0:96:6";
  bool verify_conjecture = false;
  auto* dims = app.add_subcommand("dims", "Weight-space dimensions");
  dims->add_option("--shape", shape, "Array shape AxBxC")->required();
  dims->add_option("--weight", weight, "Comma-separated weight (default: zero)");
  dims->add_option("--degrees", degrees, "START:END:STEP");
  dims->add_flag("--verify-conjecture", verify_conjecture, "Cross-check counts, table and closed forms");

  std::string seed_digits;
  auto* orbit = app.add_subcommand("orbit", "Signed orbit of a 2x2x3 monomial");
  orbit->add_option("--seed", seed_digits, "Twelve exponent digits")->required();
  orbit->add_option("--format", format, "json or text");

  std::string poly_path, array_path;
  auto* eval = app.add_subcommand("eval", "Evaluate a polynomial on an array");
  eval->add_option("--poly", poly_path, "Polynomial JSON file")->required();
  eval->add_option("--array", array_path, "Array JSON file")->required();

  int mode = 0;
  std::string matrix_path;
  auto* transform = app.add_subcommand("transform", "Multiply an array along one mode");
  transform->add_option("--array", array_path, "Array JSON file")->required();
  transform->add_option("--mode", mode, "Mode 1, 2 or 3")->required();
  transform->add_option("--matrix", matrix_path, "Square matrix JSON file")->required();

  std::string only;
  std::uint64_t seed = 20100101;
  std::string golden;
  auto* verify = app.add_subcommand("verify-paper", "Run the reference-data battery");
  verify->add_option("--only", only, "Run one group or check");
  verify->add_option("--seed", seed, "Seed for the randomized checks");
  verify->add_option("--golden", golden, "Polynomial JSON replacing the built-in reference coefficients");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kParseError;
  }

  try {
    if (*invariant) return run_invariant(shape, degree, out_path, format, matrix_dump);
    if (*dims) return run_dims(shape, weight, degrees, verify_conjecture);
    if (*orbit) return run_orbit(seed_digits, format);
    if (*eval) return run_eval(poly_path, array_path);
    if (*transform) return run_transform(array_path, mode, matrix_path);
    if (*verify) return run_verify_paper(only, seed, golden);
  } catch (const ShapeMismatch& e) {
    std::cerr << "shape mismatch: " << e.what() << "\n";
    return kShapeMismatch;
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kParseError;
  }
  return kParseError;
}
