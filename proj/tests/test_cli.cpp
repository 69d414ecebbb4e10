#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HYPERDET_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf{};
  for (std::size_t n; (n = fread(buf.data(), 1, buf.size(), pipe)) > 0;) out.append(buf.data(), n);
  const int raw = pclose(pipe);
  return {WIFEXITED(raw) ? WEXITSTATUS(raw) : -1, out};
}

std::string data(const std::string& name) { return std::string(HYPERDET_DATA_DIR) + "/" + name; }

fs::path scratch() {
  const fs::path dir = fs::temp_directory_path() / "hyperdet_cli_test";
  fs::create_directories(dir);
  return dir;
}

fs::path write(const std::string& name, const std::string& text) {
  const fs::path p = scratch() / name;
  std::ofstream(p) << text;
  return p;
}

std::size_t count(const std::string& s, const std::string& needle) {
  std::size_t n = 0;
  for (std::size_t pos = 0; (pos = s.find(needle, pos)) != std::string::npos; ++pos) ++n;
  return n;
}

const char* kOnesArray = R"({"shape":[2,2,3],"slices":[[[1,0],[0,0]],[[0,1],[1,0]],[[0,0],[0,1]]]})";

}  // namespace

TEST_CASE("invariant") {
  const auto r = run("invariant --shape 2x2x3 --degree 6");
  CHECK(r.status == 0);
  CHECK(count(r.out, "\"exps\"") == 66);
  CHECK(count(r.out, "\n") == 1);

  const auto text = run("invariant --shape 2x2x3 --degree 6 --format text");
  CHECK(text.status == 0);
  CHECK(text.out.rfind("+ a^2 f g l^2", 0) == 0);

  const auto cayley = run("invariant --shape 2x2x2 --degree 4");
  CHECK(cayley.status == 0);
  CHECK(count(cayley.out, "\"exps\"") == 12);

  CHECK(run("invariant --shape 2x2x3 --degree 3").status == 2);
  CHECK(run("invariant --shape 2x2x2 --degree 2").status == 2);
  CHECK(run("invariant --shape 2x2x2 --degree 4 --format text").status == 3);
  CHECK(run("invariant --shape 2by2 --degree 4").status == 4);
  CHECK(run("invariant --shape 2x2x3").status == 4);
  CHECK(run("frobnicate").status == 4);
}

TEST_CASE("output is deterministic") {
  const auto a = scratch() / "a.jsonl";
  const auto b = scratch() / "b.jsonl";
  CHECK(run("invariant --shape 2x2x3 --degree 6 --out " + a.string()).status == 0);
  CHECK(run("invariant --shape 2x2x3 --degree 6 --out " + b.string()).status == 0);
  std::ifstream fa(a), fb(b);
  const std::string sa{std::istreambuf_iterator<char>(fa), {}}, sb{std::istreambuf_iterator<char>(fb), {}};
  CHECK(!sa.empty());
  CHECK(sa == sb);
}

TEST_CASE("dims") {
  const auto r = run("dims --shape 2x2x3 --degrees 0:12:6");
  CHECK(r.status == 0);
  CHECK(r.out.find("\"dim\":\"80\"") != std::string::npos);
  CHECK(r.out.find("\"dim\":\"1323\"") != std::string::npos);
  CHECK(run("dims --shape 2x2x3 --weight 0,0,-1,2 --degrees 6:6:6").out.find("\"dim\":\"60\"") != std::string::npos);
  CHECK(run("dims --shape 2x2x3 --verify-conjecture").status == 0);
  CHECK(run("dims --shape 2x2x2 --verify-conjecture").status == 3);
  CHECK(run("dims --shape 2x2x3 --weight 1,2").status == 4);
  CHECK(run("dims --shape 2x2x3 --degrees 6:0:6").status == 4);
}

TEST_CASE("orbit") {
  const auto r = run("orbit --seed 100110010110 --format text");
  CHECK(r.status == 0);
  CHECK(count(r.out, " 4 ") == 6);
  CHECK(run("orbit --seed 12").status == 4);
}

TEST_CASE("eval and transform") {
  const auto zero = write("zero.json", R"({"shape":[2,2,3],"slices":[[[0,0],[0,0]],[[0,0],[0,0]],[[0,0],[0,0]]]})");
  const auto ones = write("ones.json", kOnesArray);
  const auto small = write("small.json", R"({"shape":[2,2,2],"slices":[[[0,0],[0,0]],[[0,0],[0,0]]]})");
  const std::string poly = data("hyperdeterminant_2x2x3.json");
  auto r = run("eval --poly " + poly + " --array " + zero.string());
  CHECK(r.status == 0);
  CHECK(r.out == "0\n");
  r = run("eval --poly " + poly + " --array " + ones.string());
  CHECK(r.out == "1\n");
  CHECK(run("eval --poly " + poly + " --array " + small.string()).status == 3);
  CHECK(run("eval --poly " + poly + " --array /nonexistent.json").status == 4);
  CHECK(run("eval --poly " + write("bad.json", "{").string() + " --array " + ones.string()).status == 4);

  const auto shear = write("shear.json", R"([[1,0,0],[2,1,0],[0,0,1]])");
  r = run("transform --array " + ones.string() + " --mode 3 --matrix " + shear.string());
  CHECK(r.status == 0);
  const auto moved = write("moved.json", r.out);
  CHECK(run("eval --poly " + poly + " --array " + moved.string()).out == "1\n");
  CHECK(run("transform --array " + ones.string() + " --mode 1 --matrix " + shear.string()).status == 3);
  CHECK(run("transform --array " + ones.string() + " --mode 4 --matrix " + shear.string()).status == 4);
}

TEST_CASE("verify-paper") {
  auto r = run("verify-paper");
  CHECK(r.status == 0);
  CHECK(count(r.out, "PASS ") == 13);

  r = run("verify-paper --only dims");
  CHECK(r.status == 0);
  CHECK(count(r.out, "PASS dims/") == 2);
  CHECK(count(r.out, "PASS ") == 2);

  std::ifstream in(data("hyperdeterminant_2x2x3.json"));
  std::string golden{std::istreambuf_iterator<char>(in), {}};
  const auto pos = golden.find("\"coeff\":\"-1\"");
  REQUIRE(pos != std::string::npos);
  golden.replace(pos, 12, "\"coeff\":\"1\"");
  const auto corrupted = write("corrupted.json", golden);
  r = run("verify-paper --only coefficients --golden " + corrupted.string());
  CHECK(r.status == 1);
  CHECK(r.out.find("FAIL coefficients/coefficient-table-match") != std::string::npos);
  CHECK(run("verify-paper --only nothing").status == 4);
}
