#include <doctest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "kolmo/cli.hpp"
#include "kolmo/io.hpp"

using namespace kolmo;

namespace {

const std::filesystem::path kSource = KOLMO_SOURCE_DIR;

std::string fixture(const char* name) { return (kSource / "fixtures" / name).string(); }

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string read_file(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct Golden {
  const char* name;
  std::vector<std::string> args;
  int code;
};

std::vector<Golden> goldens() {
  const std::string ex = fixture("example45.json");
  const std::string exf = fixture("example45_form.json");
  return {
      {"check_example45", {"check", "--field", ex, "--format", "json"}, 0},
      {"cofactor_example45_plane", {"cofactor", "--field", ex, "--surface", "x1 - x3", "--format", "json"}, 0},
      {"darboux_example45", {"darboux", "--field", ex, "--g", "x1^2+x2^2+x3^2-1", "--format", "json"}, 0},
      {"syzygy_example45", {"syzygy-fi", "--form", exf, "--format", "json"}, 0},
      {"classify_example45", {"classify-hyperplane", "--form", exf, "--a0", "0", "--a", "1,0,-1", "--format", "json"}, 0},
      {"classify_case_ii",
       {"classify-hyperplane", "--form", fixture("hyperplane_case_ii.json"), "--a0", "0", "--a", "1,-1,0", "--format",
        "json"},
       0},
      {"construct_linear_fi",
       {"construct", "linear-fi", "--a0", "0", "--a", "1,1,1", "--seed", fixture("seed_n2.json"), "--format", "json"},
       0},
      {"construct_complete", {"construct", "complete", "--n", "2", "--m", "3", "--atilde", "1", "--format", "json"}, 0},
      {"construct_cubic", {"construct", "cubic", "--form", exf, "--format", "json"}, 0},
      {"hamiltonian_space_n2", {"hamiltonian", "--constraint-space", "--n", "2", "--format", "json"}, 0},
      {"hamiltonian_s1_witness", {"hamiltonian", "--field", fixture("s1_witness.json"), "--format", "json"}, 0},
      {"integrate_theorem34",
       {"integrate", "--field", fixture("theorem34_n2.json"), "--x0", "0.6,0.8,0.5", "--h", "0.01", "--steps", "5",
        "--watch", "x1^2+x2^2+x3^2-1", "--format", "json"},
       0},
      {"certify_cor44", {"certify", "--suite", "cor44", "--seed", "1", "--instances", "4", "--format", "json"}, 0},
  };
}

}  // namespace

TEST_CASE("cli examples") {
  auto r = run({"check", "--field", fixture("example45.json")});
  CHECK(r.code == 0);
  CHECK(r.out.find("kolmogorov=true sphere_invariant=true") != std::string::npos);

  r = run({"darboux", "--field", fixture("example45.json"), "--g", "x1^2+x2^2+x3^2-1"});
  CHECK(r.code == 0);
  CHECK(r.out.find("2 integral(s)") != std::string::npos);
  CHECK(r.out.find("exponents (1, 0, -1, 0)") != std::string::npos);

  r = run({"hamiltonian", "--constraint-space", "--n", "2"});
  CHECK(r.code == 0);
  CHECK(r.out == "dimension 0\n");
}

TEST_CASE("cli exit codes") {
  CHECK(run({"check", "--field", fixture("not_tangent.json")}).code == 1);  // not sphere-invariant
  CHECK(run({"cofactor", "--field", fixture("example45.json"), "--surface", "x1 + x2 - 1"}).code == 1);
  CHECK(run({"hamiltonian", "--field", fixture("theorem34_n2.json"), "--dim", "3"}).code == 2);  // odd dimension
  CHECK(run({"classify-hyperplane", "--form", fixture("example45_form.json"), "--a0", "1", "--a", "1,1,1"}).code == 1);

  auto r = run({"check", "--field", fixture("missing.json")});
  CHECK(r.code == 2);
  CHECK(r.err.find("cannot open") != std::string::npos);
  CHECK(run({}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({"check"}).code == 2);
  CHECK(run({"check", "--field", fixture("example45.json"), "--format", "yaml"}).code == 2);
  CHECK(run({"check", "--field", fixture("example45.json"), "--dim", "4"}).code == 2);
  CHECK(run({"cofactor", "--field", fixture("example45.json"), "--surface", "2x1"}).code == 2);
  CHECK(run({"cofactor", "--field", fixture("example45.json"), "--surface", "x4"}).code == 2);
  CHECK(run({"certify", "--suite", "nope"}).code == 2);
  CHECK(run({"integrate", "--field", fixture("example45.json"), "--x0", "0.5,abc,0.5", "--h", "0.1", "--steps", "2"})
            .code == 2);
  CHECK(run({"check", "--help"}).code == 0);
}

TEST_CASE("cli integrate writes CSV and reports drift on stderr") {
  auto r = run({"integrate", "--field", fixture("theorem34_n2.json"), "--x0", "0.6,0.8,0.5", "--h", "0.001", "--steps",
                "100", "--watch", "x1^2+x2^2+x3^2-1", "x3"});
  CHECK(r.code == 0);
  CHECK(r.out.rfind("t,x1,x2,x3\n0,0.59999999999999998,0.80000000000000004,0.5\n", 0) == 0);
  CHECK(r.err.find("watch x1^2 + x2^2 + x3^2 - 1: max relative drift") != std::string::npos);
  CHECK(r.err.find("watch x3:") != std::string::npos);

  r = run({"integrate", "--field", fixture("theorem34_n2.json"), "--x0", "0.6,0.8,0.5", "--h", "0.001", "--steps",
           "100", "--watch", "x1"});
  CHECK(r.code == 1);
}

TEST_CASE("cli certify suites pass on small runs") {
  for (const char* suite : {"roundtrip", "thm41", "cor44", "thm37"}) {
    const auto r = run({"certify", "--suite", suite, "--instances", "6", "--seed", "3"});
    INFO(suite << ": " << r.out);
    CHECK(r.code == 0);
  }
  const auto r = run({"certify", "--suite", "thm13", "--instances", "6"});
  CHECK(r.code == 1);  // the n = 1 constraint space is not trivial
  CHECK(r.out.find("n=1: constraint space has dimension 1") != std::string::npos);
}

TEST_CASE("json output round-trips through the file formats") {
  auto r = run({"construct", "cubic", "--form", fixture("example45_form.json"), "--format", "json"});
  REQUIRE(r.code == 0);
  const PolyVectorField vf = io::field_from_json(io::json::parse(r.out));
  CHECK(vf == io::field_from_json(io::load_file(fixture("example45.json"))));
  CHECK(io::field_from_json(io::to_json(vf)) == vf);

  const auto form = io::form_from_json(io::load_file(fixture("example45_form.json")));
  CHECK(io::form_from_json(io::to_json(form)) == form);
  CHECK(recover_cubic_form(vf) == form);

  r = run({"darboux", "--field", fixture("example45.json"), "--g", "x1^2+x2^2+x3^2-1", "--format", "json"});
  const auto j = io::json::parse(r.out);
  CHECK(j["rank_B"] == 2);
  RationalVector second;
  for (const auto& e : j["integrals"][1]["exponents"]) second.push_back(io::rational_from_json(e));
  CHECK(second == RationalVector{0, 1, 0, Rational(-3, 4)});

  r = run({"construct", "linear-fi", "--a0", "0", "--a", "1,1,1", "--seed", fixture("seed_n2.json"), "--format",
           "json"});
  const auto lin = io::json::parse(r.out);
  const PolyVectorField built = io::field_from_json(lin["field"]);
  CHECK(lie_derivative(built, parse("x1 + x2 + x3", 3)).is_zero());
}

TEST_CASE("golden outputs are byte-identical") {
  const bool update = std::getenv("KOLMO_UPDATE_GOLDEN") != nullptr;
  for (const auto& g : goldens()) {
    const auto r = run(g.args);
    INFO(g.name << " stderr: " << r.err);
    CHECK(r.code == g.code);
    const auto path = kSource / "tests" / "golden" / (std::string(g.name) + ".json");
    if (update) {
      std::ofstream(path, std::ios::binary) << r.out;
      continue;
    }
    REQUIRE(std::filesystem::exists(path));
    CHECK(r.out == read_file(path));
  }
}
