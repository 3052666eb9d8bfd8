#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "json.hpp"
#include "lcsparse/cli.hpp"
#include "lcsparse/coefficient.hpp"
#include "lcsparse/families.hpp"
#include "lcsparse/geometry.hpp"
#include "lcsparse/polynomial.hpp"

namespace fs = std::filesystem;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  args.insert(args.begin(), "lcsparse");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  std::ostringstream out, err;
  int code = lcsparse::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string write(const std::string& name, const std::string& text) {
  fs::path dir = fs::temp_directory_path() / "lcsparse_cli_test";
  fs::create_directories(dir);
  fs::path p = dir / name;
  std::ofstream(p) << text;
  return p.string();
}

const char* kHand = R"({"products": [[{"terms": [[0, "1"], [1, "1"]]}, {"terms": [[0, "1"], [1, "4"]]}]]})";

}  // namespace

TEST_CASE("check-kurtz") {
  Result ok = run({"check-kurtz", write("k.poly", "0 1\n1 3\n2 2\n")});
  CHECK(ok.code == 0);
  CHECK(nlohmann::json::parse(ok.out)["holds"] == true);
  CHECK(run({"check-kurtz", write("b.poly", "0 1\n1 2\n2 1\n")}).code == 1);
  CHECK(run({"check-kurtz", "--tau", "2", write("g.poly", "0 1\n1 4\n2 4\n3 1\n")}).code == 0);
  CHECK(run({"check-kurtz", "--tau", "1", write("g.poly", "0 1\n1 4\n2 4\n3 1\n")}).code == 2);
}

TEST_CASE("usage and format errors exit 2") {
  CHECK(run({}).code == 2);
  CHECK(run({"no-such-command"}).code == 2);
  CHECK(run({"check-kurtz"}).code == 2);
  CHECK(run({"check-kurtz", "/nonexistent/file.poly"}).code == 2);
  CHECK(run({"check-kurtz", write("junk.poly", "0 x\n")}).code == 2);
  CHECK(run({"expand", write("junk.json", "{")}).code == 2);
  CHECK(run({"check-newton", write("lin.poly", "0 1\n1 1\n")}).code == 2);
  CHECK(run({"sturm", write("zero.poly", "")}).code == 2);
  CHECK(run({"gen-f", "--n", "13"}).code == 2);
  CHECK(run({"check-kurtz", "--format", "yaml", write("k.poly", "0 1\n1 3\n2 2\n")}).code == 2);
}

TEST_CASE("polynomial commands") {
  CHECK(run({"check-newton", write("sq.poly", "0 1\n1 2\n2 1\n")}).code == 0);
  CHECK(run({"check-newton", "--strict", write("sq.poly", "0 1\n1 2\n2 1\n")}).code == 1);
  CHECK(run({"check-strong", write("f2.poly", "0 1\n1 2^32\n2 2^32\n3 1\n")}).code == 0);
  CHECK(run({"check-strong", write("one.poly", "0 1\n1 1\n2 1\n")}).code == 1);
  Result s = run({"sturm", write("signed.poly", "0 -2\n2 1\n")});
  CHECK(s.code == 0);
  CHECK(nlohmann::json::parse(s.out)["distinct_real_roots"] == 2);
}

TEST_CASE("SPS commands") {
  const std::string hand = write("hand.json", kHand);
  Result e = run({"expand", hand});
  CHECK(e.code == 0);
  CHECK(e.out == "0 1\n1 5\n2 2^2\n");
  CHECK(nlohmann::json::parse(run({"params", hand}).out)["t"] == 2);
  CHECK(run({"verify-thm2", hand}).code == 1);
  CHECK(run({"witness", hand}).code == 1);
  Result lift = run({"lift", hand});
  CHECK(lift.code == 0);
  CHECK(nlohmann::json::parse(lift.out)["lambda"] == nlohmann::json::array({1, 0}));
  Result v = run({"verify-lift", hand});
  CHECK(v.code == 0);
  CHECK(nlohmann::json::parse(v.out)["ok"] == true);
  CHECK(run({"split", hand}).code == 0);
  CHECK(nlohmann::json::parse(run({"bounds", hand}).out)["trivial"] == "4");

  const std::string strong =
      write("strong.json", R"({"products": [[{"terms": [[0, "1"], [1, "2^32"], [2, "2^32"], [3, "1"]]}]]})");
  CHECK(run({"verify-thm2", strong}).code == 0);
  CHECK(run({"witness", strong}).code == 0);
  const std::string three = write(
      "three.json", R"({"products": [[{"terms": [[0, "1"]]}, {"terms": [[0, "1"]]}, {"terms": [[0, "1"], [1, "9"]]}]]})");
  CHECK(run({"lift", three}).code == 2);
}

TEST_CASE("geometry commands") {
  const std::string pts = write("pts.csv", "0,1,0,0\n1,1,1,0\n2,1,2,0\n");
  Result hull = run({"hull", pts});
  CHECK(hull.code == 0);
  CHECK(nlohmann::json::parse(hull.out)["size"] == 2);
  CHECK(run({"hull", "--upper", pts}).code == 0);
  Result chain = run({"chain", pts});
  CHECK(nlohmann::json::parse(chain.out)["size"] == 2);
  Result sum = run({"minkowski", write("a.csv", "0,1,0,0\n1,1,1,0\n"), write("b.csv", "0,1,0,0\n2,1,2,0\n")});
  CHECK(sum.code == 0);
  std::istringstream in(sum.out);
  CHECK(lcsparse::parse_point_csv(in).size() == 4);
}

TEST_CASE("generators re-parse to equal values") {
  Result g = run({"gen-g", "--n", "3", "--s", "2"});
  REQUIRE(g.code == 0);
  std::istringstream gin(g.out);
  CHECK(lcsparse::parse_polynomial_text(gin) == lcsparse::gen_g(3, 2));
  for (int n = 1; n <= 6; ++n) {
    Result f = run({"gen-f", "--n", std::to_string(n)});
    REQUIRE(f.code == 0);
    std::istringstream fin(f.out);
    CHECK(lcsparse::parse_polynomial_text(fin) == lcsparse::gen_f(n));
  }
  CHECK(run({"gen-f", "--n", "2"}).out == "0 1\n1 2^32\n2 2^32\n3 1\n");
  Result h = run({"gen-h", "--n", "2"});
  auto hj = nlohmann::json::parse(h.out);
  CHECK(hj["monomials"].size() == 4);
  CHECK(hj["monomials"][1]["beta"] == "00000100");
  CHECK(run({"verify-identity", "--n", "2"}).code == 0);
  CHECK(run({"verify-identity", "--n", "4"}).code == 2);
}

TEST_CASE("search emits one JSON object per line") {
  Result a = run({"search", "--seed", "3", "--trials", "200"});
  Result b = run({"search", "--seed", "3", "--trials", "200"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
  std::istringstream lines(a.out);
  std::string line;
  int count = 0;
  while (std::getline(lines, line)) {
    auto j = nlohmann::json::parse(line);
    CHECK(j.contains("bounds"));
    ++count;
  }
  CHECK(count > 0);
}

TEST_CASE("selftest subset") {
  Result r = run({"selftest", "--only", "4", "--only", "7"});
  CHECK(r.code == 0);
  CHECK(r.out.find("[PASS] 4.") != std::string::npos);
  CHECK(r.out.find("[PASS] 7.") != std::string::npos);
}
