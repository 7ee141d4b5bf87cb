#include <doctest.h>

#include "logcoh/cli/cli.hpp"
#include "logcoh/cli/fixtures.hpp"
#include "logcoh/io/json.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace logcoh;

namespace {

struct Result {
  int code;
  std::string out, err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string fixture(const std::string& name) { return std::string(LOGCOH_SOURCE_DIR) + "/fixtures/" + name + ".json"; }

std::string temp_file(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / ("logcoh_cli_" + name);
  std::ofstream(path) << text;
  return path.string();
}

bool contains(const std::string& hay, const std::string& needle) { return hay.find(needle) != std::string::npos; }

}  // namespace

TEST_CASE("usage errors exit 1") {
  CHECK(run({}).code == cli::Usage);
  CHECK(run({"frobnicate"}).code == cli::Usage);
  CHECK(run({"logcoh", "--pair", fixture("cp2_cubic")}).code == cli::Usage);  // --max-weight is required
  CHECK(run({"fixtures", "no_such_fixture"}).code == cli::Usage);
  CHECK(run({"--format", "yaml", "sr", "--pair", fixture("pants_n1")}).code == cli::Usage);
}

TEST_CASE("validate") {
  CHECK(run({"validate", "--pair", fixture("pants_n1")}).code == cli::Ok);
  const auto broken = run({"validate", "--pair", fixture("broken_zero_restriction")});
  CHECK(broken.code == cli::ValidationFailure);
  CHECK(contains(broken.out + broken.err, "functoriality"));
  CHECK(run({"validate", "--complex", fixture("dx_eq_y")}).code == cli::Ok);
  CHECK(run({"validate", "--arrangement", fixture("boolean_3")}).code == cli::Ok);
  CHECK(run({"validate", "--pair", temp_file("bad.json", "{ nope")}).code == cli::ValidationFailure);
  CHECK(run({"validate", "--pair", "/nonexistent/pair.json"}).code == cli::ValidationFailure);
}

TEST_CASE("log cohomology table") {
  const auto r = run({"logcoh", "--pair", fixture("cp2_cubic"), "--max-weight", "9", "--format", "tsv"});
  REQUIRE(r.code == cli::Ok);
  CHECK(contains(r.out, "3\t9\t1\n"));
  CHECK(contains(r.out, "0\t0\t1\n"));
  const auto j = run({"--format", "json", "logcoh", "--pair", fixture("cp2_cubic"), "--max-weight", "3", "--check"});
  REQUIRE(j.code == cli::Ok);
  const Json parsed = Json::parse(j.out);
  CHECK(parsed["dims"].is_array());
  const auto b = run({"logcoh", "--pair", fixture("broken_zero_restriction"), "--max-weight", "2"});
  CHECK(b.code == cli::ValidationFailure);
}

TEST_CASE("Stanley-Reisner and presentation") {
  const auto sr = run({"sr", "--pair", fixture("pants_n1")});
  CHECK(sr.code == cli::Ok);
  CHECK(contains(sr.out, "t1*t2"));
  const auto pr = run({"present", "--pair", fixture("pants_n1"), "--max-weight", "2"});
  CHECK(pr.code == cli::Ok);
  CHECK(contains(pr.out, "(presentation"));
}

TEST_CASE("spectral sequence pages") {
  const auto r = run({"sspages", "--complex", fixture("d2_only")});
  REQUIRE(r.code == cli::Ok);
  CHECK(contains(r.out, "E2"));
  const auto fp = run({"sspages", "--complex", fixture("dx_eq_y"), "--field", "fp:7", "--format", "json"});
  CHECK(fp.code == cli::Ok);
  CHECK(Json::parse(fp.out)["field"] == "fp:7");
  CHECK(run({"sspages", "--complex", fixture("dx_eq_y"), "--field", "fp:6"}).code == cli::Usage);
  CHECK(run({"sspages", "--complex", fixture("dx_eq_y"), "--field", "z"}).code == cli::Usage);
  CHECK(run({"sspages", "--complex", fixture("pants_n1")}).code == cli::ValidationFailure);
}

TEST_CASE("classify") {
  const auto r = run({"classify", "--pair", fixture("cp2_cubic")});
  REQUIRE(r.code == cli::Ok);
  const Json j = Json::parse(r.out);
  CHECK(j["verdicts"]["easycor"]["status"] == "Established");
  CHECK(j["verdicts"].contains("condition_A"));
  const auto gw = temp_file("gw.json", R"({"gw_vanishing": [{"I": [1], "value": true}]})");
  const auto g = run({"classify", "--pair", fixture("cp2_cubic"), "--gw-flags", gw});
  CHECK(g.code == cli::Ok);
  CHECK(Json::parse(g.out)["verdicts"]["gw_degeneration"]["status"] == "Established");
  const auto lines = run({"classify", "--pair", fixture("p2_lines6"), "--lines", fixture("p2_lines6")});
  CHECK(lines.code != cli::ComputationError);
}

TEST_CASE("arrangement commands") {
  CHECK(contains(run({"arrangement", "os", "--file", fixture("boolean_3")}).out, "1 + 3t + 3t^2 + t^3"));
  const auto comp = run({"arrangement", "complement", "--n", "2", "--k", "4"});
  CHECK(comp.code == cli::Ok);
  CHECK(contains(comp.out, "1 + 3t + 3t^2\n"));
  CHECK(run({"arrangement", "pair", "--n", "1", "--k", "3"}).code == cli::Ok);
  CHECK(run({"arrangement", "sh", "--n", "1", "--k", "3", "--max-weight", "2"}).code == cli::Ok);
  CHECK(run({"arrangement", "mirror", "--m", "3", "--max-weight", "2"}).code == cli::Ok);
  CHECK(run({"arrangement", "pair", "--n", "0", "--k", "3"}).code == cli::ValidationFailure);
  CHECK(run({"arrangement", "pair", "--k", "3"}).code == cli::Usage);
  CHECK(run({"arrangement", "mirror", "--m", "2"}).code == cli::ValidationFailure);
  CHECK(run({"present", "--pair", fixture("cp2_cubic"), "--max-weight", "3"}).code == cli::ValidationFailure);
  CHECK(run({"arrangement", "bogus"}).code == cli::Usage);
}

TEST_CASE("mirror check") {
  const auto r = run({"mirror-check", "--n", "1", "--max-weight", "3"});
  CHECK(r.code == cli::Ok);
}

TEST_CASE("fixtures command") {
  const auto list = run({"fixtures", "--list"});
  CHECK(list.code == cli::Ok);
  for (const auto& name : fixture_names()) CHECK(contains(list.out, name));
  const auto one = run({"fixtures", "cp2_cubic"});
  CHECK(one.out == fixture_text("cp2_cubic"));
  std::ifstream in(fixture("cp2_cubic"));
  std::stringstream shipped;
  shipped << in.rdbuf();
  CHECK(shipped.str() == one.out);
}
