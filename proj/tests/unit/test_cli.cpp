#include <doctest.h>

#include <sstream>

#include "cli.hpp"
#include "pwb/formats.hpp"

using namespace pwb;
using pwb::cli::Json;

namespace {

struct Run {
  int code;
  std::string out, err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "pwb");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(PWB_DATA_DIR) + "/" + name; }

}  // namespace

TEST_CASE("reflections on the first Jacobian potential") {
  auto r = run({"reflections", "--algebra", data("jac_p1_q0.pois")});
  CHECK(r.code == cli::kOk);
  auto j = Json::parse(r.out);
  CHECK(j["schema"] == "pwb/1");
  CHECK(j["result"]["reflections"] == "none");
  CHECK(j["inputs"][0]["sha256"].get<std::string>().size() == 64);
}

TEST_CASE("check reports a Jacobi failure with exit code 2") {
  auto r = run({"check", "--algebra", data("bad.pois")});
  CHECK(r.code == cli::kNegative);
  auto j = Json::parse(r.out);
  CHECK(j["exit_code"] == 2);
  CHECK(j["result"]["jacobi"]["ok"] == false);
  CHECK(j["result"]["jacobi"]["triple"] == Json::array({"x", "y", "z"}));
}

TEST_CASE("check reports a non-automorphism with exit code 2") {
  auto r = run({"check", "--algebra", data("pxy.pois"), "--map", data("diag_w_1.map")});
  CHECK(r.code == cli::kOk);
  auto bad = run({"check", "--algebra", data("jac_p1_q0.pois"), "--map", data("negate_z.map")});
  CHECK(bad.code == cli::kNegative);
}

TEST_CASE("usage errors exit with 1") {
  CHECK(run({}).code == cli::kError);
  CHECK(run({"fixed", "--algebra", data("missing.pois")}).code == cli::kError);
  CHECK(run({"normal"}).code == cli::kError);
}

TEST_CASE("reports are byte-identical across runs") {
  std::vector<std::vector<std::string>> commands = {
      {"fixed", "--algebra", data("qm2.pois"), "--group", data("swap_bc.map")},
      {"report", "--algebra", data("hweyl1.pois"), "--group", data("negate_z.map")},
      {"normal", "--algebra", data("jac_pm1_q1.pois")},
      {"molien", "--algebra", data("qm2.pois"), "--group", data("swap_bc.map")},
      {"envelope", "--algebra", data("pxy.pois"), "--dims", "3", "--json"},
  };
  for (const auto& c : commands) {
    auto a = run(c), b = run(c);
    CHECK(a.out == b.out);
    CHECK(a.code == b.code);
  }
}

TEST_CASE("family output re-parses to the same algebra") {
  auto r = run({"family", "qmatrix", "--n", "2"});
  REQUIRE(r.code == cli::kOk);
  CHECK(same_algebra(parse_pois(r.out), quantum_matrices(2)));
  auto s = run({"family", "skew", "--matrix", data("skew_q.mat")});
  REQUIRE(s.code == cli::kOk);
  CHECK(parse_pois(s.out).nvars() == 3);
  auto l = run({"family", "ph-lie", "--lie", data("sl2.lie")});
  REQUIRE(l.code == cli::kOk);
  CHECK(same_algebra(parse_pois(l.out), ph_lie(lie_sl2())));
}

TEST_CASE("envelope dims through the CLI") {
  auto r = run({"envelope", "--algebra", data("pxy.pois"), "--dims", "3", "--json"});
  REQUIRE(r.code == cli::kOk);
  auto j = Json::parse(r.out);
  CHECK(j["result"]["dims"]["computed"] == Json::array({1, 4, 10, 20}));
  CHECK(j["result"]["dims"]["match"] == true);
}

TEST_CASE("paper-suite passes") {
  auto r = run({"paper-suite"});
  CHECK(r.code == cli::kOk);
  for (const auto& v : cli::paper_suite()) CHECK_MESSAGE(v.pass, v.key << ": " << v.detail);
}
