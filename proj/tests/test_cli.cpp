#include <doctest.h>

#include <cstdlib>

#include "orthocurrent/cli.hpp"
#include "orthocurrent/report.hpp"

using namespace orthocurrent;
using namespace orthocurrent::cli;

namespace {

ErrorKind parse_error(const std::vector<std::string>& args) {
  try {
    parse_args(args);
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no usage error");
  return ErrorKind::Syntax;
}

json run_json(const std::vector<std::string>& args) {
  const Outcome o = run(args);
  REQUIRE(o.exit_code == 0);
  return json::parse(o.output);
}

void check_round_trip(const json& j) {
  const json reparsed = json::parse(j.dump());
  const auto checks = recheck_json(reparsed);
  CHECK_FALSE(checks.empty());
  for (const auto& c : checks) {
    CAPTURE(c.name);
    CHECK(c.ok);
  }
  for (const auto& c : reparsed.at("checks")) CHECK(c.at("ok").get<bool>());
}

}  // namespace

TEST_CASE("parse_args examples") {
  const auto c = parse_args({"classify", "--field", "F3", "--form", "1,1,1,2", "--json"});
  CHECK(c.command == Command::Classify);
  CHECK(c.field_literal == "F3");
  CHECK(c.form == std::vector<std::string>{"1", "1", "1", "2"});
  CHECK(c.json);
  const auto v = parse_args({"verify", "--field", "Q", "--form", "1,2,3,4"});
  CHECK(v.command == Command::Verify);
  CHECK_FALSE(v.json);
  CHECK(parse_error({"oracle", "--field", "Q", "--form", "1,1,1,1"}) == ErrorKind::Usage);
}

TEST_CASE("parse_args validation") {
  CHECK(parse_error({}) == ErrorKind::Usage);
  CHECK(parse_error({"verify", "--field", "Q"}) == ErrorKind::Usage);
  CHECK(parse_error({"verify", "--field", "Q", "--form", "1,2,3"}) == ErrorKind::Usage);
  CHECK(parse_error({"verify", "--field", "Q", "--form", "1,2,3,x"}) == ErrorKind::Usage);
  CHECK(parse_error({"verify", "--field", "R", "--form", "1,2,3,4"}) == ErrorKind::Usage);
  CHECK(parse_error({"verify", "--field", "Q", "--form", "1,2,3,4", "--q", "3"}) == ErrorKind::Usage);
  CHECK(parse_error({"classify", "--field", "Q", "--form", "1,2,3,4", "--p", "2"}) == ErrorKind::Usage);
  CHECK(parse_error({"counterexample", "--p", "5"}) == ErrorKind::Usage);
  CHECK(parse_error({"oracle", "--q", "7", "--form", "1,1,1,1"}) == ErrorKind::Usage);
  CHECK(parse_error({"oracle", "--q", "3", "--field", "F2", "--form", "1,1,1,1"}) == ErrorKind::Usage);
  CHECK(parse_error({"verify", "--field", "Q", "--form", "1,2,3,4", "--bogus"}) == ErrorKind::Usage);
  CHECK(parse_error({"table", "--field", "Q", "--gram", "[[1,2],[3"}) == ErrorKind::Usage);
  CHECK(run({"verify", "--field", "Q"}).exit_code == 2);
  CHECK(run({"--help"}).exit_code == 0);

  const auto o = parse_args({"oracle", "--q", "3", "--form", "1,1,1,1"});
  CHECK(o.field_literal == "F3");
  const auto t = parse_args({"table", "--field", "F2(t)", "--form", "t,(t+1)/t,1,t^2"});
  CHECK(t.form.size() == 4);
}

TEST_CASE("seed from flag and environment") {
  ::setenv("ORTHOCURRENT_SEED", "17", 1);
  CHECK(parse_args({"verify", "--field", "Q", "--form", "1,2,3,4"}).seed == 17);
  CHECK(parse_args({"verify", "--field", "Q", "--form", "1,2,3,4", "--seed", "5"}).seed == 5);
  ::setenv("ORTHOCURRENT_SEED", "nope", 1);
  CHECK(parse_error({"verify", "--field", "Q", "--form", "1,2,3,4"}) == ErrorKind::Usage);
  ::unsetenv("ORTHOCURRENT_SEED");
  CHECK(parse_args({"verify", "--field", "Q", "--form", "1,2,3,4"}).seed == 0);
}

TEST_CASE("table command") {
  const Outcome o = run({"table", "--field", "Q", "--form", "1,2,3,4"});
  CHECK(o.exit_code == 0);
  CHECK(o.output.find("[h2,h3] = D c f1 = 72 f1") != std::string::npos);
  CHECK(o.output.find("[f1,f2] = b f3 = 2 f3") != std::string::npos);
  CHECK(o.output.find("[h1,h2] = D b f3 = 48 f3") != std::string::npos);
  CHECK(o.output.find("MISMATCH") == std::string::npos);
  check_round_trip(run_json({"table", "--field", "Q", "--form", "1,2,3,4", "--json"}));
}

TEST_CASE("classify command") {
  const json j = run_json({"classify", "--field", "F2", "--form", "1,1,1,1", "--json"});
  CHECK(j.at("case") == "semidirect_N_R");
  check_round_trip(j);
  for (const auto& args : std::vector<std::vector<std::string>>{
           {"classify", "--field", "Q", "--form", "1,1,1,1", "--json"},
           {"classify", "--field", "F3", "--form", "1,1,1,2", "--json"},
           {"classify", "--field", "F2(t)", "--form", "t,1,1,1", "--json"},
           {"classify", "--field", "Q", "--form", "1,2,3,4", "--json"}}) {
    check_round_trip(run_json(args));
  }
  const auto cert = certificate_from_json(run_json({"classify", "--field", "Q", "--form", "1,1,1,1", "--json"}));
  CHECK(cert.which() == CertificateCase::TwoSimpleIdeals);
}

TEST_CASE("text and JSON agree on the variant") {
  for (const auto& [field, form] : std::vector<std::pair<std::string, std::string>>{
           {"Q", "1,1,1,1"}, {"F2", "1,1,1,1"}, {"F3", "1,1,1,2"}, {"F5", "1,2,3,4"}}) {
    const json j = run_json({"classify", "--field", field, "--form", form, "--json"});
    const Outcome text = run({"classify", "--field", field, "--form", form});
    CHECK(text.output.find("case: " + j.at("case").get<std::string>()) != std::string::npos);
  }
}

TEST_CASE("verify command") {
  const json j = run_json({"verify", "--field", "Q", "--form", "1,2,3,4", "--seed", "3", "--json"});
  CHECK(j.at("equal").get<bool>());
  check_round_trip(j);
  check_round_trip(run_json({"verify", "--field", "F2(t)", "--form", "t,1,t+1,1", "--json"}));
  const Outcome a = run({"verify", "--field", "F7", "--form", "1,2,3,4", "--seed", "9"});
  const Outcome b = run({"verify", "--field", "F7", "--form", "1,2,3,4", "--seed", "9"});
  CHECK(a.exit_code == 0);
  CHECK(a.output == b.output);
  CHECK(run({"verify", "--field", "Q", "--form", "1,2,3,4", "--trials", "3"}).exit_code == 0);
}

TEST_CASE("gram input is orthogonalized") {
  const json j =
      run_json({"classify", "--field", "Q", "--gram", "[[0,1,0,0],[1,0,0,0],[0,0,1,0],[0,0,0,1]]", "--json"});
  CHECK(j.at("D") == "-1");
  CHECK(j.at("case") == "simple_by_descent");
  check_round_trip(j);
  const Outcome bad = run({"classify", "--field", "Q", "--gram", "[[1,0],[0,1]]"});
  CHECK(bad.exit_code == 1);
  CHECK(bad.output.rfind("error: ", 0) == 0);
}

TEST_CASE("module errors map to exit code 1") {
  const Outcome o = run({"verify", "--field", "F3", "--form", "1,2,3,4"});
  CHECK(o.exit_code == 1);
  CHECK(o.output.find("ZeroEntry") != std::string::npos);
}

TEST_CASE("oracle command") {
  const json j = run_json({"oracle", "--field", "F3", "--form", "1,1,1,1", "--json"});
  CHECK(j.at("witnesses").at("ideal_count") == 4);
  CHECK(j.at("witnesses").at("histogram").at("3") == 2);
  check_round_trip(j);
  const Outcome t = run({"oracle", "--q", "2", "--form", "1,1,1,1"});
  CHECK(t.exit_code == 0);
  CHECK(t.output.find("R_enumerated") != std::string::npos);
}

TEST_CASE("counterexample command") {
  const json j = run_json({"counterexample", "--p", "2", "--json"});
  CHECK(j.at("radical_dim") == 3);
  check_round_trip(j);
  check_round_trip(run_json({"counterexample", "--p", "3", "--json"}));
}
