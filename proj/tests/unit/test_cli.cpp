#include "cli.hpp"
#include "doctest.h"

using moyal::cli::run;
using moyal::cli::Status;

TEST_CASE("star example") {
  auto r = run({"star", "--lhs", "p", "--rhs", "q"});
  CHECK(r.exit_code == 0);
  CHECK(r.output == "p*q - (1/2)*i*hbar\n");
}

TEST_CASE("verify-ct on the gamma pair") {
  auto r = run({"verify-ct", "--P", "p/(1+gamma*p)", "--Q", "q*(1+gamma*p)^2", "--order", "8", "--format", "json"});
  REQUIRE(r.exit_code == 0);
  auto doc = nlohmann::json::parse(r.output);
  CHECK(doc["schema"] == 1);
  CHECK(doc["status"] == "ok");
  CHECK(doc["payload"]["is_canonical"] == true);
  CHECK(doc["payload"]["gamma_order"] == 8);
}

TEST_CASE("genfun on the linear potential") {
  auto r = run({"genfun", "--P", "p", "--Q", "q+a*p^2", "--params", "a"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.output.find("T: -(1/6)*a*p^3\n") != std::string::npos);
  CHECK(r.output.find("residual_Q: 0\n") != std::string::npos);
  CHECK(r.output.find("residual_P: 0\n") != std::string::npos);
  CHECK(r.payload["residuals_zero"] == true);
}

TEST_CASE("flow with closed form") {
  auto r = run({"flow", "--generator", "2,1:1", "--target", "p", "--order", "6", "--closed", "p/(1+gamma*p)"});
  REQUIRE(r.exit_code == 0);
  CHECK(r.payload["matches_closed_form"] == true);
  CHECK(r.payload["hbar_free"] == true);
}

TEST_CASE("kernel, bracket and ordering") {
  auto k = run({"kernel", "--P", "a*p+b*q", "--Q", "c*p+d*q", "--params", "a,b,c,d", "--relation", "sl2-d"});
  REQUIRE(k.exit_code == 0);
  CHECK(k.payload["classical_relations_hold"] == true);
  CHECK(run({"bracket", "--lhs", "q", "--rhs", "p"}).output == "i*hbar\n");
  CHECK(run({"bracket", "--lhs", "q", "--rhs", "p", "--type", "poisson"}).output == "1\n");
  CHECK(run({"ordering", "--word", "qp"}).output == "p*q + (1/2)*i*hbar\n");
}

TEST_CASE("exit codes") {
  auto domain = run({"star", "--lhs", "p/(", "--rhs", "q"});
  CHECK(domain.exit_code == 1);
  CHECK(domain.status == Status::Error);
  CHECK(domain.error_output.find("SyntaxError") != std::string::npos);
  CHECK(domain.output.empty());

  auto json_err = run({"genfun", "--P", "p/(1+gamma*p)", "--Q", "q*(1+gamma*p)^2", "--format", "json"});
  CHECK(json_err.exit_code == 1);
  auto doc = nlohmann::json::parse(json_err.output);
  CHECK(doc["status"] == "error");
  CHECK(doc["error"]["code"] == "ExactnessFailure");
  CHECK(!doc.contains("payload"));

  CHECK(run({"star", "--lhs", "p"}).exit_code == 2);
  CHECK(run({}).exit_code == 2);
  CHECK(run({"nonsense"}).exit_code == 2);
  CHECK(run({"star", "--lhs", "p", "--rhs", "q", "--format", "xml"}).exit_code == 2);
  CHECK(run({"flow", "--generator", "2:1", "--target", "p"}).exit_code == 2);
  CHECK(run({"--help"}).exit_code == 0);
}

TEST_CASE("output is deterministic") {
  const std::vector<std::string> args{"genfun", "--P", "a*p+b*q", "--Q", "c*p+d*q", "--params", "a,b,c,d",
                                      "--relation", "sl2-d", "--format", "json"};
  auto first = run(args);
  for (int k = 0; k < 3; ++k) CHECK(run(args).output == first.output);
}
