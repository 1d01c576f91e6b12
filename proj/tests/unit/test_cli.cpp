#include <gtest/gtest.h>

#include <nlohmann/json.hpp>
#include <sstream>

#include "cli.hpp"

using nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome invoke(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = gfl::cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

json invoke_json(std::vector<std::string> args) {
  const auto r = invoke(std::move(args));
  EXPECT_EQ(r.code, 0) << r.err;
  return json::parse(r.out);
}

}  // namespace

TEST(Cli, GenericHilbertMatches) {
  const auto j = invoke_json({"hilbert", "generic", "--n", "3", "--degrees", "2,2,2,2", "--dmax", "8", "--trials", "3",
                              "--seed", "42"});
  EXPECT_EQ(j["schema"], 1);
  EXPECT_EQ(j["command"], "hilbert generic");
  EXPECT_EQ(j["verdict"], "MATCH");
  EXPECT_EQ(j["seed"], 42);
  EXPECT_EQ(j["primes"].size(), 3u);
  const auto& rows = j["tables"]["hilbert_function"]["rows"];
  ASSERT_EQ(rows.size(), 9u);
  EXPECT_EQ(rows[2][1], 2);
  EXPECT_EQ(rows[3][1], 0);
  EXPECT_TRUE(j["deviations"].empty());
}

TEST(Cli, OutputIsByteIdenticalAcrossRuns) {
  const std::vector<std::string> args{"hilbert", "power", "--n", "3", "--r", "5", "--d", "3", "--seed", "7"};
  const auto a = invoke(args), b = invoke(args);
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  const std::vector<std::string> ext{"exterior", "two-quadrics", "--n", "5", "--format", "csv"};
  EXPECT_EQ(invoke(ext).out, invoke(ext).out);
}

TEST(Cli, PsiOrder) {
  const auto j = invoke_json({"dynamics", "psi-order", "--p", "5"});
  EXPECT_EQ(j["result"]["order"], 124);
  EXPECT_FALSE(j["params"].contains("n"));
}

TEST(Cli, ExteriorAnnihilatorCsv) {
  const auto r = invoke({"exterior", "ann", "--n", "9", "--d", "3", "--format", "csv"});
  ASSERT_EQ(r.code, 0) << r.err;
  EXPECT_NE(r.out.find("# command: exterior ann"), std::string::npos);
  EXPECT_NE(r.out.find("\n3,4,1,4,1,4,1\n"), std::string::npos) << r.out;
}

TEST(Cli, PhiTwoCycle) {
  const auto j = invoke_json({"dynamics", "phi-orbit", "--p", "71", "--f", "1 + x^63"});
  const auto text = j.dump();
  EXPECT_NE(text.find("x^23 + x^26 + x^34 + x^39 + x^41 + x^51 + x^70"), std::string::npos) << text;
}

TEST(Cli, SemigroupCheck) {
  const auto j = invoke_json({"semigroup", "check", "--generators", "2,3"});
  EXPECT_NE(j.dump().find("1 - t^6"), std::string::npos);
}

TEST(Cli, ArgumentErrorsExitTwo) {
  EXPECT_EQ(invoke({"hilbert", "generic", "--bogus"}).code, 2);
  EXPECT_EQ(invoke({"hilbert", "generic", "--n", "three", "--degrees", "2"}).code, 2);
  EXPECT_EQ(invoke({"hilbert", "generic", "--n", "0", "--degrees", "2"}).code, 2);
  EXPECT_EQ(invoke({"semigroup", "check", "--generators", "4,6"}).code, 2);
  EXPECT_EQ(invoke({"dynamics", "psi-order", "--p", "9"}).code, 2);
  EXPECT_EQ(invoke({"hilbert", "generic", "--n", "2", "--degrees", "2", "--primes", "15"}).code, 2);
  EXPECT_EQ(invoke({}).code, 2);
  const auto r = invoke({"waring", "generic-rank", "--k", "3", "--n", "0"});
  EXPECT_EQ(r.code, 2);
  EXPECT_FALSE(r.err.empty());
  EXPECT_TRUE(r.out.empty());
}

TEST(Cli, HelpExitsZero) { EXPECT_EQ(invoke({"--help"}).code, 0); }

TEST(Cli, FailingPropertyIsDataNotAnError) {
  const auto j = invoke_json({"lefschetz", "wlp", "--recipe", "tndk", "--n", "3", "--d", "3", "--k", "3", "--trials",
                              "2"});
  EXPECT_EQ(j["verdict"], "FAILS");
}
