#include "cli.hpp"

#include <gtest/gtest.h>
#include <stdlib.h>

#include <json.hpp>
#include <sstream>

namespace frobcx::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result call(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

class ScopedEnv {
 public:
  ScopedEnv(const char* name, const char* value) : name_(name) {
    ::setenv(name, value, 1);
  }
  ~ScopedEnv() { ::unsetenv(name_); }

 private:
  const char* name_;
};

TEST(CliTest, SequenceCsv) {
  const auto r = call({"sequence", "--p", "2", "--d", "4", "--emax", "4",
                       "--engine", "transfer", "--format", "csv"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_EQ(r.out, "e,c_e,k_e\n0,0,0\n1,4,4\n2,4,8\n3,24,32\n4,160,192\n");
}

TEST(CliTest, SequenceJsonSchema) {
  const auto r = call({"sequence", "--p", "2", "--d", "2", "--emax", "3",
                       "--format", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("p"), 2);
  EXPECT_EQ(j.at("d"), 2);
  EXPECT_EQ(j.at("c"), nlohmann::json({"0", "2", "0", "0"}));
  EXPECT_TRUE(j.at("engine").is_string());
}

TEST(CliTest, ClosedEngine) {
  const auto r = call({"sequence", "--p", "3", "--d", "3", "--emax", "2",
                       "--engine", "closed", "--format", "json"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("c").at(2), "9");
  EXPECT_EQ(j.at("engine"), "closed");
}

TEST(CliTest, JsonRoundTripIsByteStable) {
  const std::vector<std::vector<std::string>> commands{
      {"sequence", "--p", "2", "--d", "4", "--emax", "20", "--format", "json"},
      {"complexity", "--p", "2", "--d", "4", "--tol", "1e-9", "--format", "json"},
      {"segre", "--p", "3", "--d", "3", "--format", "json"},
      {"mdpoly", "--p", "3", "--d", "5"},
  };
  for (const auto& cmd : commands) {
    const auto r = call(cmd);
    ASSERT_EQ(r.code, kOk) << r.err;
    std::string body = r.out;
    while (!body.empty() && body.back() == '\n') body.pop_back();
    EXPECT_EQ(nlohmann::json::parse(body).dump(), body);
    EXPECT_EQ(call(cmd).out, r.out);
  }
}

TEST(CliTest, BigCountsStayExact) {
  const auto r = call({"sequence", "--p", "2", "--d", "4", "--emax", "40",
                       "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  // A_{38} from the two-term recurrence
  Count a = 4, b = 24;
  for (int i = 0; i < 38; ++i) {
    Count next = 10 * b - 20 * a;
    a = b;
    b = next;
  }
  EXPECT_EQ(j.at("c").at(40).get<std::string>(), a.get_str());
}

TEST(CliTest, ComplexityIntervals) {
  auto r = call({"complexity", "--p", "2", "--d", "4", "--tol", "1e-9",
                 "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("rho_lo"), "7.236067977");
  EXPECT_EQ(j.at("rho_hi"), "7.236067978");

  r = call({"complexity", "--p", "2", "--d", "3", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("rho_lo"), "3");
  EXPECT_EQ(j.at("rho_hi"), "3");

  r = call({"segre", "--p", "2", "--d", "3", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("closed_form"), "log_2(3)");
  EXPECT_EQ(j.at("cxf_lo"), "1.5849625007");
  EXPECT_EQ(j.at("cxf_hi"), "1.5849625008");

  r = call({"segre", "--p", "2", "--d", "4", "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("closed_form"), "log_2(5+sqrt(5))");
}

TEST(CliTest, ExitCodes) {
  EXPECT_EQ(call({}).code, kUsage);
  EXPECT_EQ(call({"--help"}).code, kOk);
  EXPECT_EQ(call({"bogus"}).code, kUsage);
  EXPECT_EQ(call({"sequence", "--p", "4", "--d", "3", "--emax", "2"}).code, kUsage);
  EXPECT_EQ(call({"sequence", "--p", "2", "--d", "3", "--emax", "2",
                  "--format", "xml"}).code, kUsage);
  EXPECT_EQ(call({"complexity", "--p", "2", "--d", "2"}).code, kUsage);
  EXPECT_EQ(call({"segre", "--p", "3", "--d", "1"}).code, kUsage);
  EXPECT_EQ(call({"complexity", "--p", "2", "--d", "3", "--tol", "-1"}).code, kUsage);

  const auto guard = call({"sequence", "--p", "2", "--d", "5", "--emax", "6",
                           "--engine", "enumerate", "--max-compositions", "10"});
  EXPECT_EQ(guard.code, kGuard);
  EXPECT_NE(guard.err.find("limit 10"), std::string::npos);
  EXPECT_EQ(call({"sequence", "--p", "2", "--d", "5", "--emax", "6",
                  "--engine", "carry", "--max-carryvectors", "3"}).code, kGuard);

  EXPECT_EQ(call({"verify", "--p", "2", "--d", "4", "--emax", "4",
                  "--inject-fault"}).code, kMismatch);
}

TEST(CliTest, EnvironmentGuardsYieldToFlags) {
  const std::vector<std::string> cmd{"sequence", "--p", "2", "--d", "4",
                                     "--emax", "4", "--engine", "enumerate"};
  {
    ScopedEnv env("FROBCX_MAX_COMPOSITIONS", "5");
    EXPECT_EQ(call(cmd).code, kGuard);
    auto with_flag = cmd;
    with_flag.insert(with_flag.end(), {"--max-compositions", "1000000"});
    EXPECT_EQ(call(with_flag).code, kOk);
  }
  EXPECT_EQ(call(cmd).code, kOk);
}

TEST(CliTest, AutoEngineTagsReport) {
  auto r = call({"sequence", "--p", "2", "--d", "4", "--emax", "4",
                 "--format", "json"});
  ASSERT_EQ(r.code, kOk);
  EXPECT_EQ(nlohmann::json::parse(r.out).at("engine"), "enumerate");

  r = call({"sequence", "--p", "2", "--d", "4", "--emax", "4", "--format",
            "json", "--max-compositions", "5"});
  ASSERT_EQ(r.code, kOk);
  const auto j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j.at("engine"), "transfer");
  EXPECT_EQ(j.at("c").at(4), "160");
}

TEST(CliTest, VerifyReportsFirstMismatch) {
  const auto r = call({"verify", "--p", "2", "--d", "4", "--emax", "4",
                       "--inject-fault"});
  ASSERT_EQ(r.code, kMismatch);
  EXPECT_NE((r.out + r.err).find("MISMATCH"), std::string::npos);
  EXPECT_EQ(call({"verify", "--p", "2", "--d", "2", "--emax", "5"}).code, kOk);
}

TEST(CliTest, TwistedDemo) {
  const auto r = call({"twisted", "demo", "--p", "2", "--N", "4", "--r", "3",
                       "--e", "5", "--seed", "7"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("factorization holds: yes"), std::string::npos);
  EXPECT_EQ(call({"twisted", "demo", "--p", "2", "--N", "4", "--e", "5",
                  "--e0", "1"}).code, kUsage);
}

}  // namespace
}  // namespace frobcx::cli
