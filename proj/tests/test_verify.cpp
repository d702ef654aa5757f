#include <clopen/verify.hpp>

#include <gtest/gtest.h>

#include <string>
#include <vector>

using namespace clopen;

namespace {

Config small() {
  Config cfg;
  cfg.seed = 1;
  cfg.max_points = 4;
  cfg.random_cases = 50;
  return cfg;
}

}  // namespace

TEST(Suites, EverySuitePassesAtSmallSize) {
  for (const char* name :
       {"boolean-laws", "filters", "uf-universality", "ideal-bijection",
        "seminorm-identities", "orthogonality", "gelfand", "approximation",
        "tensor-isometry"}) {
    VerificationReport rep = run_suite(name, small());
    EXPECT_TRUE(rep.passed()) << name;
    EXPECT_EQ(rep.suite, name);
    for (const CheckResult& c : rep.checks) {
      EXPECT_EQ(c.failure_count, 0u) << name << "/" << c.name;
      EXPECT_GT(c.cases, 0u) << name << "/" << c.name;
    }
  }
}

TEST(Suites, AllBundlesEveryCheck) {
  VerificationReport rep = run_suite("all", small());
  EXPECT_TRUE(rep.passed());
  EXPECT_EQ(rep.checks.size(), 16u);
}

TEST(Suites, UnknownNamesAreRejected) {
  try {
    run_suite("bogus", small());
    FAIL() << "unknown suite accepted";
  } catch (const Error& e) {
    std::string msg = e.what();
    EXPECT_NE(msg.find("unknown suite"), std::string::npos);
    EXPECT_NE(msg.find("boolean-laws"), std::string::npos);
  }
}

TEST(Suites, ZeroSizeConfigurationIsAVacuousPass) {
  Config cfg;
  cfg.seed = 0;
  cfg.max_points = 0;
  cfg.random_cases = 0;
  EXPECT_TRUE(run_suite("all", cfg).passed());
}

TEST(Suites, IdenticalSeedsReproduceIdenticalReports) {
  Config cfg = small();
  cfg.seed = 42;
  VerificationReport a = run_suite("approximation", cfg);
  VerificationReport b = run_suite("approximation", cfg);
  ASSERT_EQ(a.checks.size(), b.checks.size());
  for (std::size_t i = 0; i < a.checks.size(); ++i) {
    EXPECT_EQ(a.checks[i].name, b.checks[i].name);
    EXPECT_EQ(a.checks[i].cases, b.checks[i].cases);
    EXPECT_EQ(a.checks[i].failure_count, b.checks[i].failure_count);
    EXPECT_EQ(a.checks[i].failures, b.checks[i].failures);
  }
}

TEST(Suites, ChecksAreKeyedByName) {
  VerificationReport rep = run_suite("uf-universality", small());
  std::vector<std::string> names;
  for (const CheckResult& c : rep.checks) names.push_back(c.name);
  std::vector<std::string> expected{"uf-spaces", "uf-map",
                                    "evaluation-embedding",
                                    "function-extension"};
  EXPECT_EQ(names, expected);
}
