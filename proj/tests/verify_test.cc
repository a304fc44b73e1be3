// Copyright 2026 The Schubitope Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "schubitope/verify.h"

#include <gtest/gtest.h>

#include "schubitope/errors.h"

namespace schubitope {
namespace {

TEST(VerifyTest, AllChecksPassAtSmallN) {
  for (int n = 1; n <= 3; ++n) {
    VerifyOptions options;
    options.n = n;
    options.random_diagrams = 40;
    const VerifyReport report = RunVerification(options);
    EXPECT_EQ(report.checks.size(), VerificationCheckNames().size());
    for (const CheckResult& c : report.checks) {
      EXPECT_TRUE(c.passed()) << "n=" << n << " " << c.name << ": "
                              << c.counterexample.value_or("");
    }
    EXPECT_TRUE(report.passed());
  }
}

TEST(VerifyTest, DeterministicAcrossJobCounts) {
  VerifyOptions options;
  options.n = 3;
  options.seed = 42;
  options.jobs = 1;
  const std::string one = ReportToJson(RunVerification(options)).dump();
  options.jobs = 3;
  EXPECT_EQ(ReportToJson(RunVerification(options)).dump(), one);
}

TEST(VerifyTest, FilterSelectsChecks) {
  VerifyOptions options;
  options.n = 3;
  options.filter = "theta";
  const VerifyReport report = RunVerification(options);
  ASSERT_EQ(report.checks.size(), 1u);
  EXPECT_EQ(report.checks[0].name, "theta_equals_rank");
  EXPECT_GT(report.checks[0].instances, 0);
}

TEST(VerifyTest, RejectsBadN) {
  VerifyOptions options;
  options.n = 0;
  EXPECT_THROW(RunVerification(options), DomainError);
  options.n = 7;
  EXPECT_THROW(RunVerification(options), DomainError);
}

TEST(VerifyTest, TextReportEndsWithStatus) {
  VerifyReport report;
  report.checks.push_back({"a", 3, std::nullopt, std::nullopt});
  report.checks.push_back({"b", 1, std::string("w=21"), std::nullopt});
  const std::string text = ReportToText(report);
  EXPECT_NE(text.find("FAIL  b  (1 instances)  counterexample: w=21"),
            std::string::npos);
  EXPECT_EQ(text.substr(text.size() - 5), "FAIL\n");
  EXPECT_EQ(ReportToJson(report)["status"], "fail");
}

}  // namespace
}  // namespace schubitope
