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

#ifndef SCHUBITOPE_VERIFY_H_
#define SCHUBITOPE_VERIFY_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "schubitope/io.h"

namespace schubitope {

struct VerifyOptions {
  // Grid size / permutation degree the checks are scoped to, 1..6.
  int n = 4;
  // Seed for the sampled checks; equal seeds give equal reports.
  std::uint64_t seed = 1;
  // Worker threads; 0 means std::thread::hardware_concurrency().
  int jobs = 0;
  // Random diagrams drawn for the theta/rank and greedy checks.
  int random_diagrams = 200;
  // Run only checks whose name contains this string (all when empty).
  std::string filter;
};

struct CheckResult {
  std::string name;
  std::int64_t instances = 0;
  // Set on failure: the first failing instance, reproducibly encoded.
  std::optional<std::string> counterexample;
  // Set when the check does not apply at this n.
  std::optional<std::string> skipped;

  bool passed() const { return !counterexample.has_value(); }
};

struct VerifyReport {
  std::vector<CheckResult> checks;  // fixed order, independent of scheduling

  bool passed() const;
};

// Names of all checks, in report order.
std::vector<std::string> VerificationCheckNames();

// Runs the cross-module invariant suite. Throws DomainError for n outside
// 1..6.
VerifyReport RunVerification(const VerifyOptions& options);

Json ReportToJson(const VerifyReport& report);
std::string ReportToText(const VerifyReport& report);

}  // namespace schubitope

#endif  // SCHUBITOPE_VERIFY_H_
