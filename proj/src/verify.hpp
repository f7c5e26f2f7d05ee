// Copyright 2026 The gradedcartan Authors
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

#pragma once

#include <cstdint>
#include <string>
#include <vector>

// Built-in self check: a fixed list of suites, each a batch of randomized or
// exhaustive exact identities.  Deterministic for a given (seed, cases) pair;
// every comparison is exact equality.

namespace gc {

struct SuiteResult {
  std::string name;
  unsigned passed = 0;
  unsigned failed = 0;
  std::string note;  // first failure or abort message, empty when clean
};

struct VerifyReport {
  std::vector<SuiteResult> suites;
  unsigned passed() const;
  unsigned failed() const;
  bool ok() const { return failed() == 0; }
};

VerifyReport run_verify(uint64_t seed = 42, unsigned cases = 50);

// One line per suite plus a total and a final OK/FAILED line.
std::string format_report(const VerifyReport& r);

} // namespace gc
