// Copyright 2026 The rtwalk Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//
// Self-checks that compare the library against brute-force computations.
//
#ifndef RTWALK_VERIFY_H_
#define RTWALK_VERIFY_H_

#include <string>
#include <vector>

namespace rtwalk {

enum class VerifyLevel { kQuick, kFull };

// Accepts "quick" and "full"; throws std::invalid_argument otherwise.
VerifyLevel ParseVerifyLevel(const std::string& text);

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
  double seconds = 0;
};

// quick: completeness for n <= 6, the non-transitive return probabilities,
// and spectral/matrix chi-squared agreement on one instance.
// full: every invariant at its stated size.
std::vector<CheckResult> RunVerification(VerifyLevel level);

}  // namespace rtwalk

#endif  // RTWALK_VERIFY_H_
