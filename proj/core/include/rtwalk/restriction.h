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
// One-sided interval restriction vectors. Row i of the board may hold any
// value in [b_i, n]; S_M is the set of permutations that respect every row.
//
#ifndef RTWALK_RESTRICTION_H_
#define RTWALK_RESTRICTION_H_

#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "rtwalk/numeric.h"

namespace rtwalk {

struct TwoStepParams {
  int n = 0;
  int f = 0;
  int g = 0;

  // Throws std::invalid_argument unless 1 <= g <= f <= n.
  void Validate() const;
  std::string ToString() const;
  friend bool operator==(const TwoStepParams&, const TwoStepParams&) = default;
};

class RestrictionVector {
 public:
  // Sorts b and rejects vectors with an empty permutation set (throws
  // EmptyStateSpace) or entries outside [1, n] (std::invalid_argument).
  static RestrictionVector Create(std::vector<int> b);
  // Same validation of entries, but an empty S_M is allowed.
  static RestrictionVector Query(std::vector<int> b);
  static RestrictionVector Unrestricted(int n);

  // Parses "1,1,1,3,3" (whitespace tolerant). Query mode.
  static RestrictionVector Parse(const std::string& text);

  int n() const { return static_cast<int>(b_.size()); }
  const std::vector<int>& values() const { return b_; }
  // 1-based row access.
  int b(int row) const { return b_[row - 1]; }

  bool IsNonempty() const { return FirstViolation() == 0; }
  // Smallest row i with b_i > i, or 0 if there is none.
  int FirstViolation() const;

  // Two-step reading (1^f, (g+1)^{n-f}). The all-ones vector maps to
  // (n, n, n).
  std::optional<TwoStepParams> AsTwoStep() const;
  bool IsTwoStep() const { return AsTwoStep().has_value(); }

  std::string ToString() const;
  friend bool operator==(const RestrictionVector&, const RestrictionVector&) = default;

 private:
  explicit RestrictionVector(std::vector<int> b) : b_(std::move(b)) {}
  std::vector<int> b_;
};

RestrictionVector TwoStepVector(const TwoStepParams& params);

// Every sorted vector of length n with a nonempty S_M (b_i <= i), in
// lexicographic order. There are Catalan(n) of them.
std::vector<RestrictionVector> AllNonemptyVectors(int n);

// Sum of (i - b_i); the number of allowed transpositions from any state.
std::int64_t Degree(const RestrictionVector& b);

// Product over columns c of (#{i : b_i <= c} - (c - 1)), or 0 when empty.
BigInt CountPermutations(const RestrictionVector& b);

// f! (n-g)! / (f-g)!, the two-step closed form.
BigInt CountTwoStep(const TwoStepParams& params);

// Values 1..n; sigma[i-1] is the value in row i.
using Permutation = std::vector<int>;

Permutation Identity(int n);
bool IsMember(const RestrictionVector& b, const Permutation& sigma);

// Every element of S_M in lexicographic order. Throws CapExceeded when
// |S_M| > cap.
std::vector<Permutation> Enumerate(const RestrictionVector& b,
                                   std::int64_t cap = kDefaultEnumerationCap);

// Exactly uniform element of S_M, drawn column by column.
Permutation SampleUniform(const RestrictionVector& b, std::mt19937_64& rng);
Permutation SampleUniform(const RestrictionVector& b, std::uint64_t seed);

struct EquivalenceClasses {
  std::vector<int> left;
  std::vector<int> right;
};

EquivalenceClasses ComputeEquivalenceClasses(const RestrictionVector& b);

// Rows are 1-based. False for i == j.
bool IsAllowedTransposition(const RestrictionVector& b, const Permutation& sigma, int i,
                            int j);

// Neighbors ordered by the swapped row pair (i < j), lexicographically.
std::vector<Permutation> Neighbors(const RestrictionVector& b, const Permutation& sigma);

// "45123" when n <= 9, otherwise comma separated.
std::string FormatPermutation(const Permutation& sigma);
// Inverse of FormatPermutation; also accepts comma separated input.
Permutation ParsePermutation(const std::string& text);

}  // namespace rtwalk

#endif  // RTWALK_RESTRICTION_H_
