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
// Eigenspaces of the transposition walk on S_M are indexed by b-partitions:
// chains lambda_1 >= mu_1 <= lambda_2 >= ... <= lambda_s whose skew sizes
// follow the left and right equivalence classes of b.
//
#ifndef RTWALK_SPECTRUM_H_
#define RTWALK_SPECTRUM_H_

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rtwalk/numeric.h"
#include "rtwalk/restriction.h"
#include "rtwalk/tableaux.h"

namespace rtwalk {

struct BPartition {
  std::vector<Partition> lambdas;  // lambda_1..lambda_s
  std::vector<Partition> mus;      // mu_1..mu_{s-1}

  int s() const { return static_cast<int>(lambdas.size()); }
  // mu_i for i in [0, s]; mu_0 and mu_s are empty.
  Partition mu(int i) const;
  // Alternating sequence (lambda_1, mu_1, ..., lambda_s).
  std::vector<Partition> Chain() const;
  // "([3],[1],[2,1])".
  std::string ToString() const;

  friend auto operator<=>(const BPartition&, const BPartition&) = default;
  friend bool operator==(const BPartition&, const BPartition&) = default;
};

// Throws std::invalid_argument if alpha is not a valid chain for b.
void ValidateBPartition(const BPartition& alpha, const RestrictionVector& b);

// Every chain for b, ordered by (lambda_1, mu_1, lambda_2, ...) with each
// coordinate in reverse-lexicographic order. Throws CapExceeded past `cap`
// chains and EmptyStateSpace for an empty S_M.
std::vector<BPartition> EnumerateBPartitions(const RestrictionVector& b,
                                             std::int64_t cap = kDefaultChainCap);

// Square (row, col), 1-based -> number of skews lambda_i/mu_{i-1} holding it.
using IndicatorTableau = std::map<std::pair<int, int>, int>;
IndicatorTableau ComputeIndicatorTableau(const BPartition& alpha);

// Eigenvalue of the adjacency operator U. Evaluates both the indicator
// tableau sum and sum C(lambda_i) - sum C(mu_i); throws std::logic_error if
// they disagree.
std::int64_t EigenvalueU(const BPartition& alpha);

// prod_{i=1..s} |X_{lambda_i/mu_{i-1}}| * |X_{lambda_i/mu_i}|.
BigInt Dimension(const BPartition& alpha);

// (lambda_1^T, mu_1^T, ..., lambda_s^T).
BPartition TransposeChain(const BPartition& alpha);

// Lazy-chain eigenvalue (n + 2 eig_u) / (n + 2 Delta). A state space of one
// element (Delta = 0) gives 1.
Rational LazyEigenvalue(std::int64_t eig_u, int n, std::int64_t delta);

struct SpectralLine {
  BPartition chain;
  std::int64_t eig_u = 0;
  Rational eig_p;
  BigInt dim;
};

struct MergedLine {
  std::int64_t eig_u = 0;
  Rational eig_p;
  BigInt dim;
  std::int64_t chains = 0;
};

struct Spectrum {
  RestrictionVector b = RestrictionVector::Unrestricted(1);
  std::int64_t delta = 0;
  std::vector<SpectralLine> lines;
  BigInt total_dim;

  // Lines grouped by eigenvalue, descending.
  std::vector<MergedLine> Merged() const;
  // Largest eig_u strictly below delta, if any.
  std::optional<std::int64_t> SecondEigenvalue() const;
};

Spectrum FullSpectrum(const RestrictionVector& b, std::int64_t cap = kDefaultChainCap);

// Columns: eig_u,eig_p_num,eig_p_den,dim (one row per merged eigenvalue), or
// per chain with a trailing chain column when `per_chain` is set.
void WriteSpectrumCsv(const Spectrum& spectrum, std::ostream& out, bool per_chain = false);

// ---------------------------------------------------------------------------
// Two-step analysis. Here b = (1^f, (g+1)^{n-f}) with f < n, so every chain
// is (lambda_1, mu_1, lambda_2).

struct RemainderTriple {
  int i = 0;
  int j = 0;
  int k = 0;
  friend auto operator<=>(const RemainderTriple&, const RemainderTriple&) = default;
  friend bool operator==(const RemainderTriple&, const RemainderTriple&) = default;
};

// (f - lambda_1^1, (f-g) - mu_1^1, (n-g) - lambda_2^1). Throws
// std::invalid_argument if alpha is not a chain of the two-step vector.
RemainderTriple ComputeRemainderTriple(const BPartition& alpha, const TwoStepParams& params);

// n + 2 Delta with Delta summed from its definition.
std::int64_t TwoStepDenominator(const TwoStepParams& params);

// Cells with k >= (n - g)/5, where the constant 9/10 is used.
bool IsLargeRemainderCell(const RemainderTriple& cell, const TwoStepParams& params);

// Throws std::out_of_range unless i >= j <= k, i <= f, j <= f - g, k <= n - g.
void ValidateCell(const RemainderTriple& cell, const TwoStepParams& params);

// 1 - s1(i) + s2(j) - s3(k) over the denominator n + 2 Delta, with s1 split
// at i < f/2.
Rational SmallRemainderBound(const RemainderTriple& cell, const TwoStepParams& params);

// 9/10 on large-remainder cells, SmallRemainderBound elsewhere.
Rational EigBound(const RemainderTriple& cell, const TwoStepParams& params);

// a(i,j,k) i! k! / j! with a = C(f,i) C(g,i-j) C(n-f,k-j) C(n-g,k).
BigInt DimSumBound(const RemainderTriple& cell, const TwoStepParams& params);
// Natural log of DimSumBound; -inf when the bound is zero.
Real LogDimSumBound(const RemainderTriple& cell, const TwoStepParams& params);

// The three lead chains.
BPartition Alpha0(const TwoStepParams& params);
BPartition Alpha1(const TwoStepParams& params);
BPartition Alpha2(const TwoStepParams& params);

}  // namespace rtwalk

#endif  // RTWALK_SPECTRUM_H_
