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
// Closed-form times and distance bounds for the two-step walk, evaluated at
// finite n. N below is n + 2 Delta.
//
#ifndef RTWALK_BOUNDS_H_
#define RTWALK_BOUNDS_H_

#include <cstdint>

#include "rtwalk/numeric.h"
#include "rtwalk/restriction.h"
#include "rtwalk/spectrum.h"

namespace rtwalk {

struct UpperBoundOptions {
  // Use 1 - s1 + s2 - s3 on every cell instead of 9/10 on the cells with
  // k >= (n - g)/5. The result is then a rigorous bound at every n.
  bool small_remainder_everywhere = false;
};

// s(i,j,k) as selected by `options`.
Rational CellEigenvalueBound(const RemainderTriple& cell, const TwoStepParams& params,
                             const UpperBoundOptions& options = {});

// s(i,j,k)^(2t) * DimSumBound(i,j,k), exactly.
Rational UpperBoundCellTerm(const RemainderTriple& cell, const TwoStepParams& params,
                            std::int64_t t, const UpperBoundOptions& options = {});

struct ChiUpperBoundReport {
  TwoStepParams params;
  std::int64_t t = 0;
  std::int64_t denominator = 0;  // N
  // Zone sums: Q1 over k >= (n-g)/5, Q2 over i = 0, Q3 over i > 0 (the last
  // two on k < (n-g)/5), each excluding (0,0,0).
  Real q1 = 0;
  Real q2 = 0;
  Real q3 = 0;
  // 2 (Q1 + Q2 + Q3), a bound on the squared chi-squared distance.
  Real chi_sq = 0;
  // sqrt(chi_sq); the evaluator output.
  Real chi = 0;
  std::int64_t cells = 0;

  // Closed forms for comparison only, with c recovered from t through
  // t = N (log f + log g)/(4f) + c N/(4f).
  Real c = 0;
  Real log_q1_closed = 0;  // log(n^-n)
  Real q2_closed = 0;      // 2 (n - g)^-6
  Real q3_closed = 0;      // 12 e^-c + 4 e^(-cf/10 + f)
  Real chi_closed = 0;     // 4 e^(-c/2)
};

// Direct triple summation in log space over every cell (i,j,k) != (0,0,0)
// with i >= j <= k, i <= f, j <= f - g, k <= n - g. Requires f < n.
ChiUpperBoundReport ChiUpperBound(const TwoStepParams& params, std::int64_t t,
                                  const UpperBoundOptions& options = {});
Real ChiUpperBoundEvaluator(const TwoStepParams& params, std::int64_t t,
                            const UpperBoundOptions& options = {});
// 2 sum s^(2t) DimSumBound, exactly; intended for small n.
Rational ChiUpperBoundSqExact(const TwoStepParams& params, std::int64_t t,
                              const UpperBoundOptions& options = {});

// (f - 1) g (1 - 2f/N)^(2t). Requires f >= 2.
Real ChiLowerTerm(const TwoStepParams& params, std::int64_t t);
Rational ChiLowerTermExact(const TwoStepParams& params, std::int64_t t);

struct TheoremTimes {
  TwoStepParams params;
  Real c = 0;
  std::int64_t denominator = 0;  // N
  Real window = 0;               // N / (4f)
  Real t_chi_upper = 0;          // N (log f + log g)/(4f) + c N/(4f)
  Real t_chi_lower = 0;          // same with -c
  Real t_tv_lower = 0;           // same form as t_chi_lower
  Real t_fast_mix = 0;           // 3N / (2f - 1)
};

// Requires f >= 2 and g >= 1. Times are real; round up to use as steps.
TheoremTimes CutoffTimes(const TwoStepParams& params, Real c);

// 1/e - exp(-r e^c). Requires r > 0.
Real TvLowerBoundValue(Real r, Real c);

struct FixedPointProbability {
  Rational exact;      // sum_k (-1)^(k+1) C(g,k) (f-k)!/f!
  Real approximation;  // 1 - e^(-g/f)
};

// Stationary probability that some row i <= g is a fixed point.
FixedPointProbability StationarySmallFixedPointProb(const TwoStepParams& params);

// (1 - (2f - 1)/N)^k - 1/f. Requires g = 1.
Real FastMixNoCutoffLower(const TwoStepParams& params, std::int64_t k);
Rational FastMixNoCutoffLowerExact(const TwoStepParams& params, std::int64_t k);

}  // namespace rtwalk

#endif  // RTWALK_BOUNDS_H_
