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
#include "rtwalk/bounds.h"

#include <algorithm>
#include <vector>

namespace rtwalk {

namespace bmp = boost::multiprecision;

Rational CellEigenvalueBound(const RemainderTriple& cell, const TwoStepParams& params,
                             const UpperBoundOptions& options) {
  if (options.small_remainder_everywhere) return SmallRemainderBound(cell, params);
  return EigBound(cell, params);
}

Rational UpperBoundCellTerm(const RemainderTriple& cell, const TwoStepParams& params,
                            std::int64_t t, const UpperBoundOptions& options) {
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  const Rational s = CellEigenvalueBound(cell, params, options);
  return Pow(s, static_cast<unsigned>(2 * t)) * Rational(DimSumBound(cell, params));
}

namespace {

void RequireTwoClasses(const TwoStepParams& params) {
  params.Validate();
  if (params.f == params.n) {
    throw std::invalid_argument("the remainder-cell bound needs f < n");
  }
}

template <typename Visit>
void ForEachCell(const TwoStepParams& params, Visit&& visit) {
  const int f = params.f, g = params.g, n = params.n;
  for (int i = 0; i <= f; ++i) {
    for (int j = 0; j <= std::min(i, f - g); ++j) {
      for (int k = j; k <= n - g; ++k) {
        if (i == 0 && j == 0 && k == 0) continue;
        visit(RemainderTriple{i, j, k});
      }
    }
  }
}

}  // namespace

ChiUpperBoundReport ChiUpperBound(const TwoStepParams& params, std::int64_t t,
                                  const UpperBoundOptions& options) {
  RequireTwoClasses(params);
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  const std::int64_t n = params.n, f = params.f, g = params.g;
  const std::int64_t den = TwoStepDenominator(params);

  // log k! and log binomials straight from one table.
  std::vector<Real> lf(n + 1);
  lf[0] = 0;
  for (std::int64_t k = 1; k <= n; ++k) lf[k] = lf[k - 1] + bmp::log(Real(k));
  auto log_binom = [&](std::int64_t a, std::int64_t b) { return lf[a] - lf[b] - lf[a - b]; };

  const Real log_den = bmp::log(Real(den));
  const Real log_nine_tenths = bmp::log(Real(9) / 10);
  const Real two_t = Real(2 * t);

  LogSumExp zone[3];
  std::int64_t cells = 0;
  ForEachCell(params, [&](const RemainderTriple& cell) {
    const std::int64_t i = cell.i, j = cell.j, k = cell.k;
    if (i - j > g || k - j > n - f) return;  // DimSumBound is zero
    ++cells;
    const Real log_dim = log_binom(f, i) + lf[i] + log_binom(g, i - j) +
                         log_binom(n - f, k - j) + log_binom(n - g, k) + lf[k] - lf[j];
    const bool large = 5 * k >= n - g;
    Real log_term = log_dim;
    if (t > 0) {
      if (large && !options.small_remainder_everywhere) {
        log_term += two_t * log_nine_tenths;
      } else {
        const std::int64_t s1 = 2 * i < f ? 2 * i * (f - i + 1) : i * f;
        const std::int64_t s2 = 2 * j * (f - g - j + 1);
        const std::int64_t s3 = 2 * k * (n - g - k + 1);
        const std::int64_t num = den - s1 + s2 - s3;
        if (num == 0) return;
        log_term += two_t * (bmp::log(Real(num < 0 ? -num : num)) - log_den);
      }
    }
    zone[large ? 0 : (i == 0 ? 1 : 2)].Add(log_term);
  });

  ChiUpperBoundReport report;
  report.params = params;
  report.t = t;
  report.denominator = den;
  report.cells = cells;
  auto value = [](const LogSumExp& z) { return z.empty() ? Real(0) : bmp::exp(z.value()); };
  report.q1 = value(zone[0]);
  report.q2 = value(zone[1]);
  report.q3 = value(zone[2]);
  report.chi_sq = 2 * (report.q1 + report.q2 + report.q3);
  report.chi = bmp::sqrt(report.chi_sq);

  const Real rf = Real(f), rg = Real(g);
  report.c = Real(4 * f) * Real(t) / Real(den) - bmp::log(rf) - bmp::log(rg);
  report.log_q1_closed = -Real(n) * bmp::log(Real(n));
  report.q2_closed = 2 * bmp::pow(Real(n - g), -6);
  report.q3_closed = 12 * bmp::exp(-report.c) + 4 * bmp::exp(-report.c * rf / 10 + rf);
  report.chi_closed = 4 * bmp::exp(-report.c / 2);
  return report;
}

Real ChiUpperBoundEvaluator(const TwoStepParams& params, std::int64_t t,
                            const UpperBoundOptions& options) {
  return ChiUpperBound(params, t, options).chi;
}

Rational ChiUpperBoundSqExact(const TwoStepParams& params, std::int64_t t,
                              const UpperBoundOptions& options) {
  RequireTwoClasses(params);
  Rational total = 0;
  ForEachCell(params, [&](const RemainderTriple& cell) {
    total += UpperBoundCellTerm(cell, params, t, options);
  });
  return 2 * total;
}

Real ChiLowerTerm(const TwoStepParams& params, std::int64_t t) {
  params.Validate();
  if (params.f < 2) throw std::invalid_argument("the lower term needs f >= 2");
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  const std::int64_t den = TwoStepDenominator(params);
  const Real base = Real(den - 2 * params.f) / Real(den);
  return Real((params.f - 1) * params.g) * bmp::pow(base, Real(2 * t));
}

Rational ChiLowerTermExact(const TwoStepParams& params, std::int64_t t) {
  params.Validate();
  if (params.f < 2) throw std::invalid_argument("the lower term needs f >= 2");
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  const std::int64_t den = TwoStepDenominator(params);
  return Rational((params.f - 1) * params.g) *
         Pow(Rational(den - 2 * params.f, den), static_cast<unsigned>(2 * t));
}

TheoremTimes CutoffTimes(const TwoStepParams& params, Real c) {
  params.Validate();
  if (params.f < 2) throw std::invalid_argument("theorem times need f >= 2");
  TheoremTimes times;
  times.params = params;
  times.c = c;
  times.denominator = TwoStepDenominator(params);
  const Real den = Real(times.denominator);
  const Real f = Real(params.f);
  times.window = den / (4 * f);
  const Real center = times.window * (bmp::log(f) + bmp::log(Real(params.g)));
  times.t_chi_upper = center + c * times.window;
  times.t_chi_lower = center - c * times.window;
  times.t_tv_lower = times.t_chi_lower;
  times.t_fast_mix = 3 * den / (2 * f - 1);
  return times;
}

Real TvLowerBoundValue(Real r, Real c) {
  if (!(r > 0)) throw std::invalid_argument("r must be positive");
  return bmp::exp(Real(-1)) - bmp::exp(-r * bmp::exp(c));
}

FixedPointProbability StationarySmallFixedPointProb(const TwoStepParams& params) {
  params.Validate();
  FixedPointProbability out;
  const BigInt f_fact = Factorial(params.f);
  for (int k = 1; k <= params.g; ++k) {
    const Rational term(Binomial(params.g, k) * Factorial(params.f - k), f_fact);
    out.exact += (k % 2 == 1) ? term : Rational(-term);
  }
  out.approximation = 1 - bmp::exp(-Real(params.g) / Real(params.f));
  return out;
}

namespace {

void RequireFastMix(const TwoStepParams& params, std::int64_t k) {
  params.Validate();
  if (params.g != 1) throw std::invalid_argument("the fast-mixing bound needs g = 1");
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
}

}  // namespace

Real FastMixNoCutoffLower(const TwoStepParams& params, std::int64_t k) {
  RequireFastMix(params, k);
  const std::int64_t den = TwoStepDenominator(params);
  const Real base = Real(den - (2 * params.f - 1)) / Real(den);
  return bmp::pow(base, Real(k)) - 1 / Real(params.f);
}

Rational FastMixNoCutoffLowerExact(const TwoStepParams& params, std::int64_t k) {
  RequireFastMix(params, k);
  const std::int64_t den = TwoStepDenominator(params);
  return Pow(Rational(den - (2 * params.f - 1), den), static_cast<unsigned>(k)) -
         Rational(1, params.f);
}

}  // namespace rtwalk
