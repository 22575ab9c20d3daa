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
#ifndef RTWALK_MONTECARLO_H_
#define RTWALK_MONTECARLO_H_

#include <cstdint>
#include <iosfwd>
#include <random>
#include <string>
#include <vector>

#include "rtwalk/numeric.h"
#include "rtwalk/restriction.h"

namespace rtwalk {

// kRejection draws (i, j) from [n]^2 until i = j (hold) or the swap is
// allowed. kDirect holds with probability n/N and otherwise swaps a uniform
// allowed pair. Both realize the lazy chain.
enum class StepRule { kRejection, kDirect };

std::string ToString(StepRule rule);
StepRule ParseStepRule(const std::string& text);

// The ordered row pair behind one lazy step; i == j is a hold.
struct StepOutcome {
  int i = 0;
  int j = 0;
};

// Per-trajectory generator derived from (seed, index) through splitmix64, so
// trajectories do not depend on how many others are run.
std::mt19937_64 TrajectoryRng(std::uint64_t seed, std::uint64_t index);

class Walker {
 public:
  Walker(RestrictionVector b, StepRule rule);

  const RestrictionVector& b() const { return b_; }
  StepRule rule() const { return rule_; }
  std::int64_t delta() const { return delta_; }

  // Applies one step to sigma in place.
  StepOutcome Step(Permutation& sigma, std::mt19937_64& rng) const;

 private:
  StepOutcome StepRejection(Permutation& sigma, std::mt19937_64& rng) const;
  StepOutcome StepDirect(Permutation& sigma, std::mt19937_64& rng) const;
  bool Allowed(const Permutation& sigma, int i, int j) const {
    return sigma[j] >= b_.values()[i] && sigma[i] >= b_.values()[j];
  }

  RestrictionVector b_;
  StepRule rule_;
  std::int64_t delta_ = 0;
  std::int64_t denominator_ = 0;
  // Dense enough for rejection over distinct pairs.
  bool dense_ = true;
};

enum class Statistic {
  kSmallFixedPoints,   // #{i <= g : sigma(i) = i}
  kInA,                // at least one small fixed point
  kFirstRowFixed,      // sigma(1) = 1
  kFirstColumnUnused,  // T > t, T the first step whose pair uses the row holding 1
  kSmallRowTouches,    // cumulative coupon count, with multiplicity
  kSmallRowsTouched,   // distinct small rows that have collected a coupon
};

std::string ToString(Statistic statistic);
Statistic ParseStatistic(const std::string& text);
std::vector<Statistic> AllStatistics();

struct SimulationConfig {
  RestrictionVector b = RestrictionVector::Unrestricted(1);
  // Small-row count g and boundary f for the statistics. Derived from b when
  // b is two-step; otherwise g = f = 0 and the small-row statistics vanish.
  int f = 0;
  int g = 0;
  // Times at which statistics are recorded; t = max(times).
  std::vector<std::int64_t> times;
  std::int64_t reps = 1;
  std::uint64_t seed = 0;
  StepRule rule = StepRule::kDirect;
  // 0 means hardware concurrency. Results do not depend on this value.
  int workers = 0;
  std::vector<Statistic> statistics = AllStatistics();
  // Identity when empty.
  Permutation start;

  // Fills f and g from b (two-step reading) and validates everything.
  void Normalize();
};

struct StatisticSummary {
  Statistic statistic = Statistic::kSmallFixedPoints;
  std::int64_t t = 0;
  std::int64_t count = 0;
  Real mean = 0;
  Real variance = 0;  // unbiased sample variance
  Real ci99 = 0;      // half width of the normal 99% interval for the mean
};

struct StatisticSeries {
  std::vector<std::int64_t> times;
  std::vector<Statistic> statistics;
  // rows[s][k] summarizes statistics[s] at times[k].
  std::vector<std::vector<StatisticSummary>> rows;

  // Throws std::out_of_range when the pair was not recorded.
  const StatisticSummary& Get(Statistic statistic, std::int64_t t) const;
  // Columns t,statistic,mean,ci99,variance,count.
  void WriteCsv(std::ostream& out) const;
};

StatisticSeries RunStatistics(SimulationConfig config);

struct CouponPrediction {
  Real mean = 0;            // t 2fg / N
  Real variance_bound = 0;  // t 4fg / N
};

CouponPrediction CouponCollectorPrediction(const TwoStepParams& params, std::int64_t t);

// Two-sided normal quantile used for the 99% intervals.
inline constexpr double kZ99 = 2.5758293035489004;

}  // namespace rtwalk

#endif  // RTWALK_MONTECARLO_H_
