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
#include "rtwalk/montecarlo.h"

#include <algorithm>
#include <atomic>
#include <ostream>
#include <thread>

#include "rtwalk/spectrum.h"

namespace rtwalk {

namespace bmp = boost::multiprecision;

std::string ToString(StepRule rule) {
  return rule == StepRule::kDirect ? "direct" : "rejection";
}

StepRule ParseStepRule(const std::string& text) {
  if (text == "direct") return StepRule::kDirect;
  if (text == "rejection") return StepRule::kRejection;
  throw std::invalid_argument("unknown step rule '" + text + "'");
}

namespace {

std::uint64_t SplitMix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

}  // namespace

std::mt19937_64 TrajectoryRng(std::uint64_t seed, std::uint64_t index) {
  return std::mt19937_64(SplitMix64(SplitMix64(seed) ^ SplitMix64(~index)));
}

Walker::Walker(RestrictionVector b, StepRule rule) : b_(std::move(b)), rule_(rule) {
  delta_ = Degree(b_);
  denominator_ = b_.n() + 2 * delta_;
  const std::int64_t pairs = static_cast<std::int64_t>(b_.n()) * (b_.n() - 1) / 2;
  dense_ = 8 * delta_ >= pairs;
}

StepOutcome Walker::Step(Permutation& sigma, std::mt19937_64& rng) const {
  return rule_ == StepRule::kDirect ? StepDirect(sigma, rng) : StepRejection(sigma, rng);
}

StepOutcome Walker::StepRejection(Permutation& sigma, std::mt19937_64& rng) const {
  std::uniform_int_distribution<int> row(0, b_.n() - 1);
  while (true) {
    const int i = row(rng);
    const int j = row(rng);
    if (i == j) return {i + 1, i + 1};
    if (Allowed(sigma, i, j)) {
      std::swap(sigma[i], sigma[j]);
      return {i + 1, j + 1};
    }
  }
}

StepOutcome Walker::StepDirect(Permutation& sigma, std::mt19937_64& rng) const {
  const int n = b_.n();
  std::uniform_int_distribution<std::int64_t> outcome(0, denominator_ - 1);
  const std::int64_t u = outcome(rng);
  if (u < n) return {static_cast<int>(u) + 1, static_cast<int>(u) + 1};

  if (dense_) {
    std::uniform_int_distribution<int> row(0, n - 1);
    while (true) {
      const int i = row(rng);
      const int j = row(rng);
      if (i != j && Allowed(sigma, i, j)) {
        std::swap(sigma[i], sigma[j]);
        return {i + 1, j + 1};
      }
    }
  }
  // Sparse case: walk to the chosen allowed pair.
  std::uniform_int_distribution<std::int64_t> pick(0, 2 * delta_ - 1);
  std::int64_t target = pick(rng);
  const bool flip = target % 2 == 1;
  target /= 2;
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (!Allowed(sigma, i, j)) continue;
      if (target-- == 0) {
        std::swap(sigma[i], sigma[j]);
        return flip ? StepOutcome{j + 1, i + 1} : StepOutcome{i + 1, j + 1};
      }
    }
  }
  throw std::logic_error("allowed pair count disagrees with the degree");
}

std::string ToString(Statistic statistic) {
  switch (statistic) {
    case Statistic::kSmallFixedPoints:
      return "small_fixed_points";
    case Statistic::kInA:
      return "in_A";
    case Statistic::kFirstRowFixed:
      return "first_row_fixed";
    case Statistic::kFirstColumnUnused:
      return "first_column_unused";
    case Statistic::kSmallRowTouches:
      return "small_row_touches";
    case Statistic::kSmallRowsTouched:
      return "small_rows_touched";
  }
  return "unknown";
}

std::vector<Statistic> AllStatistics() {
  return {Statistic::kSmallFixedPoints,  Statistic::kInA,
          Statistic::kFirstRowFixed,     Statistic::kFirstColumnUnused,
          Statistic::kSmallRowTouches,   Statistic::kSmallRowsTouched};
}

Statistic ParseStatistic(const std::string& text) {
  for (Statistic s : AllStatistics()) {
    if (ToString(s) == text) return s;
  }
  throw std::invalid_argument("unknown statistic '" + text + "'");
}

void SimulationConfig::Normalize() {
  if (!b.IsNonempty()) throw EmptyStateSpace("cannot simulate on an empty S_M");
  if (reps < 1) throw std::invalid_argument("reps must be at least 1");
  if (workers < 0) throw std::invalid_argument("workers must be nonnegative");
  if (times.empty()) throw std::invalid_argument("at least one recording time is needed");
  for (std::int64_t t : times) {
    if (t < 0) throw std::invalid_argument("recording times must be nonnegative");
  }
  std::sort(times.begin(), times.end());
  times.erase(std::unique(times.begin(), times.end()), times.end());
  if (statistics.empty()) throw std::invalid_argument("no statistics requested");
  if (f == 0 && g == 0) {
    if (auto params = b.AsTwoStep()) {
      f = params->f;
      g = params->g;
    }
  }
  if (g < 0 || f < g || f > b.n()) throw std::invalid_argument("need 0 <= g <= f <= n");
  if (start.empty()) start = Identity(b.n());
  if (!IsMember(b, start)) throw std::invalid_argument("start state is not in S_M");
}

const StatisticSummary& StatisticSeries::Get(Statistic statistic, std::int64_t t) const {
  for (std::size_t s = 0; s < statistics.size(); ++s) {
    if (statistics[s] != statistic) continue;
    for (std::size_t k = 0; k < times.size(); ++k) {
      if (times[k] == t) return rows[s][k];
    }
  }
  throw std::out_of_range("statistic " + ToString(statistic) + " not recorded at t=" +
                          std::to_string(t));
}

void StatisticSeries::WriteCsv(std::ostream& out) const {
  out << "t,statistic,mean,ci99,variance,count\n";
  for (std::size_t k = 0; k < times.size(); ++k) {
    for (std::size_t s = 0; s < statistics.size(); ++s) {
      const StatisticSummary& r = rows[s][k];
      out << r.t << ',' << ToString(r.statistic) << ',' << rtwalk::ToString(r.mean) << ','
          << rtwalk::ToString(r.ci99) << ',' << rtwalk::ToString(r.variance) << ',' << r.count
          << '\n';
    }
  }
}

namespace {

constexpr std::int64_t kBlockSize = 256;

// Integer sums per (statistic, time).
struct Sums {
  std::vector<std::int64_t> sum;
  std::vector<std::int64_t> sum_sq;
};

class Trajectory {
 public:
  Trajectory(const SimulationConfig& config, const Walker& walker)
      : config_(config), walker_(walker), touched_(config.g, false) {}

  void Run(std::uint64_t index, Sums& sums) {
    std::mt19937_64 rng = TrajectoryRng(config_.seed, index);
    Permutation sigma = config_.start;
    int pos1 = static_cast<int>(std::find(sigma.begin(), sigma.end(), 1) - sigma.begin()) + 1;
    std::fill(touched_.begin(), touched_.end(), false);
    column_used_ = false;
    touches_ = 0;
    distinct_ = 0;

    const bool stop_after_column =
        config_.statistics.size() == 1 &&
        config_.statistics.front() == Statistic::kFirstColumnUnused;
    std::int64_t t = 0;
    for (std::size_t k = 0; k < config_.times.size(); ++k) {
      const std::int64_t target = config_.times[k];
      while (t < target && !(stop_after_column && column_used_)) {
        const StepOutcome step = walker_.Step(sigma, rng);
        ++t;
        if (step.i == pos1 || step.j == pos1) column_used_ = true;
        if (step.i != step.j) {
          if (sigma[step.i - 1] == 1) pos1 = step.i;
          if (sigma[step.j - 1] == 1) pos1 = step.j;
        }
        Collect(step.i, step.j);
        Collect(step.j, step.i);
      }
      Record(sigma, k, sums);
    }
  }

 private:
  // A coupon: small row `a` drawn together with a row `other` <= f.
  void Collect(int a, int other) {
    if (a > config_.g || other > config_.f) return;
    ++touches_;
    if (!touched_[a - 1]) {
      touched_[a - 1] = true;
      ++distinct_;
    }
  }

  void Record(const Permutation& sigma, std::size_t k, Sums& sums) const {
    std::int64_t fixed = 0;
    for (int i = 1; i <= config_.g; ++i) fixed += sigma[i - 1] == i;
    const std::size_t times = config_.times.size();
    for (std::size_t s = 0; s < config_.statistics.size(); ++s) {
      std::int64_t v = 0;
      switch (config_.statistics[s]) {
        case Statistic::kSmallFixedPoints:
          v = fixed;
          break;
        case Statistic::kInA:
          v = fixed > 0;
          break;
        case Statistic::kFirstRowFixed:
          v = sigma[0] == 1;
          break;
        case Statistic::kFirstColumnUnused:
          v = !column_used_;
          break;
        case Statistic::kSmallRowTouches:
          v = touches_;
          break;
        case Statistic::kSmallRowsTouched:
          v = distinct_;
          break;
      }
      sums.sum[s * times + k] += v;
      sums.sum_sq[s * times + k] += v * v;
    }
  }

  const SimulationConfig& config_;
  const Walker& walker_;
  std::vector<bool> touched_;
  bool column_used_ = false;
  std::int64_t touches_ = 0;
  std::int64_t distinct_ = 0;
};

}  // namespace

StatisticSeries RunStatistics(SimulationConfig config) {
  config.Normalize();
  const Walker walker(config.b, config.rule);
  const std::size_t cells = config.statistics.size() * config.times.size();
  const std::int64_t blocks = (config.reps + kBlockSize - 1) / kBlockSize;

  std::vector<Sums> block_sums(blocks, Sums{std::vector<std::int64_t>(cells, 0),
                                            std::vector<std::int64_t>(cells, 0)});
  std::atomic<std::int64_t> next_block{0};
  auto work = [&]() {
    Trajectory trajectory(config, walker);
    for (std::int64_t blk = next_block++; blk < blocks; blk = next_block++) {
      const std::int64_t end = std::min(config.reps, (blk + 1) * kBlockSize);
      for (std::int64_t r = blk * kBlockSize; r < end; ++r) {
        trajectory.Run(static_cast<std::uint64_t>(r), block_sums[blk]);
      }
    }
  };
  int workers = config.workers > 0 ? config.workers
                                   : static_cast<int>(std::thread::hardware_concurrency());
  workers = static_cast<int>(std::clamp<std::int64_t>(workers, 1, blocks));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    for (int w = 0; w < workers; ++w) pool.emplace_back(work);
    for (std::thread& th : pool) th.join();
  }

  // Blocks merge in index order; integer sums make this exact.
  std::vector<BigInt> sum(cells), sum_sq(cells);
  for (const Sums& s : block_sums) {
    for (std::size_t c = 0; c < cells; ++c) {
      sum[c] += s.sum[c];
      sum_sq[c] += s.sum_sq[c];
    }
  }

  StatisticSeries series;
  series.times = config.times;
  series.statistics = config.statistics;
  const std::int64_t count = config.reps;
  for (std::size_t s = 0; s < config.statistics.size(); ++s) {
    std::vector<StatisticSummary> row;
    for (std::size_t k = 0; k < config.times.size(); ++k) {
      const std::size_t c = s * config.times.size() + k;
      StatisticSummary summary;
      summary.statistic = config.statistics[s];
      summary.t = config.times[k];
      summary.count = count;
      summary.mean = ToReal(Rational(sum[c], count));
      if (count > 1) {
        const Rational centered = Rational(sum_sq[c]) - Rational(sum[c] * sum[c], count);
        summary.variance = ToReal(centered / (count - 1));
      }
      summary.ci99 = Real(kZ99) * bmp::sqrt(summary.variance / count);
      row.push_back(summary);
    }
    series.rows.push_back(std::move(row));
  }
  return series;
}

CouponPrediction CouponCollectorPrediction(const TwoStepParams& params, std::int64_t t) {
  params.Validate();
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  const Real den = Real(TwoStepDenominator(params));
  const Real fg = Real(params.f) * Real(params.g);
  return {Real(t) * 2 * fg / den, Real(t) * 4 * fg / den};
}

}  // namespace rtwalk
