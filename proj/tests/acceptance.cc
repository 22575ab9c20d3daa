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
// Acceptance run: one PASS/FAIL line per criterion AC1..AC10.
//
//   rtwalk_acceptance [--only AC3,AC8] [--expect-fail AC4,AC7]
//
// Exit status is 0 when the set of failing labels equals the --expect-fail
// set (empty by default), so an unexpected pass is reported too.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "oracles.h"
#include "rtwalk/bounds.h"
#include "rtwalk/mixing.h"
#include "rtwalk/montecarlo.h"
#include "rtwalk/restriction.h"
#include "rtwalk/spectrum.h"
#include "rtwalk/tableaux.h"

namespace rtwalk {
namespace {

namespace bmp = boost::multiprecision;

// Pinned tolerances and limits.
constexpr double kAc1Seconds = 5;
constexpr double kAc2Seconds = 60;
constexpr double kAc3Seconds = 60;
constexpr double kAc6Seconds = 120;
constexpr double kAc8Seconds = 60;  // per evaluation
constexpr double kAc9Seconds = 120;  // all three parts
constexpr double kAc9Sigmas = 4;
constexpr std::int64_t kAc9Samples = 100'000;
constexpr double kAc10Tolerance = 1e-3;
constexpr std::uint64_t kSeed = 20260101;

struct Outcome {
  bool pass = false;
  std::string detail;
};

Outcome Pass(std::string detail = "") { return {true, std::move(detail)}; }
Outcome Fail(std::string detail) { return {false, std::move(detail)}; }

std::string Num(double x, int digits = 6) {
  std::ostringstream os;
  os << std::setprecision(digits) << x;
  return os.str();
}

std::vector<TwoStepParams> TwoStepInstances(int max_n) {
  std::vector<TwoStepParams> out;
  for (int n = 1; n <= max_n; ++n) {
    for (int f = 1; f <= n; ++f) {
      for (int g = 1; g <= f; ++g) out.push_back({n, f, g});
    }
  }
  return out;
}

// --- AC1 --------------------------------------------------------------------

Outcome Ac1() {
  const auto b = RestrictionVector::Create({1, 1, 1, 2, 3});
  const auto m = TransitionMatrix::Build(b, ChainKind::kUniform);
  const Rational id = ReturnProbability(m, ParsePermutation("12345"), 6);
  const Rational other = ReturnProbability(m, ParsePermutation("45123"), 6);
  // Dense brute-force cross-check.
  const auto states = oracle::States(b.values());
  const auto p = oracle::Transition(b.values(), states, false);
  auto at = [&](const std::vector<int>& s) {
    const auto x = std::find(states.begin(), states.end(), s) - states.begin();
    std::vector<Rational> v(states.size(), 0);
    v[x] = 1;
    for (int t = 0; t < 6; ++t) v = oracle::RowTimes(v, p);
    return v[x];
  };
  const bool ok = id == Rational(5207, 117649) && other == Rational(5287, 117649) &&
                  at({1, 2, 3, 4, 5}) == id && at({4, 5, 1, 2, 3}) == other;
  std::string detail = "P^6(12345,12345)=" + ToString(id) + " P^6(45123,45123)=" + ToString(other);
  return {ok, detail};
}

// --- AC2 --------------------------------------------------------------------

Outcome Ac2() {
  std::vector<RestrictionVector> vectors;
  for (int n = 1; n <= 6; ++n) {
    for (auto& b : AllNonemptyVectors(n)) vectors.push_back(b);
  }
  for (const auto& p : TwoStepInstances(8)) vectors.push_back(TwoStepVector(p));
  for (const auto& b : vectors) {
    BigInt total = 0;
    for (const auto& alpha : EnumerateBPartitions(b)) total += Dimension(alpha);
    if (total != CountPermutations(b)) {
      return Fail("b=" + b.ToString() + ": sum of dims " + total.str() + " vs " +
                  CountPermutations(b).str());
    }
  }
  return Pass(std::to_string(vectors.size()) + " vectors");
}

// --- AC3 --------------------------------------------------------------------

Outcome Ac3() {
  int count = 0;
  for (int n = 1; n <= 6; ++n) {
    for (const auto& b : AllNonemptyVectors(n)) {
      const auto states = oracle::States(b.values());
      const auto a = oracle::Adjacency(b.values(), states);
      const auto a2 = oracle::Multiply(a, a);
      const std::size_t m = states.size();
      std::int64_t tr[5] = {0, 0, 0, 0, 0};
      for (std::size_t x = 0; x < m; ++x) {
        tr[1] += a[x][x];
        tr[2] += a2[x][x];
        for (std::size_t y = 0; y < m; ++y) {
          tr[3] += a2[x][y] * a[y][x];
          tr[4] += a2[x][y] * a2[y][x];
        }
      }
      const Spectrum s = FullSpectrum(b);
      for (int k = 1; k <= 4; ++k) {
        BigInt moment = 0;
        for (const auto& line : s.lines) moment += line.dim * bmp::pow(BigInt(line.eig_u), k);
        if (moment != tr[k]) {
          return Fail("b=" + b.ToString() + " k=" + std::to_string(k) + ": " + moment.str() +
                      " vs " + std::to_string(tr[k]));
        }
      }
      ++count;
    }
  }
  return Pass(std::to_string(count) + " vectors, k=1..4");
}

// --- AC4 --------------------------------------------------------------------

// Empty string when the lead-term statements hold for p.
std::string LeadTermMismatch(const TwoStepParams& p) {
  const Spectrum s = FullSpectrum(TwoStepVector(p));
  std::map<std::int64_t, BigInt> dims;
  for (const auto& line : s.lines) dims[line.eig_u] += line.dim;
  std::ostringstream why;
  if (dims.rbegin()->first != s.delta || dims.rbegin()->second != 1) {
    why << "top eigenvalue/dim " << dims.rbegin()->first << "/" << dims.rbegin()->second << "; ";
  }
  const std::int64_t expected = std::max(s.delta - p.f, s.delta - (p.n - p.g));
  if (s.SecondEigenvalue() != expected) {
    why << "second " << s.SecondEigenvalue().value_or(0) << " vs " << expected << "; ";
  }
  const BigInt d1 = Dimension(Alpha1(p));
  if (d1 != (p.f - 1) * p.g) why << "dim alpha1 " << d1 << " vs " << (p.f - 1) * p.g << "; ";
  if (p.f == p.n) {
    why << "alpha2 undefined for f = n; ";
  } else {
    const BigInt d2 = Dimension(Alpha2(p));
    const std::int64_t e2 = std::int64_t(p.n - p.g - 1) * (p.n - p.f);
    if (d2 != e2) why << "dim alpha2 " << d2 << " vs " << e2 << "; ";
  }
  std::string out = why.str();
  if (out.size() >= 2) out.resize(out.size() - 2);
  return out;
}

Outcome Ac4(bool scoped) {
  int checked = 0, failing = 0, degenerate = 0;
  std::string first;
  for (const auto& p : TwoStepInstances(8)) {
    if (p.f < 2 || p.n - p.g < 2) continue;
    if (scoped && !(p.g < p.f && p.f < p.n)) continue;
    ++checked;
    const std::string why = LeadTermMismatch(p);
    if (!why.empty()) {
      if (failing++ == 0) first = p.ToString() + ": " + why;
      if (p.f == p.g || p.f == p.n) ++degenerate;
    }
  }
  if (failing == 0) return Pass(std::to_string(checked) + " instances");
  return Fail(std::to_string(failing) + "/" + std::to_string(checked) +
              " instances break the closed forms (" + std::to_string(degenerate) +
              " with f = g or f = n); first " + first);
}

// --- AC5 --------------------------------------------------------------------

Outcome Ac5() {
  int pairs = 0;
  for (const auto& p : TwoStepInstances(6)) {
    const auto b = TwoStepVector(p);
    const Spectrum s = FullSpectrum(b);
    const auto m = TransitionMatrix::Build(b, ChainKind::kLazy);
    ExactDistribution d(m, Identity(p.n));
    for (int t = 0; t <= 10; ++t) {
      if (t) d.Step();
      if (ChiSquaredSqFromSpectrum(s, t) != d.ChiSquaredSqToUniform()) {
        return Fail(p.ToString() + " t=" + std::to_string(t));
      }
      ++pairs;
    }
  }
  return Pass(std::to_string(pairs) + " (instance, t) pairs");
}

// --- AC6 --------------------------------------------------------------------

Outcome Ac6() {
  for (int l = 0; l <= 10; ++l) {
    BigInt squares = 0;
    for (const auto& lambda : EnumeratePartitions(l)) {
      const BigInt full = SytCount(lambda);
      squares += full * full;
      for (int m = 0; m <= l; ++m) {
        BigInt sum = 0;
        for (const auto& mu : EnumerateSubpartitions(lambda, m)) {
          sum += SytCount(SkewShape(lambda, mu)) * SytCount(mu);
        }
        if (sum != full) return Fail("branching at " + lambda.ToString());
      }
    }
    if (squares != oracle::Fact(l)) return Fail("sum of squares at " + std::to_string(l));
  }
  std::int64_t chains = 0;
  for (int n = 1; n <= 7; ++n) {
    for (const auto& b : AllNonemptyVectors(n)) {
      for (const auto& alpha : EnumerateBPartitions(b)) {
        const BPartition t = TransposeChain(alpha);
        if (EigenvalueU(t) != -EigenvalueU(alpha) || Dimension(t) != Dimension(alpha)) {
          return Fail("pairing at b=" + b.ToString() + " " + alpha.ToString());
        }
        ++chains;
      }
    }
  }
  for (int l = 0; l <= 12; ++l) {
    std::map<int, std::int64_t> best;
    for (const auto& lambda : EnumeratePartitions(l)) {
      const int i = lambda.RemainderSize();
      const std::int64_t c = lambda.ContentSum();
      best[i] = best.contains(i) ? std::max(best[i], c) : c;
      if (c > MaxContent(l, i)) return Fail("content bound at " + lambda.ToString());
      if (2 * i >= l && Rational(c) > MaxContentLargeRemainder(l, i)) {
        return Fail("large-remainder content bound at " + lambda.ToString());
      }
      for (int m = 0; m <= l; ++m) {
        for (const auto& mu : EnumerateSubpartitions(lambda, m)) {
          if (c - mu.ContentSum() > MaxContentSkew(l, m, i, mu.RemainderSize())) {
            return Fail("skew content bound at " + lambda.ToString() + "/" + mu.ToString());
          }
        }
      }
    }
    for (const auto& [i, c] : best) {
      if (2 * i <= l && c != MaxContent(l, i)) {
        return Fail("content bound not attained at l=" + std::to_string(l));
      }
    }
  }
  return Pass("pairing on " + std::to_string(chains) + " chains");
}

// --- AC7 --------------------------------------------------------------------

Outcome Ac7Upper() {
  int cells_checked = 0;
  for (const auto& p : TwoStepInstances(7)) {
    if (p.f == p.n) continue;  // one class; no remainder cells
    const Spectrum s = FullSpectrum(TwoStepVector(p));
    std::map<RemainderTriple, std::vector<const SpectralLine*>> cells;
    for (const auto& line : s.lines) cells[ComputeRemainderTriple(line.chain, p)].push_back(&line);
    for (int t = 0; t <= 10; ++t) {
      Rational total = 0;
      for (const auto& [cell, lines] : cells) {
        if (cell == RemainderTriple{} || IsLargeRemainderCell(cell, p)) continue;
        Rational positive = 0;
        for (const auto* line : lines) {
          if (line->eig_p >= 0) positive += Rational(line->dim) * Pow(line->eig_p, 2 * t);
        }
        if (positive > UpperBoundCellTerm(cell, p, t)) {
          return Fail(p.ToString() + " t=" + std::to_string(t) + " cell term");
        }
        total += positive;
        ++cells_checked;
      }
      if (ChiUpperBoundSqExact(p, t) < 2 * total) {
        return Fail(p.ToString() + " t=" + std::to_string(t) + " evaluator");
      }
    }
  }
  return Pass(std::to_string(cells_checked) + " (cell, t) terms");
}

Outcome Ac7Lower(bool scoped) {
  int checked = 0, failing = 0, degenerate = 0;
  std::string first;
  for (const auto& p : TwoStepInstances(7)) {
    if (p.f < 2) continue;  // the lower term is not defined
    if (scoped && p.g == p.f) continue;
    const Spectrum s = FullSpectrum(TwoStepVector(p));
    for (int t = 0; t <= 10; ++t) {
      ++checked;
      const Rational lower = ChiLowerTermExact(p, t);
      const Rational chi_sq = ChiSquaredSqFromSpectrum(s, t);
      if (lower <= chi_sq) continue;
      if (p.f == p.g) ++degenerate;
      if (failing++ == 0) {
        first = p.ToString() + " t=" + std::to_string(t) + ": lower term " + ToString(lower) +
                " > chi^2 " + ToString(chi_sq);
      }
    }
  }
  if (failing == 0) return Pass(std::to_string(checked) + " (instance, t) pairs");
  return Fail(std::to_string(failing) + "/" + std::to_string(checked) +
              " pairs violate (" + std::to_string(degenerate) + " with f = g); first " + first);
}

// --- AC8 --------------------------------------------------------------------

Outcome Ac8() {
  const TwoStepParams p{2000, 40, 20};
  using Clock = std::chrono::steady_clock;
  auto start = Clock::now();
  const auto lo = static_cast<std::int64_t>(bmp::ceil(CutoffTimes(p, 4).t_chi_lower));
  const double lower = static_cast<double>(bmp::sqrt(ChiLowerTerm(p, lo)));
  const double lower_s = std::chrono::duration<double>(Clock::now() - start).count();
  start = Clock::now();
  const auto up = static_cast<std::int64_t>(bmp::ceil(CutoffTimes(p, 12).t_chi_upper));
  const double upper = static_cast<double>(ChiUpperBoundEvaluator(p, up));
  const double upper_s = std::chrono::duration<double>(Clock::now() - start).count();
  const double high = std::exp(2.0) / 2, low = 4 * std::exp(-6.0);
  const bool ok = lower > high && upper < low && lower_s < kAc8Seconds && upper_s < kAc8Seconds;
  return {ok, "chi at t=" + std::to_string(lo) + " >= " + Num(lower) + " (need > " + Num(high) +
                  "), evaluator at t=" + std::to_string(up) + " = " + Num(upper) +
                  " (need < " + Num(low) + "); " + Num(lower_s, 3) + " s + " +
                  Num(upper_s, 3) + " s"};
}

// --- AC9 --------------------------------------------------------------------

std::string Ac9OneStep() {
  const std::vector<RestrictionVector> instances{RestrictionVector::Create({1, 1, 1, 3, 3}),
                                                 RestrictionVector::Create({1, 1, 1, 2, 4}),
                                                 RestrictionVector::Create({1, 1, 3, 4, 5}),
                                                 RestrictionVector::Unrestricted(5)};
  for (const auto& b : instances) {
    const auto m = TransitionMatrix::Build(b, ChainKind::kLazy);
    const auto exact = ExactDistributionAt(m, Identity(b.n()), 1).Probabilities();
    for (auto rule : {StepRule::kDirect, StepRule::kRejection}) {
      const Walker walker(b, rule);
      std::vector<std::int64_t> counts(m.size(), 0);
      for (std::int64_t r = 0; r < kAc9Samples; ++r) {
        auto rng = TrajectoryRng(kSeed, r);
        Permutation sigma = Identity(b.n());
        walker.Step(sigma, rng);
        ++counts[m.IndexOf(sigma)];
      }
      for (std::int64_t x = 0; x < m.size(); ++x) {
        const double p = static_cast<double>(ToReal(exact[x]));
        const double sd = std::sqrt(p * (1 - p) / kAc9Samples);
        const double freq = double(counts[x]) / kAc9Samples;
        if (std::abs(freq - p) > kAc9Sigmas * sd) {
          return "(a) b=" + b.ToString() + " " + ToString(rule) + " state " +
                 FormatPermutation(m.states()[x]) + ": " + Num(freq) + " vs " + Num(p);
        }
      }
    }
  }
  return "";
}

Outcome Ac9() {
  const auto start = std::chrono::steady_clock::now();
  if (auto why = Ac9OneStep(); !why.empty()) return Fail(why);

  SimulationConfig in_a;
  in_a.b = TwoStepVector({5, 3, 2});
  in_a.times = {200};
  in_a.reps = kAc9Samples;
  in_a.seed = kSeed;
  in_a.statistics = {Statistic::kInA};
  const auto a = RunStatistics(in_a).Get(Statistic::kInA, 200);
  const double a_mean = static_cast<double>(a.mean), a_ci = static_cast<double>(a.ci99);

  const TwoStepParams fast{300, 10, 1};
  const auto t = static_cast<std::int64_t>(bmp::floor(CutoffTimes(fast, 0).t_fast_mix));
  SimulationConfig tail;
  tail.b = TwoStepVector(fast);
  tail.times = {t};
  tail.reps = kAc9Samples;
  tail.seed = kSeed;
  tail.statistics = {Statistic::kFirstColumnUnused};
  const auto c = RunStatistics(tail).Get(Statistic::kFirstColumnUnused, t);
  const double c_mean = static_cast<double>(c.mean), c_ci = static_cast<double>(c.ci99);

  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const bool ok = std::abs(a_mean - 0.5) <= a_ci && std::abs(c_mean - std::exp(-3.0)) <= c_ci &&
                  seconds < kAc9Seconds;
  return {ok, "(a) one-step laws within 4 sd; (b) P(A_n) = " + Num(a_mean) + " +- " +
                  Num(a_ci, 3) + " vs 1/2; (c) P(T > " + std::to_string(t) + ") = " +
                  Num(c_mean) + " +- " + Num(c_ci, 3) + " vs e^-3 = " + Num(std::exp(-3.0)) +
                  "; " + Num(seconds, 3) + " s"};
}

// --- AC10 -------------------------------------------------------------------

Outcome Ac10() {
  const TwoStepParams p{300, 10, 1};
  const auto k = static_cast<std::int64_t>(bmp::ceil(2 * CutoffTimes(p, 0).t_fast_mix));
  const double value = static_cast<double>(FastMixNoCutoffLower(p, k));
  const double target = std::exp(-6.0) - 1.0 / p.f;
  if (std::abs(value - target) > kAc10Tolerance) {
    return Fail("bound at k=" + std::to_string(k) + " = " + Num(value) + " vs " + Num(target));
  }
  const TwoStepParams small{5, 2, 1};
  const auto m = TransitionMatrix::Build(TwoStepVector(small), ChainKind::kLazy);
  ExactDistribution d(m, Identity(5));
  for (int j = 0; j <= 10; ++j) {
    if (j) d.Step();
    if (FastMixNoCutoffLowerExact(small, j) > d.TvToUniform()) {
      return Fail("bound exceeds exact TV at k=" + std::to_string(j));
    }
  }
  return Pass("bound at k=" + std::to_string(k) + " = " + Num(value) + ", target " +
              Num(target) + "; below exact TV for k <= 10");
}

// --- driver -----------------------------------------------------------------

struct Criterion {
  std::string label;
  std::function<Outcome()> run;
  double limit_seconds = 0;  // 0: no limit
};

std::set<std::string> ParseLabels(const std::string& text) {
  std::set<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (!item.empty()) out.insert(item);
  }
  return out;
}

int Main(int argc, char** argv) {
  std::set<std::string> expected_fail, only;
  for (int i = 1; i < argc; ++i) {
    const std::string arg = argv[i];
    if ((arg == "--expect-fail" || arg == "--only") && i + 1 < argc) {
      (arg == "--only" ? only : expected_fail) = ParseLabels(argv[++i]);
    } else {
      std::cerr << "usage: " << argv[0] << " [--only AC1,...] [--expect-fail AC4,...]\n";
      return 2;
    }
  }
  const std::vector<Criterion> criteria{
      {"AC1", Ac1, kAc1Seconds},
      {"AC2", Ac2, kAc2Seconds},
      {"AC3", Ac3, kAc3Seconds},
      {"AC4", [] { return Ac4(false); }},
      {"AC4[g<f<n]", [] { return Ac4(true); }},
      {"AC5", Ac5},
      {"AC6", Ac6, kAc6Seconds},
      {"AC7",
       [] {
         Outcome upper = Ac7Upper();
         if (!upper.pass) return Fail("upper: " + upper.detail);
         Outcome lower = Ac7Lower(false);
         return Outcome{lower.pass, "upper: " + upper.detail + "; lower: " + lower.detail};
       }},
      {"AC7[g<f]",
       [] {
         Outcome upper = Ac7Upper();
         if (!upper.pass) return Fail("upper: " + upper.detail);
         Outcome lower = Ac7Lower(true);
         return Outcome{lower.pass, "upper: " + upper.detail + "; lower: " + lower.detail};
       }},
      {"AC8", Ac8},
      {"AC9", Ac9},
      {"AC10", Ac10},
  };

  std::set<std::string> failed;
  for (const auto& c : criteria) {
    const std::string base = c.label.substr(0, c.label.find('['));
    if (!only.empty() && !only.contains(base) && !only.contains(c.label)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = Fail(std::string("exception: ") + e.what());
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.limit_seconds > 0 && seconds >= c.limit_seconds) {
      o.pass = false;
      o.detail += "; runtime " + Num(seconds, 3) + " s exceeds " + Num(c.limit_seconds) + " s";
    }
    std::cout << c.label << ' ' << (o.pass ? "PASS" : "FAIL") << " [" << std::fixed
              << std::setprecision(2) << seconds << " s] " << o.detail << std::endl;
    std::cout.unsetf(std::ios::floatfield);
    if (!o.pass) failed.insert(c.label);
  }

  for (const auto& label : expected_fail) {
    if (!failed.contains(label) && (only.empty() || only.contains(label))) {
      std::cout << "unexpected pass: " << label << '\n';
    }
  }
  bool ok = true;
  for (const auto& label : failed) {
    if (!expected_fail.contains(label)) {
      std::cout << "unexpected failure: " << label << '\n';
      ok = false;
    }
  }
  for (const auto& label : expected_fail) {
    if (!failed.contains(label) && (only.empty() || only.contains(label))) ok = false;
  }
  return ok ? 0 : 1;
}

}  // namespace
}  // namespace rtwalk

int main(int argc, char** argv) { return rtwalk::Main(argc, argv); }
