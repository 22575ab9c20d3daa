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
#include "rtwalk/mixing.h"

#include <algorithm>
#include <cmath>
#include <functional>
#include <map>
#include <numeric>

namespace rtwalk {

namespace bmp = boost::multiprecision;

std::string ToString(ChainKind kind) {
  return kind == ChainKind::kLazy ? "lazy" : "uniform";
}

ChainKind ParseChainKind(const std::string& text) {
  if (text == "lazy") return ChainKind::kLazy;
  if (text == "uniform") return ChainKind::kUniform;
  throw std::invalid_argument("unknown chain kind '" + text + "' (expected lazy or uniform)");
}

TransitionMatrix TransitionMatrix::Build(const RestrictionVector& b, ChainKind kind,
                                         std::int64_t cap) {
  if (!b.IsNonempty()) throw EmptyStateSpace("no transition matrix for an empty S_M");
  const BigInt count = CountPermutations(b);
  if (count > cap) {
    throw CapExceeded("|S_M| = " + count.str() + " exceeds the matrix cap " +
                      std::to_string(cap));
  }
  TransitionMatrix m(b, kind);
  m.states_ = Enumerate(b, cap);
  const std::int64_t delta = Degree(b);
  if (kind == ChainKind::kLazy) {
    m.hold_weight_ = b.n();
    m.edge_weight_ = 2;
    m.denominator_ = b.n() + 2 * delta;
  } else if (delta == 0) {
    m.hold_weight_ = 1;
    m.edge_weight_ = 1;
    m.denominator_ = 1;
  } else {
    m.hold_weight_ = 0;
    m.edge_weight_ = 1;
    m.denominator_ = delta;
  }
  m.adjacency_.resize(m.states_.size());
  for (std::size_t x = 0; x < m.states_.size(); ++x) {
    for (const Permutation& y : Neighbors(b, m.states_[x])) {
      m.adjacency_[x].push_back(static_cast<std::int32_t>(m.IndexOf(y)));
    }
    std::sort(m.adjacency_[x].begin(), m.adjacency_[x].end());
  }
  return m;
}

std::int64_t TransitionMatrix::IndexOf(const Permutation& sigma) const {
  auto it = std::lower_bound(states_.begin(), states_.end(), sigma);
  if (it == states_.end() || *it != sigma) {
    throw std::out_of_range(FormatPermutation(sigma) + " is not in S_M");
  }
  return it - states_.begin();
}

Rational TransitionMatrix::Entry(std::int64_t row, std::int64_t col) const {
  if (row == col) return Rational(hold_weight_, denominator_);
  const auto& adj = adjacency_.at(row);
  if (std::binary_search(adj.begin(), adj.end(), static_cast<std::int32_t>(col))) {
    return Rational(edge_weight_, denominator_);
  }
  return 0;
}

std::vector<std::vector<Rational>> TransitionMatrix::Dense() const {
  std::vector<std::vector<Rational>> dense(size(), std::vector<Rational>(size()));
  for (std::int64_t x = 0; x < size(); ++x) {
    for (std::int64_t y = 0; y < size(); ++y) dense[x][y] = Entry(x, y);
  }
  return dense;
}

ExactDistribution::ExactDistribution(const TransitionMatrix& matrix, const Permutation& start)
    : matrix_(&matrix), weights_(matrix.size()) {
  weights_[matrix.IndexOf(start)] = 1;
}

void ExactDistribution::Step() {
  // P is symmetric, so the row update is the same as the column update.
  const auto& adj = matrix_->adjacency();
  const std::int64_t hold = matrix_->hold_weight();
  const std::int64_t edge = matrix_->edge_weight();
  std::vector<BigInt> next(weights_.size());
  for (std::size_t x = 0; x < weights_.size(); ++x) {
    BigInt acc = 0;
    for (std::int32_t y : adj[x]) acc += weights_[y];
    next[x] = hold * weights_[x] + edge * acc;
  }
  weights_ = std::move(next);
  denominator_ *= matrix_->denominator();
  ++t_;
}

void ExactDistribution::Advance(std::int64_t steps) {
  for (std::int64_t s = 0; s < steps; ++s) Step();
}

Rational ExactDistribution::At(std::int64_t index) const {
  return Rational(weights_.at(index), denominator_);
}

Rational ExactDistribution::At(const Permutation& sigma) const {
  return At(matrix_->IndexOf(sigma));
}

std::vector<Rational> ExactDistribution::Probabilities() const {
  std::vector<Rational> p;
  p.reserve(weights_.size());
  for (const BigInt& w : weights_) p.emplace_back(w, denominator_);
  return p;
}

Rational ExactDistribution::TvToUniform() const {
  const BigInt m = static_cast<std::int64_t>(weights_.size());
  BigInt total = 0;
  for (const BigInt& w : weights_) total += bmp::abs(m * w - denominator_);
  return Rational(total, 2 * m * denominator_);
}

Rational ExactDistribution::ChiSquaredSqToUniform() const {
  const BigInt m = static_cast<std::int64_t>(weights_.size());
  BigInt squares = 0;
  for (const BigInt& w : weights_) squares += w * w;
  return Rational(m * squares, denominator_ * denominator_) - 1;
}

ExactDistribution ExactDistributionAt(const TransitionMatrix& matrix, const Permutation& start,
                                      std::int64_t t) {
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  ExactDistribution d(matrix, start);
  d.Advance(t);
  return d;
}

Rational ReturnProbability(const TransitionMatrix& matrix, const Permutation& sigma,
                           std::int64_t t) {
  return ExactDistributionAt(matrix, sigma, t).At(sigma);
}

Real TvDistance(const std::vector<Real>& mu, const std::vector<Real>& pi) {
  if (mu.size() != pi.size()) throw std::invalid_argument("distribution sizes differ");
  CompensatedSum sum;
  for (std::size_t x = 0; x < mu.size(); ++x) sum.Add(bmp::abs(mu[x] - pi[x]));
  return sum.value() / 2;
}

Rational TvDistance(const std::vector<Rational>& mu, const std::vector<Rational>& pi) {
  if (mu.size() != pi.size()) throw std::invalid_argument("distribution sizes differ");
  Rational sum = 0;
  for (std::size_t x = 0; x < mu.size(); ++x) sum += bmp::abs(mu[x] - pi[x]);
  return sum / 2;
}

Real ChiSquared(const std::vector<Real>& mu, const std::vector<Real>& pi) {
  if (mu.size() != pi.size()) throw std::invalid_argument("distribution sizes differ");
  CompensatedSum sum;
  for (std::size_t x = 0; x < mu.size(); ++x) {
    if (!(pi[x] > 0)) throw std::domain_error("stationary mass must be positive");
    const Real ratio = mu[x] / pi[x] - 1;
    sum.Add(ratio * ratio * pi[x]);
  }
  return bmp::sqrt(sum.value());
}

Rational ChiSquaredSq(const std::vector<Rational>& mu, const std::vector<Rational>& pi) {
  if (mu.size() != pi.size()) throw std::invalid_argument("distribution sizes differ");
  Rational sum = 0;
  for (std::size_t x = 0; x < mu.size(); ++x) {
    if (pi[x] <= 0) throw std::domain_error("stationary mass must be positive");
    const Rational ratio = mu[x] / pi[x] - 1;
    sum += ratio * ratio * pi[x];
  }
  return sum;
}

namespace {

void RequireTwoStepSpectrum(const Spectrum& spectrum) {
  if (!spectrum.b.IsTwoStep()) {
    throw std::invalid_argument("spectral chi-squared needs a two-step vector; " +
                                spectrum.b.ToString() + " is not one");
  }
}

}  // namespace

Rational ChiSquaredSqFromSpectrum(const Spectrum& spectrum, std::int64_t t) {
  RequireTwoStepSpectrum(spectrum);
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  Rational sum = 0;
  for (const MergedLine& line : spectrum.Merged()) {
    if (line.eig_u == spectrum.delta) continue;
    sum += Rational(line.dim) * Pow(line.eig_p, static_cast<unsigned>(2 * t));
  }
  return sum;
}

Real ChiSquaredFromSpectrum(const Spectrum& spectrum, std::int64_t t) {
  RequireTwoStepSpectrum(spectrum);
  if (t < 0) throw std::invalid_argument("t must be nonnegative");
  CompensatedSum sum;
  for (const MergedLine& line : spectrum.Merged()) {
    if (line.eig_u == spectrum.delta) continue;
    const Real p = ToReal(line.eig_p);
    sum.Add(ToReal(line.dim) * bmp::pow(p, Real(2 * t)));
  }
  return bmp::sqrt(sum.value());
}

ProbeResult VertexTransitivityProbe(const RestrictionVector& b, std::int64_t t_max,
                                    ChainKind kind, const std::vector<Permutation>& candidates,
                                    std::int64_t cap) {
  const TransitionMatrix matrix = TransitionMatrix::Build(b, kind, cap);
  std::vector<std::int64_t> probed;
  if (candidates.empty()) {
    probed.push_back(matrix.IndexOf(Identity(b.n())));
    for (std::int64_t x = 0; x < matrix.size(); ++x) {
      if (x != probed.front()) probed.push_back(x);
    }
  } else {
    for (const Permutation& c : candidates) probed.push_back(matrix.IndexOf(c));
  }

  // returns[p][t] = P^t(x_p, x_p)
  std::vector<std::vector<Rational>> returns(probed.size());
  for (std::size_t p = 0; p < probed.size(); ++p) {
    ExactDistribution d(matrix, matrix.states()[probed[p]]);
    for (std::int64_t t = 1; t <= t_max; ++t) {
      d.Step();
      returns[p].push_back(d.At(probed[p]));
    }
  }

  ProbeResult result;
  for (std::int64_t t = 1; t <= t_max; ++t) {
    const Rational& ref = returns[0][t - 1];
    std::optional<std::size_t> first;
    for (std::size_t p = 1; p < probed.size(); ++p) {
      if (returns[p][t - 1] == ref) continue;
      // Candidates are compared in the order given; the default order is
      // the identity followed by S_M in lexicographic order.
      if (!first) first = p;
    }
    if (first) {
      result.transitive_consistent = false;
      result.witness = ProbeWitness{matrix.states()[probed[0]], matrix.states()[probed[*first]],
                                    t, ref, returns[*first][t - 1]};
      return result;
    }
  }
  return result;
}

std::string ToString(CurveKind kind) {
  switch (kind) {
    case CurveKind::kTvExact:
      return "tv-exact";
    case CurveKind::kChiExact:
      return "chi-exact";
    case CurveKind::kChiSpectral:
      return "chi-spectral";
    case CurveKind::kChiUpperBound:
      return "chi-upper-bound";
    case CurveKind::kChiLowerTerm:
      return "chi-lower-term";
    case CurveKind::kTvLowerBound:
      return "tv-lower-bound";
    case CurveKind::kTvFastMixLower:
      return "tv-fastmix-lower";
  }
  return "unknown";
}

CurveKind ParseCurveKind(const std::string& text) {
  for (CurveKind kind : {CurveKind::kTvExact, CurveKind::kChiExact, CurveKind::kChiSpectral,
                         CurveKind::kChiUpperBound, CurveKind::kChiLowerTerm,
                         CurveKind::kTvLowerBound, CurveKind::kTvFastMixLower}) {
    if (ToString(kind) == text) return kind;
  }
  throw std::invalid_argument("unknown curve kind '" + text + "'");
}

namespace {

TwoStepParams RequireParams(const RestrictionVector& b) {
  auto params = b.AsTwoStep();
  if (!params) throw std::invalid_argument(b.ToString() + " is not a two-step vector");
  return *params;
}

std::vector<CurvePoint> ExactCurve(const SweepSpec& spec, bool tv) {
  const TransitionMatrix matrix = TransitionMatrix::Build(spec.b, spec.chain, spec.matrix_cap);
  const Permutation start = spec.start.empty() ? Identity(spec.b.n()) : spec.start;
  std::vector<std::int64_t> order(spec.t_grid.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::int64_t a, std::int64_t b) { return spec.t_grid[a] < spec.t_grid[b]; });
  std::vector<CurvePoint> points(spec.t_grid.size());
  ExactDistribution d(matrix, start);
  for (std::int64_t idx : order) {
    const std::int64_t t = spec.t_grid[idx];
    if (t < 0) throw std::invalid_argument("t must be nonnegative");
    d.Advance(t - d.t());
    const Real value = tv ? ToReal(d.TvToUniform()) : bmp::sqrt(ToReal(d.ChiSquaredSqToUniform()));
    points[idx] = {t, value};
  }
  return points;
}

std::vector<CurvePoint> Pointwise(const SweepSpec& spec,
                                  const std::function<Real(std::int64_t)>& eval) {
  std::vector<CurvePoint> points;
  for (std::int64_t t : spec.t_grid) {
    if (t < 0) throw std::invalid_argument("t must be nonnegative");
    points.push_back({t, eval(t)});
  }
  return points;
}

std::vector<CurvePoint> BuildCurve(const SweepSpec& spec, CurveKind kind) {
  switch (kind) {
    case CurveKind::kTvExact:
      return ExactCurve(spec, true);
    case CurveKind::kChiExact:
      return ExactCurve(spec, false);
    case CurveKind::kChiSpectral: {
      if (spec.chain != ChainKind::kLazy) {
        throw std::invalid_argument("chi-spectral uses the lazy chain");
      }
      const Spectrum spectrum = FullSpectrum(spec.b, spec.chain_cap);
      return Pointwise(spec, [&](std::int64_t t) { return ChiSquaredFromSpectrum(spectrum, t); });
    }
    case CurveKind::kChiUpperBound: {
      const TwoStepParams params = RequireParams(spec.b);
      return Pointwise(spec, [&](std::int64_t t) {
        return ChiUpperBoundEvaluator(params, t, spec.upper_bound);
      });
    }
    case CurveKind::kChiLowerTerm: {
      const TwoStepParams params = RequireParams(spec.b);
      return Pointwise(spec,
                       [&](std::int64_t t) { return bmp::sqrt(ChiLowerTerm(params, t)); });
    }
    case CurveKind::kTvLowerBound: {
      const TwoStepParams params = RequireParams(spec.b);
      const Real f = Real(params.f), g = Real(params.g);
      const Real den = Real(TwoStepDenominator(params));
      return Pointwise(spec, [&](std::int64_t t) {
        // Invert t = N (log f + log g)/(4f) - c N/(4f) for c.
        const Real c = bmp::log(f) + bmp::log(g) - 4 * f * Real(t) / den;
        const Real v = TvLowerBoundValue(g / f, c);
        return v > 0 ? v : Real(0);
      });
    }
    case CurveKind::kTvFastMixLower: {
      const TwoStepParams params = RequireParams(spec.b);
      return Pointwise(spec, [&](std::int64_t t) {
        const Real v = FastMixNoCutoffLower(params, t);
        return v > 0 ? v : Real(0);
      });
    }
  }
  throw std::logic_error("unhandled curve kind");
}

}  // namespace

std::vector<DistanceCurve> Sweep(const SweepSpec& spec) {
  std::vector<DistanceCurve> curves;
  for (CurveKind kind : spec.kinds) {
    DistanceCurve curve;
    curve.kind = kind;
    try {
      curve.points = BuildCurve(spec, kind);
    } catch (const CapExceeded& e) {
      curve.points.clear();
      curve.error = e.what();
      curve.cap_exceeded = true;
    } catch (const std::exception& e) {
      curve.points.clear();
      curve.error = e.what();
    }
    curves.push_back(std::move(curve));
  }
  return curves;
}

}  // namespace rtwalk
