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
#ifndef RTWALK_MIXING_H_
#define RTWALK_MIXING_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rtwalk/bounds.h"
#include "rtwalk/numeric.h"
#include "rtwalk/restriction.h"
#include "rtwalk/spectrum.h"

namespace rtwalk {

// kLazy:    P = (nI + 2U) / (n + 2 Delta)
// kUniform: P = U / Delta (the 1x1 identity when Delta = 0)
enum class ChainKind { kLazy, kUniform };

std::string ToString(ChainKind kind);
// Accepts "lazy" and "uniform".
ChainKind ParseChainKind(const std::string& text);

// Sparse exact transition matrix over Enumerate(b). Every entry is
// (hold_weight or edge_weight or 0) / denominator.
class TransitionMatrix {
 public:
  static TransitionMatrix Build(const RestrictionVector& b, ChainKind kind,
                                std::int64_t cap = kDefaultMatrixCap);

  const RestrictionVector& b() const { return b_; }
  ChainKind kind() const { return kind_; }
  const std::vector<Permutation>& states() const { return states_; }
  std::int64_t size() const { return static_cast<std::int64_t>(states_.size()); }
  // Neighbor indices of each state, ascending.
  const std::vector<std::vector<std::int32_t>>& adjacency() const { return adjacency_; }

  std::int64_t hold_weight() const { return hold_weight_; }
  std::int64_t edge_weight() const { return edge_weight_; }
  std::int64_t denominator() const { return denominator_; }

  // Throws std::out_of_range for a permutation outside S_M.
  std::int64_t IndexOf(const Permutation& sigma) const;
  Rational Entry(std::int64_t row, std::int64_t col) const;
  std::vector<std::vector<Rational>> Dense() const;

 private:
  TransitionMatrix(RestrictionVector b, ChainKind kind) : b_(std::move(b)), kind_(kind) {}

  RestrictionVector b_;
  ChainKind kind_;
  std::vector<Permutation> states_;
  std::vector<std::vector<std::int32_t>> adjacency_;
  std::int64_t hold_weight_ = 0;
  std::int64_t edge_weight_ = 0;
  std::int64_t denominator_ = 1;
};

// Row of P^t stored as integer weights over denominator^t.
class ExactDistribution {
 public:
  // Point mass at `start` (t = 0).
  ExactDistribution(const TransitionMatrix& matrix, const Permutation& start);

  // One more step: w <- w P.
  void Step();
  void Advance(std::int64_t steps);

  std::int64_t t() const { return t_; }
  const std::vector<BigInt>& weights() const { return weights_; }
  const BigInt& denominator() const { return denominator_; }
  Rational At(std::int64_t index) const;
  Rational At(const Permutation& sigma) const;
  std::vector<Rational> Probabilities() const;

  // Distances to the uniform law on S_M (the stationary law of both kinds).
  Rational TvToUniform() const;
  Rational ChiSquaredSqToUniform() const;

 private:
  const TransitionMatrix* matrix_;
  std::vector<BigInt> weights_;
  BigInt denominator_ = 1;
  std::int64_t t_ = 0;
};

ExactDistribution ExactDistributionAt(const TransitionMatrix& matrix, const Permutation& start,
                                      std::int64_t t);
Rational ReturnProbability(const TransitionMatrix& matrix, const Permutation& sigma,
                           std::int64_t t);

// Half L1 distance.
Real TvDistance(const std::vector<Real>& mu, const std::vector<Real>& pi);
Rational TvDistance(const std::vector<Rational>& mu, const std::vector<Rational>& pi);
// sqrt(sum (mu/pi - 1)^2 pi). Throws std::domain_error on zero stationary mass.
Real ChiSquared(const std::vector<Real>& mu, const std::vector<Real>& pi);
// Square of the chi-squared distance, exactly.
Rational ChiSquaredSq(const std::vector<Rational>& mu, const std::vector<Rational>& pi);

// sum over eig_u != Delta of dim * eig_p^(2t), exactly. Refuses spectra whose
// vector is not two-step (throws std::invalid_argument).
Rational ChiSquaredSqFromSpectrum(const Spectrum& spectrum, std::int64_t t);
Real ChiSquaredFromSpectrum(const Spectrum& spectrum, std::int64_t t);

struct ProbeWitness {
  Permutation sigma;
  Permutation tau;
  std::int64_t t = 0;
  Rational p_sigma;
  Rational p_tau;
};

struct ProbeResult {
  // True when P^t(x, x) is constant over the probed states for every
  // t <= t_max. Necessary-condition evidence only.
  bool transitive_consistent = true;
  std::optional<ProbeWitness> witness;
};

// Compares return probabilities. With no candidates every state is compared
// against the identity and the witness is the lexicographically first state
// that differs at the smallest t. With candidates, the first candidate is the
// reference and only candidates are compared.
ProbeResult VertexTransitivityProbe(const RestrictionVector& b, std::int64_t t_max,
                                    ChainKind kind = ChainKind::kLazy,
                                    const std::vector<Permutation>& candidates = {},
                                    std::int64_t cap = kDefaultMatrixCap);

// ---------------------------------------------------------------------------
// Sweeps.

enum class CurveKind {
  kTvExact,
  kChiExact,
  kChiSpectral,
  kChiUpperBound,
  kChiLowerTerm,
  kTvLowerBound,
  kTvFastMixLower,
};

std::string ToString(CurveKind kind);
CurveKind ParseCurveKind(const std::string& text);

struct CurvePoint {
  std::int64_t t = 0;
  Real value = 0;
};

struct DistanceCurve {
  CurveKind kind = CurveKind::kTvExact;
  std::vector<CurvePoint> points;
  // Set when the curve could not be produced; points is then empty.
  std::string error;
  bool cap_exceeded = false;
};

struct SweepSpec {
  RestrictionVector b = RestrictionVector::Unrestricted(1);
  std::vector<std::int64_t> t_grid;
  std::vector<CurveKind> kinds;
  ChainKind chain = ChainKind::kLazy;
  // Start state for the exact curves; identity when empty.
  Permutation start;
  UpperBoundOptions upper_bound;
  std::int64_t matrix_cap = kDefaultMatrixCap;
  std::int64_t chain_cap = kDefaultChainCap;
};

// One curve per requested kind, in request order. Points follow the t-grid
// order. A failing curve carries its error and does not abort the others.
// Lower-bound curves (chi-lower-term, tv-lower-bound, tv-fastmix-lower) are
// clipped at 0 so that every point is a valid distance bound.
std::vector<DistanceCurve> Sweep(const SweepSpec& spec);

}  // namespace rtwalk

#endif  // RTWALK_MIXING_H_
