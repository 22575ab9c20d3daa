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
#include "rtwalk/verify.h"

#include <chrono>
#include <functional>
#include <map>
#include <sstream>

#include "rtwalk/bounds.h"
#include "rtwalk/mixing.h"
#include "rtwalk/restriction.h"
#include "rtwalk/spectrum.h"
#include "rtwalk/tableaux.h"

namespace rtwalk {
namespace {

// Returns an empty string on success, otherwise the first failure.
using Check = std::function<std::string()>;

CheckResult Timed(const std::string& name, const Check& check) {
  const auto start = std::chrono::steady_clock::now();
  CheckResult result;
  result.name = name;
  try {
    result.detail = check();
    result.passed = result.detail.empty();
    if (result.passed) result.detail = "ok";
  } catch (const std::exception& e) {
    result.passed = false;
    result.detail = std::string("exception: ") + e.what();
  }
  result.seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return result;
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

std::string Completeness(int max_sorted, int max_two_step) {
  std::vector<RestrictionVector> vectors;
  for (int n = 1; n <= max_sorted; ++n) {
    for (auto& b : AllNonemptyVectors(n)) vectors.push_back(b);
  }
  for (const auto& p : TwoStepInstances(max_two_step)) vectors.push_back(TwoStepVector(p));
  for (const auto& b : vectors) {
    const Spectrum spectrum = FullSpectrum(b);
    const BigInt count = CountPermutations(b);
    if (spectrum.total_dim != count) {
      return "b=" + b.ToString() + ": sum of dims " + spectrum.total_dim.str() + " != " +
             count.str();
    }
    if (b.n() <= 6 && static_cast<std::size_t>(count) != Enumerate(b).size()) {
      return "b=" + b.ToString() + ": enumeration size differs from the count";
    }
  }
  return "";
}

std::string RemarkReturnProbabilities() {
  const auto b = RestrictionVector::Create({1, 1, 1, 2, 3});
  const auto matrix = TransitionMatrix::Build(b, ChainKind::kUniform);
  const Rational id = ReturnProbability(matrix, ParsePermutation("12345"), 6);
  const Rational tau = ReturnProbability(matrix, ParsePermutation("45123"), 6);
  if (id != Rational(5207, 117649) || tau != Rational(5287, 117649)) {
    return "got " + ToString(id) + " and " + ToString(tau);
  }
  return "";
}

std::string SpectralMatrixAgreement(const std::vector<TwoStepParams>& instances, int t_max) {
  for (const auto& p : instances) {
    const auto b = TwoStepVector(p);
    const Spectrum spectrum = FullSpectrum(b);
    const auto matrix = TransitionMatrix::Build(b, ChainKind::kLazy);
    ExactDistribution d(matrix, Identity(p.n));
    for (int t = 0; t <= t_max; ++t) {
      if (t > 0) d.Step();
      if (d.ChiSquaredSqToUniform() != ChiSquaredSqFromSpectrum(spectrum, t)) {
        return p.ToString() + " t=" + std::to_string(t);
      }
    }
  }
  return "";
}

// tr(U^k) for k = 1..4 from the adjacency lists.
std::vector<std::int64_t> AdjacencyTraces(const TransitionMatrix& matrix, int k_max) {
  const auto& adj = matrix.adjacency();
  const std::size_t m = adj.size();
  std::vector<std::int64_t> traces(k_max + 1, 0);
  std::vector<std::int64_t> v(m), next(m);
  for (std::size_t x = 0; x < m; ++x) {
    std::fill(v.begin(), v.end(), 0);
    v[x] = 1;
    for (int k = 1; k <= k_max; ++k) {
      for (std::size_t y = 0; y < m; ++y) {
        std::int64_t acc = 0;
        for (std::int32_t z : adj[y]) acc += v[z];
        next[y] = acc;
      }
      v.swap(next);
      traces[k] += v[x];
    }
  }
  return traces;
}

std::string TraceMoments(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& b : AllNonemptyVectors(n)) {
      const auto matrix = TransitionMatrix::Build(b, ChainKind::kLazy);
      const auto traces = AdjacencyTraces(matrix, 4);
      const Spectrum spectrum = FullSpectrum(b);
      for (int k = 1; k <= 4; ++k) {
        BigInt moment = 0;
        for (const auto& line : spectrum.lines) {
          moment += line.dim * boost::multiprecision::pow(BigInt(line.eig_u), k);
        }
        if (moment != traces[k]) {
          return "b=" + b.ToString() + " k=" + std::to_string(k);
        }
      }
    }
  }
  return "";
}

std::string LeadTerms(int max_n) {
  for (const auto& p : TwoStepInstances(max_n)) {
    if (p.f < 2 || p.n - p.g < 2 || p.f == p.n || p.f == p.g) continue;
    const Spectrum spectrum = FullSpectrum(TwoStepVector(p));
    const std::int64_t delta = spectrum.delta;
    BigInt top_dim = 0;
    for (const auto& line : spectrum.lines) {
      if (line.eig_u == delta) top_dim += line.dim;
    }
    const std::int64_t expected = std::max(delta - p.f, delta - (p.n - p.g));
    if (top_dim != 1 || spectrum.SecondEigenvalue() != expected ||
        Dimension(Alpha1(p)) != (p.f - 1) * p.g ||
        Dimension(Alpha2(p)) != (p.n - p.g - 1) * (p.n - p.f)) {
      return p.ToString();
    }
  }
  return "";
}

std::string Pairing(int max_n) {
  for (int n = 1; n <= max_n; ++n) {
    for (const auto& b : AllNonemptyVectors(n)) {
      std::map<std::int64_t, BigInt> dims;
      for (const auto& alpha : EnumerateBPartitions(b)) {
        const BPartition t = TransposeChain(alpha);
        const BigInt d = Dimension(alpha);
        if (EigenvalueU(t) != -EigenvalueU(alpha) || Dimension(t) != d) {
          return "b=" + b.ToString() + " chain " + alpha.ToString();
        }
        dims[EigenvalueU(alpha)] += d;
      }
      for (const auto& [eig, d] : dims) {
        auto it = dims.find(-eig);
        if (it == dims.end() || it->second != d) return "b=" + b.ToString() + " asymmetric";
      }
    }
  }
  return "";
}

std::string TableauIdentities(int max_size) {
  for (int l = 0; l <= max_size; ++l) {
    BigInt squares = 0;
    for (const auto& lambda : EnumeratePartitions(l)) {
      const BigInt full = SytCount(lambda);
      squares += full * full;
      for (int m = 0; m <= l; ++m) {
        BigInt sum = 0;
        for (const auto& mu : EnumerateSubpartitions(lambda, m)) {
          sum += SytCount(SkewShape(lambda, mu)) * SytCount(mu);
        }
        if (sum != full) return "branching fails at " + lambda.ToString();
      }
    }
    if (squares != Factorial(l)) return "square sum fails at " + std::to_string(l);
  }
  return "";
}

std::string CellDomination(int max_n, int t_max) {
  for (const auto& p : TwoStepInstances(max_n)) {
    if (p.f == p.n) continue;
    const Spectrum spectrum = FullSpectrum(TwoStepVector(p));
    std::map<RemainderTriple, std::vector<const SpectralLine*>> cells;
    for (const auto& line : spectrum.lines) {
      cells[ComputeRemainderTriple(line.chain, p)].push_back(&line);
    }
    for (const auto& [cell, lines] : cells) {
      if (cell == RemainderTriple{} || IsLargeRemainderCell(cell, p)) continue;
      BigInt dims = 0;
      for (const auto* line : lines) dims += line->dim;
      if (dims > DimSumBound(cell, p)) return p.ToString() + " dimension sum";
      for (int t = 0; t <= t_max; ++t) {
        Rational positive = 0;
        for (const auto* line : lines) {
          if (line->eig_p >= 0) {
            positive += Rational(line->dim) * Pow(line->eig_p, 2 * t);
          }
        }
        if (positive > UpperBoundCellTerm(cell, p, t)) {
          return p.ToString() + " t=" + std::to_string(t);
        }
      }
    }
  }
  return "";
}

}  // namespace

VerifyLevel ParseVerifyLevel(const std::string& text) {
  if (text == "quick") return VerifyLevel::kQuick;
  if (text == "full") return VerifyLevel::kFull;
  throw std::invalid_argument("unknown verify level '" + text + "' (expected quick or full)");
}

std::vector<CheckResult> RunVerification(VerifyLevel level) {
  std::vector<CheckResult> results;
  const bool full = level == VerifyLevel::kFull;
  results.push_back(Timed("completeness", [&] { return Completeness(6, full ? 8 : 6); }));
  results.push_back(Timed("remark-return-probabilities", RemarkReturnProbabilities));
  results.push_back(Timed("chi-spectral-vs-matrix", [&] {
    if (!full) return SpectralMatrixAgreement({{5, 3, 2}}, 8);
    std::vector<TwoStepParams> instances;
    for (const auto& p : TwoStepInstances(6)) instances.push_back(p);
    return SpectralMatrixAgreement(instances, 10);
  }));
  if (!full) return results;
  results.push_back(Timed("trace-moments", [] { return TraceMoments(6); }));
  results.push_back(Timed("lead-terms", [] { return LeadTerms(8); }));
  results.push_back(Timed("transpose-pairing", [] { return Pairing(7); }));
  results.push_back(Timed("tableau-identities", [] { return TableauIdentities(10); }));
  results.push_back(Timed("cell-domination", [] { return CellDomination(7, 10); }));
  return results;
}

}  // namespace rtwalk
