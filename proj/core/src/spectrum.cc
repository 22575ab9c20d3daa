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
#include "rtwalk/spectrum.h"

#include <algorithm>
#include <ostream>

namespace rtwalk {

Partition BPartition::mu(int i) const {
  if (i <= 0 || i >= s()) return Partition();
  return mus[i - 1];
}

std::vector<Partition> BPartition::Chain() const {
  std::vector<Partition> chain;
  for (int i = 0; i < s(); ++i) {
    if (i) chain.push_back(mus[i - 1]);
    chain.push_back(lambdas[i]);
  }
  return chain;
}

std::string BPartition::ToString() const {
  std::string out = "(";
  const auto chain = Chain();
  for (std::size_t i = 0; i < chain.size(); ++i) {
    if (i) out += ',';
    out += chain[i].ToString();
  }
  return out + ")";
}

void ValidateBPartition(const BPartition& alpha, const RestrictionVector& b) {
  const EquivalenceClasses classes = ComputeEquivalenceClasses(b);
  const int s = static_cast<int>(classes.left.size());
  if (alpha.s() != s || static_cast<int>(alpha.mus.size()) != s - 1) {
    throw std::invalid_argument("chain length does not match the number of classes");
  }
  for (int i = 1; i <= s; ++i) {
    const Partition& lambda = alpha.lambdas[i - 1];
    const Partition before = alpha.mu(i - 1);
    const Partition after = alpha.mu(i);
    if (!lambda.Contains(before) || !lambda.Contains(after)) {
      throw std::invalid_argument("chain " + alpha.ToString() + " breaks containment");
    }
    if (lambda.size() - before.size() != classes.left[i - 1] ||
        lambda.size() - after.size() != classes.right[i - 1]) {
      throw std::invalid_argument("chain " + alpha.ToString() + " has wrong skew sizes");
    }
  }
}

namespace {

struct ChainBuilder {
  const EquivalenceClasses& classes;
  std::int64_t cap;
  std::vector<BPartition>& out;
  BPartition current;

  void Extend(int i, const Partition& mu_prev) {
    const int s = static_cast<int>(classes.left.size());
    const int lambda_size = mu_prev.size() + classes.left[i - 1];
    for (Partition& lambda : EnumerateSuperpartitions(mu_prev, lambda_size)) {
      const int mu_size = lambda_size - classes.right[i - 1];
      if (mu_size < 0) continue;
      current.lambdas.push_back(std::move(lambda));
      if (i == s) {
        if (mu_size == 0) {
          if (static_cast<std::int64_t>(out.size()) >= cap) {
            throw CapExceeded("b-partition count exceeds the cap " + std::to_string(cap));
          }
          out.push_back(current);
        }
      } else {
        for (Partition& mu : EnumerateSubpartitions(current.lambdas.back(), mu_size)) {
          current.mus.push_back(std::move(mu));
          Extend(i + 1, current.mus.back());
          current.mus.pop_back();
        }
      }
      current.lambdas.pop_back();
    }
  }
};

}  // namespace

std::vector<BPartition> EnumerateBPartitions(const RestrictionVector& b, std::int64_t cap) {
  if (!b.IsNonempty()) throw EmptyStateSpace("no b-partitions for an empty S_M");
  const EquivalenceClasses classes = ComputeEquivalenceClasses(b);
  std::vector<BPartition> out;
  ChainBuilder builder{classes, cap, out, {}};
  builder.Extend(1, Partition());
  return out;
}

IndicatorTableau ComputeIndicatorTableau(const BPartition& alpha) {
  IndicatorTableau t;
  for (int i = 1; i <= alpha.s(); ++i) {
    const SkewShape skew(alpha.lambdas[i - 1], alpha.mu(i - 1));
    for (int r = 1; r <= skew.outer().length(); ++r) {
      for (int c = skew.inner().part(r - 1) + 1; c <= skew.outer().part(r - 1); ++c) {
        ++t[{r, c}];
      }
    }
  }
  return t;
}

std::int64_t EigenvalueU(const BPartition& alpha) {
  std::int64_t by_tableau = 0;
  for (const auto& [square, multiplicity] : ComputeIndicatorTableau(alpha)) {
    by_tableau += static_cast<std::int64_t>(multiplicity) * (square.second - square.first);
  }
  std::int64_t by_contents = 0;
  for (const Partition& lambda : alpha.lambdas) by_contents += lambda.ContentSum();
  for (const Partition& mu : alpha.mus) by_contents -= mu.ContentSum();
  if (by_tableau != by_contents) {
    throw std::logic_error("eigenvalue forms disagree on " + alpha.ToString());
  }
  return by_contents;
}

BigInt Dimension(const BPartition& alpha) {
  BigInt dim = 1;
  for (int i = 1; i <= alpha.s(); ++i) {
    const Partition& lambda = alpha.lambdas[i - 1];
    dim *= SytCount(SkewShape(lambda, alpha.mu(i - 1)));
    dim *= SytCount(SkewShape(lambda, alpha.mu(i)));
  }
  return dim;
}

BPartition TransposeChain(const BPartition& alpha) {
  BPartition t;
  for (const Partition& lambda : alpha.lambdas) t.lambdas.push_back(lambda.Transpose());
  for (const Partition& mu : alpha.mus) t.mus.push_back(mu.Transpose());
  return t;
}

Rational LazyEigenvalue(std::int64_t eig_u, int n, std::int64_t delta) {
  return Rational(n + 2 * eig_u, n + 2 * delta);
}

std::vector<MergedLine> Spectrum::Merged() const {
  std::map<std::int64_t, MergedLine, std::greater<>> by_eig;
  for (const SpectralLine& line : lines) {
    MergedLine& m = by_eig[line.eig_u];
    m.eig_u = line.eig_u;
    m.eig_p = line.eig_p;
    m.dim += line.dim;
    ++m.chains;
  }
  std::vector<MergedLine> out;
  for (auto& [eig, m] : by_eig) out.push_back(std::move(m));
  return out;
}

std::optional<std::int64_t> Spectrum::SecondEigenvalue() const {
  std::optional<std::int64_t> best;
  for (const SpectralLine& line : lines) {
    if (line.eig_u < delta && (!best || line.eig_u > *best)) best = line.eig_u;
  }
  return best;
}

Spectrum FullSpectrum(const RestrictionVector& b, std::int64_t cap) {
  Spectrum spectrum;
  spectrum.b = b;
  spectrum.delta = Degree(b);
  for (BPartition& alpha : EnumerateBPartitions(b, cap)) {
    SpectralLine line;
    line.eig_u = EigenvalueU(alpha);
    line.eig_p = LazyEigenvalue(line.eig_u, b.n(), spectrum.delta);
    line.dim = Dimension(alpha);
    line.chain = std::move(alpha);
    spectrum.total_dim += line.dim;
    spectrum.lines.push_back(std::move(line));
  }
  return spectrum;
}

void WriteSpectrumCsv(const Spectrum& spectrum, std::ostream& out, bool per_chain) {
  auto den = [](const Rational& r) { return boost::multiprecision::denominator(r).str(); };
  auto num = [](const Rational& r) { return boost::multiprecision::numerator(r).str(); };
  if (per_chain) {
    out << "eig_u,eig_p_num,eig_p_den,dim,chain\n";
    for (const SpectralLine& line : spectrum.lines) {
      out << line.eig_u << ',' << num(line.eig_p) << ',' << den(line.eig_p) << ','
          << line.dim << ",\"" << line.chain.ToString() << "\"\n";
    }
    return;
  }
  out << "eig_u,eig_p_num,eig_p_den,dim\n";
  for (const MergedLine& line : spectrum.Merged()) {
    out << line.eig_u << ',' << num(line.eig_p) << ',' << den(line.eig_p) << ',' << line.dim
        << '\n';
  }
}

RemainderTriple ComputeRemainderTriple(const BPartition& alpha, const TwoStepParams& params) {
  params.Validate();
  if (params.f == params.n) {
    throw std::invalid_argument("remainder triples need f < n (two classes)");
  }
  if (alpha.s() != 2 || alpha.lambdas[0].size() != params.f ||
      alpha.mus[0].size() != params.f - params.g ||
      alpha.lambdas[1].size() != params.n - params.g) {
    throw std::invalid_argument("chain " + alpha.ToString() + " is not a two-step chain for " +
                                params.ToString());
  }
  return {params.f - alpha.lambdas[0].LargestPart(),
          (params.f - params.g) - alpha.mus[0].LargestPart(),
          (params.n - params.g) - alpha.lambdas[1].LargestPart()};
}

std::int64_t TwoStepDenominator(const TwoStepParams& params) {
  return params.n + 2 * Degree(TwoStepVector(params));
}

bool IsLargeRemainderCell(const RemainderTriple& cell, const TwoStepParams& params) {
  return 5 * static_cast<std::int64_t>(cell.k) >= params.n - params.g;
}

void ValidateCell(const RemainderTriple& cell, const TwoStepParams& params) {
  params.Validate();
  if (cell.j < 0 || cell.i < cell.j || cell.k < cell.j || cell.i > params.f ||
      cell.j > params.f - params.g || cell.k > params.n - params.g) {
    throw std::out_of_range("remainder triple out of range");
  }
}

Rational SmallRemainderBound(const RemainderTriple& cell, const TwoStepParams& params) {
  ValidateCell(cell, params);
  const std::int64_t f = params.f, g = params.g, n = params.n;
  const std::int64_t i = cell.i, j = cell.j, k = cell.k;
  const std::int64_t s1 = 2 * i < f ? 2 * i * (f - i + 1) : i * f;
  const std::int64_t s2 = 2 * j * (f - g - j + 1);
  const std::int64_t s3 = 2 * k * (n - g - k + 1);
  const std::int64_t den = TwoStepDenominator(params);
  return Rational(den - s1 + s2 - s3, den);
}

Rational EigBound(const RemainderTriple& cell, const TwoStepParams& params) {
  ValidateCell(cell, params);
  if (IsLargeRemainderCell(cell, params)) return Rational(9, 10);
  return SmallRemainderBound(cell, params);
}

BigInt DimSumBound(const RemainderTriple& cell, const TwoStepParams& params) {
  const int f = params.f, g = params.g, n = params.n;
  const int i = cell.i, j = cell.j, k = cell.k;
  if (i < j || k < j || j < 0) throw std::out_of_range("dimension sums need i >= j <= k");
  const BigInt a = Binomial(f, i) * Binomial(g, i - j) * Binomial(n - f, k - j) *
                   Binomial(n - g, k);
  return a * Factorial(i) * Factorial(k) / Factorial(j);
}

namespace {

Real LogBinomial(int n, int k) {
  return LogFactorial(n) - LogFactorial(k) - LogFactorial(n - k);
}

}  // namespace

Real LogDimSumBound(const RemainderTriple& cell, const TwoStepParams& params) {
  const int f = params.f, g = params.g, n = params.n;
  const int i = cell.i, j = cell.j, k = cell.k;
  if (i < j || k < j || j < 0) throw std::out_of_range("dimension sums need i >= j <= k");
  if (i > f || i - j > g || k - j > n - f || k > n - g) {
    return -std::numeric_limits<Real>::infinity();
  }
  return LogBinomial(f, i) + LogBinomial(g, i - j) + LogBinomial(n - f, k - j) +
         LogBinomial(n - g, k) + LogFactorial(i) + LogFactorial(k) - LogFactorial(j);
}

BPartition Alpha0(const TwoStepParams& params) {
  params.Validate();
  return {{Partition::Row(params.f), Partition::Row(params.n - params.g)},
          {Partition::Row(params.f - params.g)}};
}

BPartition Alpha1(const TwoStepParams& params) {
  params.Validate();
  if (params.f < 2) throw std::invalid_argument("alpha1 needs f >= 2");
  return {{Partition({params.f - 1, 1}), Partition::Row(params.n - params.g)},
          {Partition::Row(params.f - params.g)}};
}

BPartition Alpha2(const TwoStepParams& params) {
  params.Validate();
  if (params.n - params.g < 2 || params.f == params.n) {
    throw std::invalid_argument("alpha2 needs n - g >= 2 and f < n");
  }
  return {{Partition::Row(params.f), Partition({params.n - params.g - 1, 1})},
          {Partition::Row(params.f - params.g)}};
}

}  // namespace rtwalk
