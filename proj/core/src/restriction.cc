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
#include "rtwalk/restriction.h"

#include <algorithm>
#include <cctype>
#include <sstream>

namespace rtwalk {

void TwoStepParams::Validate() const {
  if (n < 1) throw std::invalid_argument("two-step params need n >= 1");
  if (f < 1 || f > n) throw std::invalid_argument("two-step params need 1 <= f <= n");
  if (g < 1) throw std::invalid_argument("two-step params need g >= 1");
  if (g > f) {
    throw std::invalid_argument("two-step params need g <= f (g > f leaves S_M empty)");
  }
}

std::string TwoStepParams::ToString() const {
  std::ostringstream os;
  os << "n=" << n << ",f=" << f << ",g=" << g;
  return os.str();
}

RestrictionVector RestrictionVector::Query(std::vector<int> b) {
  if (b.empty()) throw std::invalid_argument("restriction vector must be nonempty");
  const int n = static_cast<int>(b.size());
  for (int v : b) {
    if (v < 1 || v > n) {
      throw std::invalid_argument("restriction entries must lie in [1, n]");
    }
  }
  std::sort(b.begin(), b.end());
  return RestrictionVector(std::move(b));
}

RestrictionVector RestrictionVector::Create(std::vector<int> b) {
  RestrictionVector r = Query(std::move(b));
  if (const int row = r.FirstViolation(); row != 0) {
    throw EmptyStateSpace("S_M is empty: b_" + std::to_string(row) + " = " +
                          std::to_string(r.b(row)) + " exceeds " + std::to_string(row));
  }
  return r;
}

RestrictionVector RestrictionVector::Unrestricted(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  return RestrictionVector(std::vector<int>(n, 1));
}

RestrictionVector RestrictionVector::Parse(const std::string& text) {
  std::vector<int> b;
  std::string token;
  std::istringstream is(text);
  while (std::getline(is, token, ',')) {
    token.erase(std::remove_if(token.begin(), token.end(),
                               [](unsigned char c) { return std::isspace(c); }),
                token.end());
    if (token.empty()) continue;
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(token, &used);
    } catch (const std::exception&) {
      throw std::invalid_argument("bad restriction entry '" + token + "'");
    }
    if (used != token.size()) throw std::invalid_argument("bad restriction entry '" + token + "'");
    b.push_back(v);
  }
  return Query(std::move(b));
}

int RestrictionVector::FirstViolation() const {
  for (int i = 1; i <= n(); ++i) {
    if (b(i) > i) return i;
  }
  return 0;
}

std::optional<TwoStepParams> RestrictionVector::AsTwoStep() const {
  const int size = n();
  if (b_.front() != 1) return std::nullopt;
  int f = 0;
  while (f < size && b_[f] == 1) ++f;
  if (f == size) return TwoStepParams{size, size, size};
  const int step = b_[f];
  for (int i = f; i < size; ++i) {
    if (b_[i] != step) return std::nullopt;
  }
  const int g = step - 1;
  if (g > f) return std::nullopt;
  return TwoStepParams{size, f, g};
}

std::string RestrictionVector::ToString() const {
  std::string out;
  for (std::size_t i = 0; i < b_.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(b_[i]);
  }
  return out;
}

RestrictionVector TwoStepVector(const TwoStepParams& params) {
  params.Validate();
  std::vector<int> b(params.n, 1);
  for (int i = params.f; i < params.n; ++i) b[i] = params.g + 1;
  return RestrictionVector::Create(std::move(b));
}

std::vector<RestrictionVector> AllNonemptyVectors(int n) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  std::vector<RestrictionVector> out;
  std::vector<int> b(n, 1);
  // Odometer over weakly increasing sequences with b_i <= i.
  while (true) {
    out.push_back(RestrictionVector::Create(b));
    int i = n - 1;
    while (i >= 0 && b[i] == i + 1) --i;
    if (i < 0) break;
    ++b[i];
    for (int k = i + 1; k < n; ++k) b[k] = b[i];
  }
  return out;
}

std::int64_t Degree(const RestrictionVector& b) {
  if (!b.IsNonempty()) throw EmptyStateSpace("degree is undefined for an empty S_M");
  std::int64_t delta = 0;
  for (int i = 1; i <= b.n(); ++i) delta += i - b.b(i);
  return delta;
}

BigInt CountPermutations(const RestrictionVector& b) {
  BigInt count = 1;
  int eligible = 0;  // #{i : b_i <= c}
  for (int c = 1; c <= b.n(); ++c) {
    while (eligible < b.n() && b.values()[eligible] <= c) ++eligible;
    const int factor = eligible - (c - 1);
    if (factor <= 0) return 0;
    count *= factor;
  }
  return count;
}

BigInt CountTwoStep(const TwoStepParams& params) {
  params.Validate();
  return Factorial(params.f) * Factorial(params.n - params.g) / Factorial(params.f - params.g);
}

Permutation Identity(int n) {
  Permutation p(n);
  for (int i = 0; i < n; ++i) p[i] = i + 1;
  return p;
}

bool IsMember(const RestrictionVector& b, const Permutation& sigma) {
  if (static_cast<int>(sigma.size()) != b.n()) return false;
  std::vector<bool> seen(b.n() + 1, false);
  for (int i = 1; i <= b.n(); ++i) {
    const int v = sigma[i - 1];
    if (v < 1 || v > b.n() || seen[v]) return false;
    seen[v] = true;
    if (v < b.b(i)) return false;
  }
  return true;
}

namespace {

// Rows row..n can still be completed with the unused values. Rows are sorted
// by b, so matching the largest free values to the most restricted rows is
// optimal.
bool Completable(const RestrictionVector& b, int row, const std::vector<bool>& used) {
  int v = b.n();
  for (int r = b.n(); r >= row; --r) {
    while (v >= 1 && used[v]) --v;
    if (v < b.b(r)) return false;
    --v;
  }
  return true;
}

void EnumerateFrom(const RestrictionVector& b, int row, Permutation& sigma,
                   std::vector<bool>& used, std::vector<Permutation>& out) {
  if (row > b.n()) {
    out.push_back(sigma);
    return;
  }
  for (int v = b.b(row); v <= b.n(); ++v) {
    if (used[v]) continue;
    used[v] = true;
    sigma[row - 1] = v;
    if (Completable(b, row + 1, used)) EnumerateFrom(b, row + 1, sigma, used, out);
    used[v] = false;
  }
}

}  // namespace

std::vector<Permutation> Enumerate(const RestrictionVector& b, std::int64_t cap) {
  const BigInt count = CountPermutations(b);
  if (count > cap) {
    throw CapExceeded("|S_M| = " + count.str() + " exceeds the enumeration cap " +
                      std::to_string(cap));
  }
  std::vector<Permutation> out;
  if (count == 0) return out;
  out.reserve(static_cast<std::size_t>(count));
  Permutation sigma(b.n(), 0);
  std::vector<bool> used(b.n() + 1, false);
  EnumerateFrom(b, 1, sigma, used, out);
  return out;
}

Permutation SampleUniform(const RestrictionVector& b, std::mt19937_64& rng) {
  if (!b.IsNonempty()) throw EmptyStateSpace("cannot sample from an empty S_M");
  const int n = b.n();
  Permutation sigma(n, 0);
  std::vector<int> free_rows;
  free_rows.reserve(n);
  int eligible = 0;
  for (int c = 1; c <= n; ++c) {
    while (eligible < n && b.values()[eligible] <= c) free_rows.push_back(++eligible);
    std::uniform_int_distribution<std::size_t> pick(0, free_rows.size() - 1);
    const std::size_t k = pick(rng);
    sigma[free_rows[k] - 1] = c;
    free_rows[k] = free_rows.back();
    free_rows.pop_back();
  }
  return sigma;
}

Permutation SampleUniform(const RestrictionVector& b, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return SampleUniform(b, rng);
}

EquivalenceClasses ComputeEquivalenceClasses(const RestrictionVector& b) {
  EquivalenceClasses classes;
  const auto& v = b.values();
  std::vector<int> distinct;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i == 0 || v[i] != v[i - 1]) {
      distinct.push_back(v[i]);
      classes.left.push_back(0);
    }
    ++classes.left.back();
  }
  distinct.push_back(b.n() + 1);
  for (std::size_t c = 0; c + 1 < distinct.size(); ++c) {
    classes.right.push_back(distinct[c + 1] - distinct[c]);
  }
  return classes;
}

bool IsAllowedTransposition(const RestrictionVector& b, const Permutation& sigma, int i,
                            int j) {
  if (i == j) return false;
  if (i < 1 || j < 1 || i > b.n() || j > b.n()) {
    throw std::out_of_range("row index outside [1, n]");
  }
  return sigma[j - 1] >= b.b(i) && sigma[i - 1] >= b.b(j);
}

std::vector<Permutation> Neighbors(const RestrictionVector& b, const Permutation& sigma) {
  std::vector<Permutation> out;
  for (int i = 1; i <= b.n(); ++i) {
    for (int j = i + 1; j <= b.n(); ++j) {
      if (!IsAllowedTransposition(b, sigma, i, j)) continue;
      Permutation next = sigma;
      std::swap(next[i - 1], next[j - 1]);
      out.push_back(std::move(next));
    }
  }
  return out;
}

std::string FormatPermutation(const Permutation& sigma) {
  std::string out;
  const bool compact = sigma.size() <= 9;
  for (std::size_t i = 0; i < sigma.size(); ++i) {
    if (!compact && i) out += ',';
    out += std::to_string(sigma[i]);
  }
  return out;
}

Permutation ParsePermutation(const std::string& text) {
  Permutation p;
  if (text.find(',') == std::string::npos) {
    for (char c : text) {
      if (std::isspace(static_cast<unsigned char>(c))) continue;
      if (c < '1' || c > '9') throw std::invalid_argument("bad permutation '" + text + "'");
      p.push_back(c - '0');
    }
  } else {
    std::istringstream is(text);
    std::string token;
    while (std::getline(is, token, ',')) p.push_back(std::stoi(token));
  }
  std::vector<int> sorted = p;
  std::sort(sorted.begin(), sorted.end());
  if (sorted != Identity(static_cast<int>(p.size()))) {
    throw std::invalid_argument("'" + text + "' is not a permutation of 1..n");
  }
  return p;
}

}  // namespace rtwalk
