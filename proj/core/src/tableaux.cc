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
#include "rtwalk/tableaux.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

namespace rtwalk {

Partition::Partition(std::vector<int> parts) : parts_(std::move(parts)) {
  for (std::size_t r = 0; r < parts_.size(); ++r) {
    if (parts_[r] <= 0) throw std::invalid_argument("partition parts must be positive");
    if (r > 0 && parts_[r] > parts_[r - 1]) {
      throw std::invalid_argument("partition parts must be weakly decreasing");
    }
  }
  size_ = std::accumulate(parts_.begin(), parts_.end(), 0);
}

Partition Partition::Row(int k) {
  if (k < 0) throw std::invalid_argument("negative row length");
  return k == 0 ? Partition() : Partition({k});
}

Partition Partition::Column(int k) {
  if (k < 0) throw std::invalid_argument("negative column length");
  return Partition(std::vector<int>(k, 1));
}

Partition Partition::Remainder() const {
  if (empty()) return Partition();
  return Partition(std::vector<int>(parts_.begin() + 1, parts_.end()));
}

Partition Partition::Transpose() const {
  std::vector<int> t(LargestPart(), 0);
  for (int p : parts_) {
    for (int c = 0; c < p; ++c) ++t[c];
  }
  return Partition(std::move(t));
}

bool Partition::Contains(const Partition& mu) const {
  if (mu.length() > length()) return false;
  for (int r = 0; r < mu.length(); ++r) {
    if (mu.parts_[r] > parts_[r]) return false;
  }
  return true;
}

std::int64_t Partition::ContentSum() const {
  std::int64_t total = 0;
  for (int r = 0; r < length(); ++r) {
    const std::int64_t p = parts_[r];
    // columns 1..p in row r+1 contribute sum(c) - p*(r+1)
    total += p * (p + 1) / 2 - p * (r + 1);
  }
  return total;
}

std::string Partition::ToString() const {
  std::string out = "[";
  for (int r = 0; r < length(); ++r) {
    if (r) out += ',';
    out += std::to_string(parts_[r]);
  }
  return out + "]";
}

SkewShape::SkewShape(Partition outer, Partition inner)
    : outer_(std::move(outer)), inner_(std::move(inner)) {
  if (!outer_.Contains(inner_)) {
    throw std::invalid_argument("skew shape inner " + inner_.ToString() +
                                " is not contained in " + outer_.ToString());
  }
}

bool SkewShape::Contains(int row, int col) const {
  return col <= outer_.part(row - 1) && col > inner_.part(row - 1);
}

std::string SkewShape::ToString() const { return outer_.ToString() + "/" + inner_.ToString(); }

namespace {

using SytKey = std::pair<std::vector<int>, std::vector<int>>;

BigInt SytRecurse(std::vector<int>& outer, const std::vector<int>& inner,
                  std::map<SytKey, BigInt>& memo) {
  bool done = true;
  for (std::size_t r = 0; r < outer.size(); ++r) {
    const int in = r < inner.size() ? inner[r] : 0;
    if (outer[r] != in) {
      done = false;
      break;
    }
  }
  if (done) return 1;
  SytKey key{outer, inner};
  if (auto it = memo.find(key); it != memo.end()) return it->second;

  // The largest entry sits in a removable corner of the outer shape.
  BigInt total = 0;
  for (std::size_t r = 0; r < outer.size(); ++r) {
    const int in = r < inner.size() ? inner[r] : 0;
    const int below = r + 1 < outer.size() ? outer[r + 1] : 0;
    if (outer[r] > in && outer[r] > below) {
      --outer[r];
      total += SytRecurse(outer, inner, memo);
      ++outer[r];
    }
  }
  memo.emplace(std::move(key), total);
  return total;
}

}  // namespace

BigInt SytCount(const SkewShape& shape) {
  thread_local std::map<SytKey, BigInt> memo;
  std::vector<int> outer = shape.outer().parts();
  return SytRecurse(outer, shape.inner().parts(), memo);
}

BigInt SytCount(const Partition& lambda) { return SytCount(SkewShape(lambda)); }

namespace {

// Rows row.. receive parts in [lo(row), hi(row)] with the running cap `prev`;
// lo/hi come from the containment constraint being enumerated.
template <typename Lower, typename Upper>
void FillRows(int row, int prev, int remaining, std::vector<int>& parts, const Lower& lower,
              const Upper& upper, const std::vector<int>& max_tail,
              const std::vector<int>& min_tail, std::vector<Partition>& out) {
  if (remaining == 0 && lower(row) == 0) {
    out.emplace_back(parts);
    return;
  }
  const int tail_max = row + 1 < static_cast<int>(max_tail.size()) ? max_tail[row + 1] : 0;
  const int tail_min = row + 1 < static_cast<int>(min_tail.size()) ? min_tail[row + 1] : 0;
  const int hi = std::min({prev, upper(row), remaining - tail_min});
  const int lo = std::max({1, lower(row), remaining - tail_max});
  for (int p = hi; p >= lo; --p) {
    parts.push_back(p);
    FillRows(row + 1, p, remaining - p, parts, lower, upper, max_tail, min_tail, out);
    parts.pop_back();
  }
}

}  // namespace

std::vector<Partition> EnumeratePartitions(int size, int cap) {
  if (size < 0) throw std::invalid_argument("partition size must be nonnegative");
  if (size > cap) {
    throw CapExceeded("partition size " + std::to_string(size) + " exceeds the cap " +
                      std::to_string(cap));
  }
  return EnumerateSuperpartitions(Partition(), size);
}

std::vector<Partition> EnumerateSubpartitions(const Partition& lambda, int size) {
  if (size < 0 || size > lambda.size()) {
    throw std::invalid_argument("subpartition size must lie in [0, |lambda|]");
  }
  const int len = lambda.length();
  std::vector<int> max_tail(len + 1, 0), min_tail(len + 1, 0);
  for (int r = len - 1; r >= 0; --r) max_tail[r] = max_tail[r + 1] + lambda.part(r);
  std::vector<Partition> out;
  std::vector<int> parts;
  FillRows(
      0, size, size, parts, [](int) { return 0; }, [&](int r) { return lambda.part(r); },
      max_tail, min_tail, out);
  return out;
}

std::vector<Partition> EnumerateSuperpartitions(const Partition& mu, int size) {
  if (size < mu.size()) throw std::invalid_argument("superpartition size must be >= |mu|");
  const int len = mu.length();
  // Without an outer shape a row can absorb everything that is left.
  std::vector<int> max_tail(size + 2, size), min_tail(len + 1, 0);
  for (int r = len - 1; r >= 0; --r) min_tail[r] = min_tail[r + 1] + mu.part(r);
  std::vector<Partition> out;
  std::vector<int> parts;
  FillRows(
      0, size, size, parts, [&](int r) { return mu.part(r); }, [size](int) { return size; },
      max_tail, min_tail, out);
  return out;
}

std::int64_t MaxContentSkew(std::int64_t l, std::int64_t m, std::int64_t i, std::int64_t j) {
  return (l * l - l) / 2 - (m * m - m) / 2 - i * (l - i + 1) + j * (m - j + 1);
}

std::int64_t MaxContent(std::int64_t l, std::int64_t i) { return (l * l - l) / 2 - i * (l - i + 1); }

Rational MaxContentLargeRemainder(std::int64_t l, std::int64_t i) {
  return Rational((l * l - l) / 2) - Rational(i * l, 2);
}

}  // namespace rtwalk
