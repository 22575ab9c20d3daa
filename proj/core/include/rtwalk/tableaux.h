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
#ifndef RTWALK_TABLEAUX_H_
#define RTWALK_TABLEAUX_H_

#include <compare>
#include <cstdint>
#include <string>
#include <vector>

#include "rtwalk/numeric.h"

namespace rtwalk {

// Integer partition stored largest part first. The empty partition is the
// default value.
class Partition {
 public:
  Partition() = default;
  // Throws std::invalid_argument unless parts are positive and weakly
  // decreasing.
  explicit Partition(std::vector<int> parts);

  static Partition Row(int k);
  static Partition Column(int k);

  const std::vector<int>& parts() const { return parts_; }
  int size() const { return size_; }
  int length() const { return static_cast<int>(parts_.size()); }
  bool empty() const { return parts_.empty(); }
  // 0-based row lookup; 0 past the last row.
  int part(int row) const { return row < length() ? parts_[row] : 0; }

  int LargestPart() const { return empty() ? 0 : parts_.front(); }
  // The partition left after deleting the largest part.
  Partition Remainder() const;
  int RemainderSize() const { return size_ - LargestPart(); }

  Partition Transpose() const;
  // Componentwise containment of mu in this partition.
  bool Contains(const Partition& mu) const;
  // Sum over squares of (column - row).
  std::int64_t ContentSum() const;

  // "[4,2,1]"; the empty partition prints as "[]".
  std::string ToString() const;

  friend auto operator<=>(const Partition& a, const Partition& b) { return a.parts_ <=> b.parts_; }
  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }

 private:
  std::vector<int> parts_;
  int size_ = 0;
};

class SkewShape {
 public:
  // Throws std::invalid_argument unless inner is contained in outer.
  SkewShape(Partition outer, Partition inner);
  explicit SkewShape(Partition outer) : SkewShape(std::move(outer), Partition()) {}

  const Partition& outer() const { return outer_; }
  const Partition& inner() const { return inner_; }
  int size() const { return outer_.size() - inner_.size(); }
  // 1-based square membership.
  bool Contains(int row, int col) const;
  std::string ToString() const;

 private:
  Partition outer_;
  Partition inner_;
};

// Number of standard Young tableaux of the skew shape. Corner-removal
// recursion memoized per thread.
BigInt SytCount(const SkewShape& shape);
BigInt SytCount(const Partition& lambda);

// All partitions of `size` in reverse-lexicographic order.
std::vector<Partition> EnumeratePartitions(int size, int cap = 200);
// All mu contained in lambda with |mu| = size, reverse-lexicographic.
std::vector<Partition> EnumerateSubpartitions(const Partition& lambda, int size);
// All lambda containing mu with |lambda| = size, reverse-lexicographic.
std::vector<Partition> EnumerateSuperpartitions(const Partition& mu, int size);

// Bound on C(lambda) - C(mu) over lambda |- l containing mu |- m with
// remainders of sizes i and j:
//   (l^2 - l)/2 - (m^2 - m)/2 - i(l - i + 1) + j(m - j + 1).
std::int64_t MaxContentSkew(std::int64_t l, std::int64_t m, std::int64_t i, std::int64_t j);
// (l^2 - l)/2 - i(l - i + 1); attained by (l - i, i) when i <= l/2.
std::int64_t MaxContent(std::int64_t l, std::int64_t i);
// (l^2 - l)/2 - il/2, the bound used once the remainder is large.
Rational MaxContentLargeRemainder(std::int64_t l, std::int64_t i);

}  // namespace rtwalk

#endif  // RTWALK_TABLEAUX_H_
