// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FLIPPROD_SUBSET_HPP_
#define FLIPPROD_SUBSET_HPP_

#include <bit>
#include <cstdint>
#include <vector>

namespace flipprod {

/// Subsets of a ground set {0, ..., n-1} are stored as bitmasks.
using Subset = std::uint32_t;

/// Hard cap on ground-set size. Subset sweeps and the flip recursion are
/// exponential in n.
inline constexpr int kMaxGround = 24;

inline constexpr Subset full_set(int n) {
  return n >= 32 ? ~Subset{0} : ((Subset{1} << n) - 1);
}
inline constexpr Subset singleton(int e) { return Subset{1} << e; }
inline constexpr bool contains(Subset s, int e) { return (s >> e) & 1u; }
inline constexpr int cardinality(Subset s) { return std::popcount(s); }
inline constexpr int lowest_element(Subset s) { return std::countr_zero(s); }

/// Packs the bits of `s` selected by `keep` into the low bits, preserving
/// order. This is the re-indexing applied by deletion and contraction.
inline constexpr Subset compress(Subset s, Subset keep) {
  Subset out = 0;
  int pos = 0;
  while (keep) {
    const int e = std::countr_zero(keep);
    if (contains(s, e)) out |= singleton(pos);
    ++pos;
    keep &= keep - 1;
  }
  return out;
}

/// Inverse of compress for a mask over the surviving elements.
inline constexpr Subset expand(Subset s, Subset keep) {
  Subset out = 0;
  int pos = 0;
  while (keep) {
    const int e = std::countr_zero(keep);
    if (contains(s, pos)) out |= singleton(e);
    ++pos;
    keep &= keep - 1;
  }
  return out;
}

inline std::vector<int> elements_of(Subset s) {
  std::vector<int> out;
  out.reserve(cardinality(s));
  for (; s; s &= s - 1) out.push_back(std::countr_zero(s));
  return out;
}

inline Subset subset_of(const std::vector<int>& elements) {
  Subset s = 0;
  for (int e : elements) s |= singleton(e);
  return s;
}

/// Gosper's hack: next larger integer with the same popcount.
inline constexpr Subset next_same_size(Subset s) {
  const Subset c = s & (~s + 1);
  const Subset r = s + c;
  return (((r ^ s) >> 2) / c) | r;
}

/// Calls fn(S) for every k-subset S of {0..n-1} in increasing numeric order.
template <typename Fn>
void for_each_k_subset(int n, int k, Fn&& fn) {
  if (k < 0 || k > n) return;
  if (k == 0) {
    fn(Subset{0});
    return;
  }
  const std::uint64_t limit = std::uint64_t{1} << n;
  for (std::uint64_t s = (std::uint64_t{1} << k) - 1; s < limit;) {
    fn(static_cast<Subset>(s));
    const std::uint64_t c = s & (~s + 1);
    const std::uint64_t r = s + c;
    s = (((r ^ s) >> 2) / c) | r;
  }
}

/// Applies a permutation of the ground set: element e maps to perm[e].
inline Subset permute(Subset s, const std::vector<int>& perm) {
  Subset out = 0;
  for (; s; s &= s - 1) out |= singleton(perm[std::countr_zero(s)]);
  return out;
}

}  // namespace flipprod

#endif  // FLIPPROD_SUBSET_HPP_
