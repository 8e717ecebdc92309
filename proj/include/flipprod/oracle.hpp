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

#ifndef FLIPPROD_ORACLE_HPP_
#define FLIPPROD_ORACLE_HPP_

#include <cstdint>
#include <vector>

#include "flipprod/flip_value.hpp"
#include "flipprod/linalg.hpp"
#include "flipprod/matroid.hpp"

namespace flipprod {

/// Maximal cone of the Bergman fan (fine structure): a maximal chain of
/// flats from the empty set to the ground set.
struct ChainCone {
  std::vector<Subset> chain;  // F_0 = {} ... F_r = E

  /// Proper flats F_1 .. F_{r-1}; their indicator vectors are the rays.
  std::vector<Subset> rays() const {
    if (chain.size() <= 2) return {};
    return {chain.begin() + 1, chain.end() - 1};
  }
};

/// Every maximal chain of flats of a loopless matroid.
std::vector<ChainCone> maximal_chains(const Matroid& m);

/// Shift vector w with entries +-a/b, a and b uniform in [1, 2^31).
struct GenericShift {
  std::vector<Rational> w;
  std::uint64_t seed = 0;
  int retries = 0;
};

GenericShift draw_shift(int n, std::uint64_t seed, int retries);

struct OracleResult {
  FlipValue value;
  int resamples = 0;                   // shifts discarded as degenerate
  std::vector<Integer> multiplicities;  // one per intersection point
};

inline constexpr int kMaxResamples = 32;

/// Counts Trop(M) n (w - Trop(N)) n {x_eps = 0} with lattice-index
/// multiplicities. Requires both loopless and r(M) + r(N) = n + 1.
OracleResult oracle_flip_detailed(const Matroid& m, const Matroid& n,
                                  int epsilon, std::uint64_t seed);
FlipValue oracle_flip(const Matroid& m, const Matroid& n, int epsilon = 0,
                      std::uint64_t seed = 1);

/// Index of the lattice spanned by integer vectors of length n.
Integer lattice_index(const std::vector<std::vector<long long>>& generators,
                      int n);

}  // namespace flipprod

#endif  // FLIPPROD_ORACLE_HPP_
