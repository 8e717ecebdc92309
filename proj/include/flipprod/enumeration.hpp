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

#ifndef FLIPPROD_ENUMERATION_HPP_
#define FLIPPROD_ENUMERATION_HPP_

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "flipprod/flip.hpp"
#include "flipprod/matroid.hpp"

namespace flipprod {

inline constexpr int kMaxEnumeration = 6;

/// One representative per isomorphism class of rank-r matroids on [n]. Each
/// representative is stored in its minimal-image form.
struct IsoClassSet {
  int n = 0;
  int r = 0;
  std::vector<Matroid> reps;
};

IsoClassSet enumerate_matroids(int n, int r);

/// Histogram p -> count.
using Histogram = std::map<long long, long long>;

/// h(p) = #{(M, N, sigma) : M in M_{n,k1}, N in M_{n,k2}, sigma in S_n,
/// M * sigma(N) = p} with n = k1 + k2 - 1.
Histogram h_table(int k1, int k2, FlipEngine& engine);

/// Histogram of M * M over rank-(n+1)/2 classes on [n], n odd.
Histogram self_product_table(int n, FlipEngine& engine);

struct ConjectureReport {
  int k1 = 0;
  int k2 = 0;
  int n = 0;
  long long uniform_value = 0;  // U_{n,k1} * U_{n,k2}
  bool surjectivity_checked = false;  // needs n >= 2
  bool surjectivity_holds = true;
  bool threshold_checked = false;  // needs n >= 3
  bool threshold_holds = true;
  std::vector<std::string> violations;

  bool holds() const { return surjectivity_holds && threshold_holds; }
};

/// Checks h(p) >= 1 for 0 <= p <= U_{n,k1} * U_{n,k2}, and that on this range
/// h(p) <= n! exactly when p is the maximum.
ConjectureReport conjecture_scan(int k1, int k2, const Histogram& table,
                                 FlipEngine& engine);
ConjectureReport conjecture_scan(int k1, int k2, FlipEngine& engine);

}  // namespace flipprod

#endif  // FLIPPROD_ENUMERATION_HPP_
