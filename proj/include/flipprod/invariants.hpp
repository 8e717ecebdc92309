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

#ifndef FLIPPROD_INVARIANTS_HPP_
#define FLIPPROD_INVARIANTS_HPP_

#include <vector>

#include "flipprod/flip.hpp"
#include "flipprod/flip_value.hpp"
#include "flipprod/linalg.hpp"
#include "flipprod/matroid.hpp"

namespace flipprod {

/// Characteristic polynomial data. Coefficient vectors are in ascending
/// degree: coeffs[j] multiplies lambda^j.
struct CharPoly {
  std::vector<Integer> coeffs;   // p_M
  std::vector<Integer> reduced;  // p_M / (lambda - 1)
  std::vector<Integer> mu;       // mu_0 .. mu_{r-1}, unsigned
};

/// (-1)^r sum over X of (-1)^|X| r(X).
Integer beta_direct(const Matroid& m);

/// (M \ e) * (M^* \ e). Requires n >= 2.
FlipValue beta_via_flip(const Matroid& m, int epsilon, FlipEngine& engine);
FlipValue beta_via_flip(const Matroid& m, int epsilon);

/// Number of bases containing no broken circuit. `order` lists the ground
/// set from smallest to largest; empty means natural index order.
Integer nbc_count(const Matroid& m, const std::vector<int>& order = {});

CharPoly char_poly(const Matroid& m);

/// U_{n, n-k} * Trunc_{k+1}(M). Requires M simple and 0 <= k < r(M).
FlipValue mu_via_flip(const Matroid& m, int k, FlipEngine& engine);
FlipValue mu_via_flip(const Matroid& m, int k);

/// M * U_{n, n-r+1}, which counts nbc bases.
FlipValue nbc_flip_check(const Matroid& m, FlipEngine& engine);
FlipValue nbc_flip_check(const Matroid& m);

}  // namespace flipprod

#endif  // FLIPPROD_INVARIANTS_HPP_
