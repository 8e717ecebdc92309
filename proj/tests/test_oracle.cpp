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

#include "doctest.h"

#include "flipprod/error.hpp"
#include "flipprod/flip.hpp"
#include "flipprod/linalg.hpp"
#include "flipprod/oracle.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace flipprod;
using namespace flipprod::testing;

namespace {

// Maximal chains of flats by extending each flat with every cover.
long long brute_chain_count(int n, const Sets& bases, std::uint32_t flat) {
  const std::uint32_t all = (1u << n) - 1;
  if (flat == all) return 1;
  const int r = brute_rank(bases, flat);
  long long total = 0;
  for (std::uint32_t g = 0; g <= all; ++g) {
    if ((g & flat) == flat && g != flat && brute_rank(bases, g) == r + 1 &&
        brute_flat(n, bases, g)) {
      total += brute_chain_count(n, bases, g);
    }
  }
  return total;
}

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return ErrorCode::kInternal;
}

}  // namespace

TEST_CASE("maximal chains of flats") {
  CHECK(maximal_chains(uniform(3, 2)).size() == 3);
  CHECK(maximal_chains(uniform(1, 1)).size() == 1);
  for (int n = 1; n <= 5; ++n) {
    CHECK(static_cast<long long>(maximal_chains(uniform(n, n)).size()) == factorial(n));
  }
  const Graph g = moved_graph();
  for (const Matroid& m : {binary_matroid(), graphic(g.vertices, g.edges), uniform(6, 3)}) {
    const auto chains = maximal_chains(m);
    CHECK(static_cast<long long>(chains.size()) ==
          brute_chain_count(m.size(), as_sets(m), 0));
    for (const ChainCone& c : chains) {
      CHECK(static_cast<int>(c.rays().size()) == m.rank() - 1);
    }
  }
  CHECK(code_of([] { maximal_chains(graphic(2, {{0, 1}, {1, 1}})); }) ==
        ErrorCode::kHasLoop);
}

TEST_CASE("lattice index") {
  CHECK(lattice_index({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, 3) == 1);
  CHECK(lattice_index({{2, 0}, {0, 1}}, 2) == 2);
  CHECK(lattice_index({{1, 1}, {1, -1}}, 2) == std::llabs(1 * -1 - 1 * 1));
  // Redundant generators: (2,0), (0,2), (1,1) span the even-sum lattice.
  CHECK(lattice_index({{2, 0}, {0, 2}, {1, 1}}, 2) == 2);
  CHECK(code_of([] { lattice_index({{1, 2}, {2, 4}}, 2); }) == ErrorCode::kNotFullRank);
}

TEST_CASE("generic shifts are reproducible") {
  const GenericShift a = draw_shift(5, 42, 0);
  const GenericShift b = draw_shift(5, 42, 0);
  const GenericShift c = draw_shift(5, 42, 1);
  CHECK(a.w == b.w);
  CHECK(a.w != c.w);
  CHECK(a.w.size() == 5);
}

TEST_CASE("oracle on small uniform pairs") {
  CHECK(oracle_flip(uniform(3, 2), uniform(3, 2)) == FlipValue(2));
  CHECK(oracle_flip(uniform(1, 1), uniform(1, 1)) == FlipValue(1));
  CHECK(oracle_flip(uniform(5, 3), uniform(5, 3)) == FlipValue(6));
  for (int n = 1; n <= 6; ++n) {
    for (int r = 1; r <= n; ++r) {
      const OracleResult res = oracle_flip_detailed(uniform(n, r), uniform(n, n + 1 - r), 0, 9);
      CHECK(res.value == FlipValue(binomial(n - 1, r - 1)));
      for (const Integer& mult : res.multiplicities) CHECK(mult == 1);
    }
  }
}

TEST_CASE("oracle agrees with the recursion on larger inputs") {
  const Matroid b = binary_matroid();
  for (int e = 0; e < 7; ++e) CHECK(oracle_flip(b, b, e, 100 + e) == FlipValue(6));
  const Graph g = moved_graph();
  const Matroid moved = graphic(g.vertices, g.edges);
  CHECK(oracle_flip(moved, moved, 0, 3) == FlipValue(16));
  const Graph h = glued_graph();
  const Matroid glued = graphic(h.vertices, h.edges);
  CHECK(oracle_flip(glued, glued, 0, 3).is_zero());
}

TEST_CASE("oracle preconditions") {
  CHECK(code_of([] { oracle_flip(uniform(3, 2), uniform(2, 2)); }) ==
        ErrorCode::kGroundSetMismatch);
  CHECK(code_of([] { oracle_flip(graphic(2, {{0, 1}, {0, 0}}), uniform(2, 2)); }) ==
        ErrorCode::kHasLoop);
  CHECK(code_of([] { oracle_flip(uniform(3, 3), uniform(3, 2)); }) ==
        ErrorCode::kRankRegimeUnsupported);
  CHECK(code_of([] { oracle_flip(uniform(3, 2), uniform(3, 2), 3); }) ==
        ErrorCode::kIndexOutOfRange);
}
