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

#include <random>

#include "flipprod/checks.hpp"
#include "flipprod/enumeration.hpp"
#include "flipprod/flip.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace flipprod;
using namespace flipprod::testing;

namespace {

Matroid graph_matroid(const Graph& g) { return graphic(g.vertices, g.edges); }

}  // namespace

TEST_CASE("flip value arithmetic") {
  const FlipValue inf = FlipValue::infinite();
  CHECK((FlipValue(0) * inf).is_zero());
  CHECK((inf * FlipValue(0)).is_zero());
  CHECK((inf * FlipValue(3)).is_infinite());
  CHECK((inf + FlipValue(0)).is_infinite());
  CHECK(FlipValue(2) + FlipValue(3) == FlipValue(5));
  CHECK(FlipValue(7) < inf);
  CHECK(inf.to_string() == "inf");
  CHECK_THROWS_AS(inf.value(), Error);
}

TEST_CASE("one-element base cases") {
  const Matroid free1 = uniform(1, 1), loop1 = uniform(1, 0);
  CHECK(flip_product(free1, free1) == FlipValue(1));
  CHECK(flip_product(free1, loop1).is_zero());
  CHECK(flip_product(loop1, free1).is_zero());
  CHECK(flip_product(loop1, loop1).is_zero());
  CHECK(flip_product(Matroid(), Matroid()) == FlipValue(1));
}

TEST_CASE("glued and moved-edge graphs") {
  const Matroid glued = graph_matroid(glued_graph());
  const Matroid moved = graph_matroid(moved_graph());
  CHECK(flip_product(glued, glued).is_zero());
  CHECK(flip_product(moved, moved) == FlipValue(16));
  CHECK_FALSE(is_flip_positive(glued, glued));
  CHECK(is_flip_positive(moved, moved));

  const ZeroCertificate cert = flip_zero_certificate(glued, glued);
  CHECK(cert.kind == ZeroCertificate::Kind::kBadSubset);
  CHECK(cert.witness == 0b111111u);  // the K4 edges
  CHECK(flip_zero_certificate(moved, moved).kind == ZeroCertificate::Kind::kNone);

  // The K4 edges violate the Hadamard inequality, so they are dependent in
  // the Hadamard product.
  const Matroid h = hadamard_matroid(glued, glued);
  CHECK_FALSE(h.is_independent(0b111111u));
  CHECK(h.rank() < glued.size());
}

TEST_CASE("uniform pairs give binomial coefficients") {
  FlipEngine engine;
  for (int n = 1; n <= 10; ++n) {
    for (int r = 1; r <= n; ++r) {
      const FlipValue v = engine.product(uniform(n, r), uniform(n, n - r + 1));
      REQUIRE(v == FlipValue(binomial(n - 1, r - 1)));
    }
  }
  // U_{n,n-1} * U_{n,2} = n - 1
  for (int n = 3; n <= 9; ++n) {
    CHECK(engine.product(uniform(n, n - 1), uniform(n, 2)) == FlipValue(n - 1));
  }
}

TEST_CASE("binary rank-4 matroid") {
  const Matroid b = binary_matroid();
  FlipEngine engine;
  CHECK(engine.product(b, b) == FlipValue(6));
  for (int e = 0; e < 7; ++e) {
    CHECK(engine.product_with_pivot(b, b, e) == FlipValue(6));
  }
  FlipConfig auto_pivot;
  auto_pivot.pivot_rule = PivotRule::kMinBranching;
  CHECK(flip_product(b, b, auto_pivot) == FlipValue(6));
  FlipConfig iso;
  iso.memo_mode = MemoMode::kIsoCanonical;
  iso.parallel_width = 4;
  CHECK(flip_product(b, b, iso) == FlipValue(6));
  FlipConfig raw;
  raw.memoize = false;
  CHECK(flip_product(b, b, raw) == FlipValue(6));
}

TEST_CASE("rank regimes") {
  // Deficit: r(M) + r(N) < n + 1.
  CHECK(flip_product(uniform(3, 1), uniform(3, 2)).is_zero());
  CHECK(flip_zero_certificate(uniform(3, 1), uniform(3, 2)).kind ==
        ZeroCertificate::Kind::kRankDeficit);
  // Excess: zero or infinite.
  CHECK(flip_product(uniform(3, 3), uniform(3, 2)).is_infinite());
  const Matroid pair_free = direct_sum(uniform(2, 1), uniform(2, 2));
  CHECK(flip_product(pair_free, pair_free).is_zero());
  // Loops.
  const Matroid looped = graphic(2, {{0, 1}, {1, 1}});
  CHECK(flip_product(looped, uniform(2, 2)).is_zero());
  const ZeroCertificate cert = flip_zero_certificate(looped, uniform(2, 2));
  CHECK(cert.kind == ZeroCertificate::Kind::kLoop);
  CHECK(cert.witness == 0b10u);
  CHECK_FALSE(is_flip_positive(looped, uniform(2, 2)));
  // Shared coloop.
  const Matroid m = direct_sum(uniform(1, 1), uniform(2, 1));
  const Matroid n = direct_sum(uniform(1, 1), uniform(2, 1));
  CHECK(flip_product(m, n).is_zero());
  CHECK(flip_zero_certificate(m, n).kind == ZeroCertificate::Kind::kSharedColoop);
}

TEST_CASE("ground set mismatch is rejected") {
  CHECK_THROWS_AS(flip_product(uniform(2, 1), uniform(3, 2)), Error);
}

TEST_CASE("hadamard product against the independent-set definition") {
  CHECK(hadamard_matroid(uniform(3, 2), uniform(3, 2)) == uniform(3, 3));
  CHECK(hadamard_matroid(uniform(1, 1), uniform(1, 1)) == uniform(1, 1));
  for (int n = 1; n <= 4; ++n) {
    std::vector<Matroid> all;
    for (int r = 1; r <= n; ++r) {
      for (const Matroid& m : enumerate_matroids(n, r).reps) all.push_back(m);
    }
    for (const Matroid& m : all) {
      for (const Matroid& nn : all) {
        if (m.loops() || nn.loops()) continue;
        const Sets expected = brute_hadamard(n, as_sets(m), as_sets(nn));
        REQUIRE(hadamard_matroid(m, nn).bases() == expected);
      }
    }
  }
}

TEST_CASE("positivity test matches the literal inequality") {
  std::mt19937_64 rng(7);
  for (int i = 0; i < 200; ++i) {
    const int n = 3 + i % 4;
    const int r = 1 + static_cast<int>(rng() % n);
    const Matroid m = random_matroid(n, r, 2, false, rng);
    const Matroid nn = random_matroid(n, n + 1 - r, 3, false, rng);
    bool expected = m.loops() == 0 && nn.loops() == 0;
    for (Subset f = 1; f < (1u << n) && expected; ++f) {
      expected = brute_rank(as_sets(m), f) + brute_rank(as_sets(nn), f) >= popcount(f) + 1;
    }
    REQUIRE(is_flip_positive(m, nn) == expected);
  }
}

TEST_CASE("engine memo and parallel expansion") {
  FlipConfig cfg;
  cfg.parallel_width = 4;
  FlipEngine parallel(cfg);
  FlipEngine serial;
  const Matroid moved = graph_matroid(moved_graph());
  CHECK(parallel.product(moved, moved) == serial.product(moved, moved));
  CHECK(serial.memo_size() > 0);
  serial.clear();
  CHECK(serial.memo_size() == 0);
}
