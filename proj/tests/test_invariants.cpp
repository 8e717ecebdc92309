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

#include <algorithm>

#include "flipprod/error.hpp"
#include "flipprod/invariants.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace flipprod;
using namespace flipprod::testing;

namespace {

const std::vector<std::pair<int, int>> kK3 = {{0, 1}, {0, 2}, {1, 2}};
const std::vector<std::pair<int, int>> kK4 = {{0, 1}, {0, 2}, {0, 3},
                                              {1, 2}, {1, 3}, {2, 3}};

std::vector<Matroid> samples() {
  const Graph glued = glued_graph();
  return {uniform(3, 2), uniform(5, 3), graphic(4, kK4), binary_matroid(),
          graphic(glued.vertices, glued.edges),
          direct_sum(uniform(2, 1), uniform(3, 2))};
}

// mu_k = |[lambda^(r-1-k)] p / (lambda - 1)|, by synthetic division.
std::vector<long long> brute_mu(int n, const Sets& bases) {
  std::vector<long long> p = brute_char_poly(n, bases);
  const int r = static_cast<int>(p.size()) - 1;
  std::vector<long long> q(r, 0);
  long long carry = 0;
  for (int j = r; j >= 1; --j) {
    carry = p[j] + carry;
    q[j - 1] = carry;
  }
  std::vector<long long> mu;
  for (int k = 0; k < r; ++k) mu.push_back(std::llabs(q[r - 1 - k]));
  return mu;
}

}  // namespace

TEST_CASE("beta invariant") {
  CHECK(beta_direct(uniform(1, 1)) == 1);
  for (int n = 2; n <= 7; ++n) {
    for (int d = 1; d <= n - 1; ++d) {
      CHECK(beta_direct(uniform(n, d)) == binomial(n - 2, d - 1));
    }
  }
  CHECK(beta_direct(direct_sum(uniform(2, 1), uniform(3, 2))) == 0);
  CHECK(beta_direct(direct_sum(uniform(1, 1), uniform(1, 1))) == 0);
  for (const Matroid& m : samples()) {
    CHECK(beta_direct(m) == brute_beta(m.size(), as_sets(m)));
  }
}

TEST_CASE("beta via flip") {
  CHECK(brute_beta(3, as_sets(uniform(3, 2))) == 1);
  CHECK(beta_via_flip(uniform(3, 2), 0) == FlipValue(1));
  const long long b42 = brute_beta(4, as_sets(uniform(4, 2)));
  CHECK(b42 == 2);
  for (int e = 0; e < 4; ++e) CHECK(beta_via_flip(uniform(4, 2), e) == FlipValue(b42));
  const Matroid with_coloop = direct_sum(uniform(3, 2), uniform(1, 1));
  CHECK(beta_via_flip(with_coloop, 3).is_zero());
  FlipEngine engine;
  for (const Matroid& m : samples()) {
    for (int e = 0; e < m.size(); ++e) {
      CHECK(beta_via_flip(m, e, engine) == FlipValue(brute_beta(m.size(), as_sets(m))));
    }
  }
  CHECK_THROWS_AS(beta_via_flip(uniform(1, 1), 0), Error);
  CHECK_THROWS_AS(beta_via_flip(uniform(3, 1), 3), Error);
}

TEST_CASE("nbc bases") {
  for (int n = 1; n <= 7; ++n) {
    for (int r = 1; r <= n; ++r) CHECK(nbc_count(uniform(n, r)) == binomial(n - 1, r - 1));
  }
  CHECK(nbc_count(graphic(2, {{0, 1}, {1, 1}})) == 0);

  std::vector<int> order = {0, 1, 2};
  do {
    CHECK(brute_nbc(3, as_sets(graphic(3, kK3)), order) == 2);
    CHECK(nbc_count(graphic(3, kK3), order) == 2);
  } while (std::next_permutation(order.begin(), order.end()));

  for (const Matroid& m : samples()) {
    std::vector<int> ord(m.size());
    std::iota(ord.begin(), ord.end(), 0);
    for (int k = 0; k < 5; ++k) {
      CHECK(nbc_count(m, ord) == brute_nbc(m.size(), as_sets(m), ord));
      std::rotate(ord.begin(), ord.begin() + 1, ord.end());
      std::swap(ord.front(), ord.back());
    }
  }
}

TEST_CASE("characteristic polynomial") {
  const CharPoly cp = char_poly(uniform(3, 2));
  CHECK(cp.coeffs == std::vector<Integer>{2, -3, 1});
  CHECK(cp.reduced == std::vector<Integer>{-2, 1});
  CHECK(cp.mu == std::vector<Integer>{1, 2});
  for (const Matroid& m : samples()) {
    const CharPoly c = char_poly(m);
    const auto expected = brute_char_poly(m.size(), as_sets(m));
    REQUIRE(c.coeffs.size() == expected.size());
    for (std::size_t j = 0; j < expected.size(); ++j) CHECK(c.coeffs[j] == expected[j]);
    if (m.loops()) continue;
    const auto mu = brute_mu(m.size(), as_sets(m));
    REQUIRE(c.mu.size() == mu.size());
    for (std::size_t k = 0; k < mu.size(); ++k) CHECK(c.mu[k] == mu[k]);
  }
  // A loop makes the polynomial vanish.
  const CharPoly looped = char_poly(graphic(2, {{0, 1}, {0, 0}}));
  for (const Integer& c : looped.coeffs) CHECK(c == 0);
}

TEST_CASE("mu via truncation") {
  CHECK(mu_via_flip(uniform(3, 2), 1) == FlipValue(2));
  CHECK(mu_via_flip(uniform(3, 2), 0) == FlipValue(1));
  const Matroid k4 = graphic(4, kK4);
  const auto mu = brute_mu(6, as_sets(k4));
  CHECK(mu == std::vector<long long>{1, 5, 6});
  for (int k = 0; k < 3; ++k) CHECK(mu_via_flip(k4, k) == FlipValue(mu[k]));
  CHECK_THROWS_AS(mu_via_flip(graphic(3, {{0, 1}, {0, 1}, {1, 2}}), 0), Error);
  CHECK_THROWS_AS(mu_via_flip(uniform(3, 2), 2), Error);
}

TEST_CASE("nbc via the flip product") {
  CHECK(nbc_flip_check(uniform(5, 3)) == FlipValue(binomial(4, 2)));
  CHECK(nbc_flip_check(graphic(3, {{0, 1}, {2, 2}, {1, 2}})).is_zero());
  const Matroid b = binary_matroid();
  std::vector<int> ord = {0, 1, 2, 3, 4, 5, 6};
  const long long expected = brute_nbc(7, as_sets(b), ord);
  CHECK(expected == 13);
  CHECK(nbc_flip_check(b) == FlipValue(expected));
}
