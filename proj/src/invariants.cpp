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

#include "flipprod/invariants.hpp"

#include <numeric>

#include "flipprod/error.hpp"

namespace flipprod {

Integer beta_direct(const Matroid& m) {
  long long sum = 0;
  const std::size_t count = std::size_t{1} << m.size();
  for (std::size_t s = 0; s < count; ++s) {
    const Subset x = static_cast<Subset>(s);
    const int r = m.rank_of(x);
    sum += (cardinality(x) % 2 == 0) ? r : -r;
  }
  return Integer(m.rank() % 2 == 0 ? sum : -sum);
}

FlipValue beta_via_flip(const Matroid& m, int epsilon, FlipEngine& engine) {
  if (m.size() < 2) {
    throw Error(ErrorCode::kInvalidInput,
                "beta via flip needs at least two elements");
  }
  if (epsilon < 0 || epsilon >= m.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "element outside ground set");
  }
  const Subset e = singleton(epsilon);
  return engine.product(deletion(m, e), deletion(dual(m), e));
}

FlipValue beta_via_flip(const Matroid& m, int epsilon) {
  FlipEngine engine;
  return beta_via_flip(m, epsilon, engine);
}

Integer nbc_count(const Matroid& m, const std::vector<int>& order) {
  if (m.loops() != 0) return Integer(0);
  std::vector<int> position(m.size());
  if (order.empty()) {
    std::iota(position.begin(), position.end(), 0);
  } else {
    if (static_cast<int>(order.size()) != m.size()) {
      throw Error(ErrorCode::kInvalidInput, "ordering size mismatch");
    }
    for (int i = 0; i < m.size(); ++i) position[order[i]] = i;
  }
  std::vector<Subset> broken;
  for (Subset c : m.circuits()) {
    int smallest = lowest_element(c);
    for (Subset rest = c; rest; rest &= rest - 1) {
      const int e = lowest_element(rest);
      if (position[e] < position[smallest]) smallest = e;
    }
    broken.push_back(c & ~singleton(smallest));
  }
  Integer count(0);
  for (Subset b : m.bases()) {
    bool ok = true;
    for (Subset bc : broken) {
      if ((bc & b) == bc) {
        ok = false;
        break;
      }
    }
    if (ok) ++count;
  }
  return count;
}

CharPoly char_poly(const Matroid& m) {
  const int r = m.rank();
  std::vector<long long> coeffs(r + 1, 0);
  const std::size_t count = std::size_t{1} << m.size();
  for (std::size_t s = 0; s < count; ++s) {
    const Subset a = static_cast<Subset>(s);
    coeffs[r - m.rank_of(a)] += (cardinality(a) % 2 == 0) ? 1 : -1;
  }
  CharPoly out;
  for (long long c : coeffs) out.coeffs.emplace_back(c);
  if (r == 0) return out;

  // Synthetic division by (lambda - 1), highest degree first.
  out.reduced.assign(r, Integer(0));
  Integer carry(0);
  for (int j = r; j >= 1; --j) {
    carry += out.coeffs[j];
    out.reduced[j - 1] = carry;
  }
  if (!(carry + out.coeffs[0]).is_zero()) {
    throw Error(ErrorCode::kInternal,
                "characteristic polynomial does not vanish at 1");
  }
  out.mu.resize(r);
  for (int i = 0; i < r; ++i) {
    const Integer& c = out.reduced[r - 1 - i];
    out.mu[i] = (i % 2 == 0) ? c : Integer(-c);
  }
  return out;
}

FlipValue mu_via_flip(const Matroid& m, int k, FlipEngine& engine) {
  if (!m.is_simple()) {
    throw Error(ErrorCode::kNotSimple, "matroid has loops or parallel pairs");
  }
  if (k < 0 || k >= m.rank()) {
    throw Error(ErrorCode::kIndexOutOfRange, "need 0 <= k < r(M)");
  }
  return engine.product(uniform(m.size(), m.size() - k),
                        truncation(m, k + 1));
}

FlipValue mu_via_flip(const Matroid& m, int k) {
  FlipEngine engine;
  return mu_via_flip(m, k, engine);
}

FlipValue nbc_flip_check(const Matroid& m, FlipEngine& engine) {
  if (m.rank() == 0) return FlipValue(m.size() == 0 ? 1 : 0);
  return engine.product(m, uniform(m.size(), m.size() - m.rank() + 1));
}

FlipValue nbc_flip_check(const Matroid& m) {
  FlipEngine engine;
  return nbc_flip_check(m, engine);
}

}  // namespace flipprod
