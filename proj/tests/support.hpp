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

#ifndef FLIPPROD_TESTS_SUPPORT_HPP_
#define FLIPPROD_TESTS_SUPPORT_HPP_

// Brute-force reference implementations. None of them call into the library
// beyond the Matroid accessors, so expected values computed here are
// independent of the code under test.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numeric>
#include <set>
#include <utility>
#include <vector>

#include "flipprod/matroid.hpp"

namespace flipprod::testing {

using Sets = std::vector<std::uint32_t>;

inline int popcount(std::uint32_t s) { return __builtin_popcount(s); }

inline long long binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  long long c = 1;
  for (int i = 1; i <= k; ++i) c = c * (n - k + i) / i;
  return c;
}

inline long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

// Exchange axiom, checked literally on a family of sets.
inline bool brute_exchange(const Sets& bases) {
  std::set<std::uint32_t> family(bases.begin(), bases.end());
  for (std::uint32_t b1 : family) {
    for (std::uint32_t b2 : family) {
      for (int x = 0; x < 32; ++x) {
        if (!((b1 >> x) & 1u) || ((b2 >> x) & 1u)) continue;
        bool found = false;
        for (int y = 0; y < 32 && !found; ++y) {
          if (!((b2 >> y) & 1u) || ((b1 >> y) & 1u)) continue;
          found = family.count((b1 & ~(1u << x)) | (1u << y)) > 0;
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

inline int brute_rank(const Sets& bases, std::uint32_t s) {
  int best = 0;
  for (std::uint32_t b : bases) best = std::max(best, popcount(b & s));
  return best;
}

inline bool brute_independent(const Sets& bases, std::uint32_t s) {
  return brute_rank(bases, s) == popcount(s);
}

inline bool brute_circuit(const Sets& bases, std::uint32_t s) {
  if (s == 0 || brute_independent(bases, s)) return false;
  for (int e = 0; e < 32; ++e) {
    if (((s >> e) & 1u) && !brute_independent(bases, s & ~(1u << e))) return false;
  }
  return true;
}

inline bool brute_flat(int n, const Sets& bases, std::uint32_t s) {
  const int r = brute_rank(bases, s);
  for (int e = 0; e < n; ++e) {
    if (!((s >> e) & 1u) && brute_rank(bases, s | (1u << e)) == r) return false;
  }
  return true;
}

// Bases of the matroid with the given rank function.
template <typename Rank>
Sets bases_from_rank(int n, Rank rank) {
  const int r = rank((1u << n) - 1);
  Sets out;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (popcount(s) == r && rank(s) == r) out.push_back(s);
  }
  return out;
}

// Spanning forest size by union-find.
inline int forest_rank(int vertices, const std::vector<std::pair<int, int>>& edges,
                       std::uint32_t s) {
  std::vector<int> parent(vertices);
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](int v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int rank = 0;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!((s >> i) & 1u)) continue;
    const int a = find(edges[i].first), b = find(edges[i].second);
    if (a != b) {
      parent[a] = b;
      ++rank;
    }
  }
  return rank;
}

// Rank of a set of GF(2) column vectors given as bit masks.
inline int gf2_rank(std::vector<std::uint32_t> columns) {
  int rank = 0;
  for (int bit = 0; bit < 32; ++bit) {
    auto pivot = std::find_if(columns.begin(), columns.end(),
                              [&](std::uint32_t c) { return (c >> bit) & 1u; });
    if (pivot == columns.end()) continue;
    const std::uint32_t p = *pivot;
    columns.erase(pivot);
    for (std::uint32_t& c : columns) {
      if ((c >> bit) & 1u) c ^= p;
    }
    ++rank;
  }
  return rank;
}

// Rank of a small complex or real matrix by elimination with a tolerance.
template <typename T>
int numeric_rank(std::vector<std::vector<T>> a) {
  int rank = 0;
  const std::size_t cols = a.empty() ? 0 : a[0].size();
  for (std::size_t c = 0; c < cols && rank < static_cast<int>(a.size()); ++c) {
    std::size_t best = rank;
    for (std::size_t i = rank; i < a.size(); ++i) {
      if (std::abs(a[i][c]) > std::abs(a[best][c])) best = i;
    }
    if (std::abs(a[best][c]) < 1e-9) continue;
    std::swap(a[best], a[rank]);
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (i == static_cast<std::size_t>(rank)) continue;
      const T f = a[i][c] / a[rank][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[rank][k];
    }
    ++rank;
  }
  return rank;
}

// beta(M) = (-1)^r(M) Sum_S (-1)^|S| r(S).
inline long long brute_beta(int n, const Sets& bases) {
  const int r = brute_rank(bases, (1u << n) - 1);
  long long sum = 0;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    sum += (popcount(s) % 2 ? -1 : 1) * brute_rank(bases, s);
  }
  return r % 2 ? -sum : sum;
}

// Ascending coefficients of Sum_S (-1)^|S| t^(r(E) - r(S)).
inline std::vector<long long> brute_char_poly(int n, const Sets& bases) {
  const int r = brute_rank(bases, (1u << n) - 1);
  std::vector<long long> c(r + 1, 0);
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    c[r - brute_rank(bases, s)] += popcount(s) % 2 ? -1 : 1;
  }
  return c;
}

// Bases avoiding every broken circuit, where `order` lists elements from
// smallest to largest.
inline long long brute_nbc(int n, const Sets& bases, const std::vector<int>& order) {
  std::vector<std::uint32_t> broken;
  for (std::uint32_t s = 1; s < (1u << n); ++s) {
    if (!brute_circuit(bases, s)) continue;
    for (int e : order) {
      if ((s >> e) & 1u) {
        broken.push_back(s & ~(1u << e));
        break;
      }
    }
  }
  long long count = 0;
  for (std::uint32_t b : bases) {
    bool ok = true;
    for (std::uint32_t c : broken) ok = ok && (b & c) != c;
    count += ok;
  }
  return count;
}

// Independent sets of the Hadamard product: r_M(F) + r_N(F) >= |F| + 1 for
// every nonempty F inside.
inline Sets brute_hadamard(int n, const Sets& m, const Sets& nn) {
  auto good = [&](std::uint32_t i) {
    for (std::uint32_t f = i; f; f = (f - 1) & i) {
      if (brute_rank(m, f) + brute_rank(nn, f) < popcount(f) + 1) return false;
    }
    return true;
  };
  int best = 0;
  Sets indep;
  for (std::uint32_t s = 0; s < (1u << n); ++s) {
    if (good(s)) {
      indep.push_back(s);
      best = std::max(best, popcount(s));
    }
  }
  Sets out;
  for (std::uint32_t s : indep) {
    if (popcount(s) == best) out.push_back(s);
  }
  return out;
}

// Edge list: (from, to, gain). Z_k frame matrix over C with omega = e^(2 pi i/k).
struct RawGainEdge {
  int from, to;
  std::vector<long long> gain;
};

inline int brute_zk_rank(int vertices, int k, const std::vector<RawGainEdge>& edges,
                         std::uint32_t s) {
  const double pi = std::acos(-1.0);
  std::vector<std::vector<std::complex<double>>> rows;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!((s >> i) & 1u)) continue;
    std::vector<std::complex<double>> row(vertices, 0.0);
    const double angle = 2 * pi * static_cast<double>(edges[i].gain[0]) / k;
    row[edges[i].to] += 1.0;
    row[edges[i].from] -= std::polar(1.0, angle);
    rows.push_back(row);
  }
  return numeric_rank(rows);
}

// Z^d: rows [incidence | gain] over the reals.
inline int brute_zd_rank(int vertices, int d, const std::vector<RawGainEdge>& edges,
                         std::uint32_t s) {
  std::vector<std::vector<double>> rows;
  for (std::size_t i = 0; i < edges.size(); ++i) {
    if (!((s >> i) & 1u)) continue;
    std::vector<double> row(vertices + d, 0.0);
    row[edges[i].to] += 1.0;
    row[edges[i].from] -= 1.0;
    for (int j = 0; j < d; ++j) row[vertices + j] = static_cast<double>(edges[i].gain[j]);
    rows.push_back(row);
  }
  return numeric_rank(rows);
}

inline Sets as_sets(const Matroid& m) { return Sets(m.bases().begin(), m.bases().end()); }

}  // namespace flipprod::testing

#endif  // FLIPPROD_TESTS_SUPPORT_HPP_
