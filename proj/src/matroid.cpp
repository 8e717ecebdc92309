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

#include "flipprod/matroid.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_set>

#include "flipprod/error.hpp"

namespace flipprod {
namespace {

void check_size(int n) {
  if (n < 0 || n > kMaxGround) {
    throw Error(ErrorCode::kSizeCapExceeded,
                "ground set size " + std::to_string(n) + " exceeds " +
                    std::to_string(kMaxGround));
  }
}

void check_subset(const Matroid& m, Subset s) {
  if (s & ~m.ground()) {
    throw Error(ErrorCode::kSubsetOutOfRange,
                "subset references an element outside the ground set");
  }
}

void sort_unique(std::vector<Subset>& v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
}

// Enumerates the bases of a matroid given only by an independence test on
// r-subsets.
template <typename Independent>
std::vector<Subset> bases_by_testing(int n, int r, Independent&& independent) {
  std::vector<Subset> bases;
  for_each_k_subset(n, r, [&](Subset s) {
    if (independent(s)) bases.push_back(s);
  });
  return bases;
}

void append_u32(std::string& out, std::uint32_t v, int bytes) {
  for (int i = bytes - 1; i >= 0; --i) {
    out.push_back(static_cast<char>((v >> (8 * i)) & 0xffu));
  }
}

Key encode(int n, const std::vector<Subset>& bases) {
  Key key;
  key.reserve(5 + 3 * bases.size());
  append_u32(key, static_cast<std::uint32_t>(n), 1);
  append_u32(key, static_cast<std::uint32_t>(bases.size()), 4);
  for (Subset b : bases) append_u32(key, b, 3);
  return key;
}

std::vector<Subset> permuted_sorted(const std::vector<Subset>& bases,
                                    const std::vector<int>& perm) {
  std::vector<Subset> out;
  out.reserve(bases.size());
  for (Subset b : bases) out.push_back(permute(b, perm));
  std::sort(out.begin(), out.end());
  return out;
}

void check_iso_size(int n) {
  if (n > kMaxIsoCanonical) {
    throw Error(ErrorCode::kSizeCapExceeded,
                "isomorphism-canonical keys are limited to n <= " +
                    std::to_string(kMaxIsoCanonical));
  }
}

}  // namespace

bool satisfies_exchange_axiom(const std::vector<Subset>& sorted_bases) {
  auto is_basis = [&](Subset s) {
    return std::binary_search(sorted_bases.begin(), sorted_bases.end(), s);
  };
  for (Subset b1 : sorted_bases) {
    for (Subset b2 : sorted_bases) {
      if (b1 == b2) continue;
      for (Subset xs = b1 & ~b2; xs; xs &= xs - 1) {
        const Subset x = xs & (~xs + 1);
        bool found = false;
        for (Subset ys = b2 & ~b1; ys && !found; ys &= ys - 1) {
          const Subset y = ys & (~ys + 1);
          found = is_basis((b1 & ~x) | y);
        }
        if (!found) return false;
      }
    }
  }
  return true;
}

Matroid Matroid::from_bases(int n, std::vector<Subset> bases) {
  check_size(n);
  if (bases.empty()) {
    throw Error(ErrorCode::kInvalidInput, "basis family is empty");
  }
  for (Subset b : bases) {
    if (b & ~full_set(n)) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "basis references an element >= n");
    }
    if (cardinality(b) != cardinality(bases.front())) {
      throw Error(ErrorCode::kUnequalBasisSizes, "bases differ in size");
    }
  }
  sort_unique(bases);
  if (!satisfies_exchange_axiom(bases)) {
    throw Error(ErrorCode::kExchangeAxiomViolated,
                "family fails the basis exchange axiom");
  }
  const int r = cardinality(bases.front());
  return Matroid(n, r, std::move(bases));
}

Matroid Matroid::from_bases_unchecked(int n, std::vector<Subset> bases) {
  check_size(n);
  sort_unique(bases);
  if (bases.empty()) {
    throw Error(ErrorCode::kInternal, "trusted basis family is empty");
  }
  const int r = cardinality(bases.front());
  return Matroid(n, r, std::move(bases));
}

bool Matroid::is_basis(Subset s) const {
  return std::binary_search(bases_.begin(), bases_.end(), s);
}

int Matroid::rank_of(Subset s) const {
  const int cap = std::min(rank_, cardinality(s));
  int best = 0;
  for (Subset b : bases_) {
    best = std::max(best, cardinality(b & s));
    if (best == cap) break;
  }
  return best;
}

Subset Matroid::closure(Subset s) const {
  const int r = rank_of(s);
  Subset out = s;
  for (Subset rest = ground() & ~s; rest; rest &= rest - 1) {
    const Subset e = rest & (~rest + 1);
    if (rank_of(s | e) == r) out |= e;
  }
  return out;
}

Subset Matroid::loops() const {
  Subset covered = 0;
  for (Subset b : bases_) covered |= b;
  return ground() & ~covered;
}

Subset Matroid::coloops() const {
  Subset common = ground();
  for (Subset b : bases_) common &= b;
  return common;
}

std::vector<Subset> Matroid::circuits() const {
  std::vector<Subset> found;
  for (int k = 1; k <= std::min(rank_ + 1, n_); ++k) {
    const std::size_t smaller = found.size();
    for_each_k_subset(n_, k, [&](Subset s) {
      if (rank_of(s) == k) return;
      for (std::size_t i = 0; i < smaller; ++i) {
        if ((found[i] & s) == found[i]) return;
      }
      found.push_back(s);
    });
  }
  std::sort(found.begin(), found.end());
  return found;
}

bool Matroid::is_simple() const {
  if (loops() != 0) return false;
  for (int a = 0; a < n_; ++a) {
    for (int b = a + 1; b < n_; ++b) {
      if (rank_of(singleton(a) | singleton(b)) < 2) return false;
    }
  }
  return true;
}

Matroid uniform(int n, int r) {
  check_size(n);
  if (r < 0 || r > n) {
    throw Error(ErrorCode::kRankOutOfRange,
                "uniform rank must satisfy 0 <= r <= n");
  }
  std::vector<Subset> bases;
  for_each_k_subset(n, r, [&](Subset s) { bases.push_back(s); });
  return Matroid::from_bases_unchecked(n, std::move(bases));
}

Matroid graphic(int vertices, const std::vector<std::pair<int, int>>& edges) {
  const int n = static_cast<int>(edges.size());
  check_size(n);
  if (vertices < 0) {
    throw Error(ErrorCode::kIndexOutOfRange, "negative vertex count");
  }
  for (const auto& [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertices || v >= vertices) {
      throw Error(ErrorCode::kIndexOutOfRange, "edge endpoint out of range");
    }
  }
  std::vector<int> parent(vertices);
  auto find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  // Rank of an edge set = number of successful unions.
  auto forest_rank = [&](Subset s) {
    std::iota(parent.begin(), parent.end(), 0);
    int rank = 0;
    for (; s; s &= s - 1) {
      const auto& [u, v] = edges[lowest_element(s)];
      const int a = find(u), b = find(v);
      if (a != b) {
        parent[a] = b;
        ++rank;
      }
    }
    return rank;
  };
  const int r = forest_rank(full_set(n));
  return Matroid::from_bases_unchecked(
      n, bases_by_testing(n, r, [&](Subset s) { return forest_rank(s) == r; }));
}

Matroid from_matrix(const RationalMatrix& m, Orientation orientation) {
  if (m.entries.size() == 0) {
    throw Error(ErrorCode::kInvalidInput, "matrix is empty");
  }
  // One row per ground element, scaled to integers. Scaling a vector by a
  // nonzero constant does not change linear dependence.
  const bool rows = orientation == Orientation::kRows;
  DenseMatrix<Rational> elements(rows ? m.entries.rows() : m.entries.cols(),
                                 rows ? m.entries.cols() : m.entries.rows());
  for (Eigen::Index i = 0; i < elements.rows(); ++i) {
    for (Eigen::Index j = 0; j < elements.cols(); ++j) {
      elements(i, j) = rows ? m.entries(i, j) : m.entries(j, i);
    }
  }
  const int n = static_cast<int>(elements.rows());
  check_size(n);
  DenseMatrix<Integer> vectors(elements.rows(), elements.cols());
  for (Eigen::Index i = 0; i < elements.rows(); ++i) {
    Integer lcm(1);
    for (Eigen::Index j = 0; j < elements.cols(); ++j) {
      lcm = boost::multiprecision::lcm(
          lcm, boost::multiprecision::denominator(elements(i, j)));
    }
    for (Eigen::Index j = 0; j < elements.cols(); ++j) {
      vectors(i, j) = boost::multiprecision::numerator(elements(i, j)) *
                      (lcm / boost::multiprecision::denominator(elements(i, j)));
    }
  }
  auto rank = [&](Subset s) -> int {
    if (s == 0) return 0;
    DenseMatrix<Integer> sub(cardinality(s), vectors.cols());
    int row = 0;
    for (; s; s &= s - 1) sub.row(row++) = vectors.row(lowest_element(s));
    return static_cast<int>(bareiss_rank(sub));
  };
  const int r = rank(full_set(n));
  return Matroid::from_bases_unchecked(
      n, bases_by_testing(n, r, [&](Subset s) { return rank(s) == r; }));
}

Matroid from_matrix(const PrimeFieldMatrix& m, Orientation orientation) {
  if (m.entries.size() == 0) {
    throw Error(ErrorCode::kInvalidInput, "matrix is empty");
  }
  if (!is_small_prime(m.p) || m.p > 97) {
    throw Error(ErrorCode::kInvalidInput,
                "field characteristic must be a prime <= 97");
  }
  if ((m.entries.array() < 0).any() || (m.entries.array() >= m.p).any()) {
    throw Error(ErrorCode::kInvalidInput, "residue outside [0, p)");
  }
  const Eigen::MatrixXi vectors = orientation == Orientation::kRows
                                      ? Eigen::MatrixXi(m.entries)
                                      : Eigen::MatrixXi(m.entries.transpose());
  const int n = static_cast<int>(vectors.rows());
  check_size(n);
  auto rank = [&](Subset s) -> int {
    if (s == 0) return 0;
    Eigen::MatrixXi sub(cardinality(s), vectors.cols());
    int row = 0;
    for (; s; s &= s - 1) sub.row(row++) = vectors.row(lowest_element(s));
    return static_cast<int>(rank_mod_p(sub, m.p));
  };
  const int r = rank(full_set(n));
  return Matroid::from_bases_unchecked(
      n, bases_by_testing(n, r, [&](Subset s) { return rank(s) == r; }));
}

Minor deletion_with_map(const Matroid& m, Subset s) {
  check_subset(m, s);
  const Subset keep = m.ground() & ~s;
  const int r = m.rank_of(keep);
  std::vector<Subset> bases;
  for (Subset b : m.bases()) {
    if (cardinality(b & keep) == r) bases.push_back(compress(b & keep, keep));
  }
  return {Matroid::from_bases_unchecked(cardinality(keep), std::move(bases)),
          elements_of(keep)};
}

Minor contraction_with_map(const Matroid& m, Subset s) {
  check_subset(m, s);
  const Subset keep = m.ground() & ~s;
  const int r = m.rank_of(s);
  std::vector<Subset> bases;
  for (Subset b : m.bases()) {
    if (cardinality(b & s) == r) bases.push_back(compress(b & keep, keep));
  }
  return {Matroid::from_bases_unchecked(cardinality(keep), std::move(bases)),
          elements_of(keep)};
}

Matroid deletion(const Matroid& m, Subset s) {
  return deletion_with_map(m, s).matroid;
}

Matroid contraction(const Matroid& m, Subset s) {
  return contraction_with_map(m, s).matroid;
}

Matroid dual(const Matroid& m) {
  std::vector<Subset> bases;
  bases.reserve(m.bases().size());
  for (Subset b : m.bases()) bases.push_back(m.ground() & ~b);
  return Matroid::from_bases_unchecked(m.size(), std::move(bases));
}

Matroid direct_sum(const Matroid& a, const Matroid& b) {
  check_size(a.size() + b.size());
  std::vector<Subset> bases;
  bases.reserve(a.bases().size() * b.bases().size());
  for (Subset x : a.bases()) {
    for (Subset y : b.bases()) bases.push_back(x | (y << a.size()));
  }
  return Matroid::from_bases_unchecked(a.size() + b.size(), std::move(bases));
}

Matroid truncation(const Matroid& m, int k) {
  if (k < 0 || k > m.rank()) {
    throw Error(ErrorCode::kRankOutOfRange,
                "truncation rank must satisfy 0 <= k <= r(M)");
  }
  if (k == m.rank()) return m;
  std::unordered_set<Subset> independent;
  for (Subset b : m.bases()) {
    for_each_k_subset(m.rank(), k, [&](Subset positions) {
      independent.insert(expand(positions, b));
    });
  }
  return Matroid::from_bases_unchecked(
      m.size(), std::vector<Subset>(independent.begin(), independent.end()));
}

bool is_circuit(const Matroid& m, Subset x) {
  if (x == 0 || m.is_independent(x)) return false;
  for (Subset rest = x; rest; rest &= rest - 1) {
    if (!m.is_independent(x & ~(rest & (~rest + 1)))) return false;
  }
  return true;
}

bool is_circuit_hyperplane(const Matroid& m, Subset x) {
  return (x & ~m.ground()) == 0 && is_circuit(m, x) &&
         m.rank_of(x) == m.rank() - 1 && m.is_flat(x);
}

Matroid circuit_hyperplane_relax(const Matroid& m, Subset x) {
  check_subset(m, x);
  if (!is_circuit_hyperplane(m, x)) {
    throw Error(ErrorCode::kNotCircuitHyperplane,
                "subset is not both a circuit and a hyperplane");
  }
  std::vector<Subset> bases = m.bases();
  bases.push_back(x);
  return Matroid::from_bases_unchecked(m.size(), std::move(bases));
}

Matroid relabel(const Matroid& m, const std::vector<int>& perm) {
  if (static_cast<int>(perm.size()) != m.size()) {
    throw Error(ErrorCode::kInvalidInput, "permutation size mismatch");
  }
  std::vector<Subset> bases;
  bases.reserve(m.bases().size());
  for (Subset b : m.bases()) bases.push_back(permute(b, perm));
  return Matroid::from_bases_unchecked(m.size(), std::move(bases));
}

Key canonical_key(const Matroid& m) { return encode(m.size(), m.bases()); }

Key pair_key(const Matroid& m, const Matroid& n) {
  Key a = canonical_key(m);
  Key b = canonical_key(n);
  if (b < a) std::swap(a, b);
  return a + b;
}

std::vector<Subset> iso_canonical_bases(const Matroid& m) {
  check_iso_size(m.size());
  std::vector<int> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<Subset> best = m.bases();
  do {
    std::vector<Subset> image = permuted_sorted(m.bases(), perm);
    if (image < best) best = std::move(image);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

Key iso_canonical_key(const Matroid& m) {
  return encode(m.size(), iso_canonical_bases(m));
}

Key iso_pair_key(const Matroid& m, const Matroid& n) {
  check_iso_size(m.size());
  std::vector<int> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  Key best;
  bool first = true;
  do {
    const Key km = encode(m.size(), permuted_sorted(m.bases(), perm));
    const Key kn = encode(n.size(), permuted_sorted(n.bases(), perm));
    for (Key candidate : {km + kn, kn + km}) {
      if (first || candidate < best) {
        best = std::move(candidate);
        first = false;
      }
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

}  // namespace flipprod
