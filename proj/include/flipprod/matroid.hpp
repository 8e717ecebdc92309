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

#ifndef FLIPPROD_MATROID_HPP_
#define FLIPPROD_MATROID_HPP_

#include <string>
#include <utility>
#include <vector>

#include <Eigen/Core>

#include "flipprod/linalg.hpp"
#include "flipprod/subset.hpp"

namespace flipprod {

/// A matroid on {0, ..., n-1} given by its sorted family of bases. Every
/// constructor reduces to this form. Values are immutable once built.
class Matroid {
 public:
  /// The matroid on the empty ground set (single basis: the empty set).
  Matroid() : n_(0), rank_(0), bases_{0} {}

  /// Validating constructor: checks indices, equal basis sizes and the
  /// basis exchange axiom.
  static Matroid from_bases(int n, std::vector<Subset> bases);

  /// Trusted constructor for families that are bases by construction.
  /// Sorts and deduplicates, no axiom check.
  static Matroid from_bases_unchecked(int n, std::vector<Subset> bases);

  int size() const { return n_; }
  int rank() const { return rank_; }
  Subset ground() const { return full_set(n_); }
  const std::vector<Subset>& bases() const { return bases_; }

  bool is_basis(Subset s) const;
  int rank_of(Subset s) const;
  bool is_independent(Subset s) const { return rank_of(s) == cardinality(s); }
  Subset closure(Subset s) const;
  bool is_flat(Subset s) const { return closure(s) == s; }

  Subset loops() const;
  Subset coloops() const;
  bool is_loop(int e) const { return contains(loops(), e); }
  bool is_coloop(int e) const { return contains(coloops(), e); }

  /// Inclusion-minimal dependent sets, scanned over sizes 1..rank+1.
  std::vector<Subset> circuits() const;

  /// No loops and no parallel pairs.
  bool is_simple() const;

  friend bool operator==(const Matroid& a, const Matroid& b) {
    return a.n_ == b.n_ && a.bases_ == b.bases_;
  }

 private:
  Matroid(int n, int rank, std::vector<Subset> bases)
      : n_(n), rank_(rank), bases_(std::move(bases)) {}

  int n_;
  int rank_;
  std::vector<Subset> bases_;
};

/// True when the family satisfies the basis exchange axiom.
bool satisfies_exchange_axiom(const std::vector<Subset>& sorted_bases);

Matroid uniform(int n, int r);

/// Graphic matroid of a multigraph; loops and parallel edges allowed. Ground
/// element i is edges[i].
Matroid graphic(int vertices, const std::vector<std::pair<int, int>>& edges);

enum class Orientation { kRows, kColumns };

struct RationalMatrix {
  DenseMatrix<Rational> entries;
};

struct PrimeFieldMatrix {
  Eigen::MatrixXi entries;  // residues in [0, p)
  int p = 2;
};

Matroid from_matrix(const RationalMatrix& m, Orientation orientation);
Matroid from_matrix(const PrimeFieldMatrix& m, Orientation orientation);

/// A minor together with index_map[new_index] = old_index.
struct Minor {
  Matroid matroid;
  std::vector<int> index_map;
};

Minor deletion_with_map(const Matroid& m, Subset s);
Minor contraction_with_map(const Matroid& m, Subset s);
Matroid deletion(const Matroid& m, Subset s);
Matroid contraction(const Matroid& m, Subset s);
Matroid dual(const Matroid& m);
/// Ground set of `a` followed by the ground set of `b`.
Matroid direct_sum(const Matroid& a, const Matroid& b);
Matroid truncation(const Matroid& m, int k);
bool is_circuit(const Matroid& m, Subset x);
bool is_circuit_hyperplane(const Matroid& m, Subset x);
Matroid circuit_hyperplane_relax(const Matroid& m, Subset x);

/// Applies a ground-set permutation (element e becomes perm[e]).
Matroid relabel(const Matroid& m, const std::vector<int>& perm);

/// Byte-string keys for memoization. The exact key is the sorted basis
/// list; the isomorphism-canonical key minimizes it over all relabelings.
using Key = std::string;

Key canonical_key(const Matroid& m);
/// Exact pair key. Symmetric in its arguments: the smaller key comes first.
Key pair_key(const Matroid& m, const Matroid& n);

/// Lexicographically minimal sorted basis list over all n! relabelings.
/// Guarded to n <= 9.
std::vector<Subset> iso_canonical_bases(const Matroid& m);
Key iso_canonical_key(const Matroid& m);
/// Minimal image of (M, N) under simultaneous relabeling, minimized over
/// both argument orders. Guarded to n <= 9.
Key iso_pair_key(const Matroid& m, const Matroid& n);

inline constexpr int kMaxIsoCanonical = 9;

}  // namespace flipprod

#endif  // FLIPPROD_MATROID_HPP_
