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

#ifndef FLIPPROD_GAIN_HPP_
#define FLIPPROD_GAIN_HPP_

#include <utility>
#include <vector>

#include "flipprod/flip.hpp"
#include "flipprod/linalg.hpp"
#include "flipprod/matroid.hpp"

namespace flipprod {

/// Gain group: the cyclic group Z_k (k >= 2) or the lattice Z^d (d in {1,2}).
struct GainGroup {
  enum class Kind { kZk, kZd };
  Kind kind = Kind::kZk;
  int k = 2;  // order, for Z_k
  int d = 1;  // dimension, for Z^d

  static GainGroup cyclic(int k) { return {Kind::kZk, k, 1}; }
  static GainGroup lattice(int d) { return {Kind::kZd, 0, d}; }

  /// Length of a gain vector: 1 for Z_k, d for Z^d.
  int width() const { return kind == Kind::kZk ? 1 : d; }
};

using Gain = std::vector<long long>;

struct GainEdge {
  int id = 0;
  int from = 0;
  int to = 0;
  Gain gain;  // along from -> to
};

/// Multigraph with oriented group labels. Ground element i of the gain
/// matroid is edges()[i].
class GainGraph {
 public:
  GainGraph(GainGroup group, int vertices, std::vector<GainEdge> edges);

  const GainGroup& group() const { return group_; }
  int vertices() const { return vertices_; }
  const std::vector<GainEdge>& edges() const { return edges_; }
  int edge_count() const { return static_cast<int>(edges_.size()); }

  /// Gain of edge i traversed starting at `source`. Reversal negates.
  Gain gain_from(int i, int source) const;
  /// Position of the edge with the given id.
  int index_of_id(int id) const;

  Gain zero() const { return Gain(group_.width(), 0); }
  Gain add(const Gain& a, const Gain& b) const;
  Gain negate(const Gain& a) const;
  bool is_zero(const Gain& a) const;

  /// Parallel edges carry distinct gains and loop gains are nonzero.
  bool is_gain_graph() const;

 private:
  Gain reduce(Gain g) const;

  GainGroup group_;
  int vertices_;
  std::vector<GainEdge> edges_;
};

/// Adds gamma on edges leaving v and subtracts it on edges entering v.
GainGraph switch_vertex(const GainGraph& g, int v, const Gain& gamma);

/// Every cycle inside F has zero gain.
bool is_balanced(const GainGraph& g, Subset f);

/// |V[F]| - number of balanced connected components of G[F].
int zk_rank(const GainGraph& g, Subset f);

/// Rank of the row matroid of [incidence | gains] restricted to F:
/// sum of (|V_i| - 1) over components plus the rank of the lattice spanned by
/// all cycle gains of F.
int zd_rank(const GainGraph& g, Subset f);

/// The per-component variant: sum over components of |V_i| - 1 plus the
/// lattice rank of that component alone. Agrees with zd_rank on connected
/// edge sets.
int zd_rank_componentwise(const GainGraph& g, Subset f);

Matroid zk_matroid(const GainGraph& g);
Matroid zd_matroid(const GainGraph& g);
/// Dispatches on the group.
Matroid gain_matroid(const GainGraph& g);

/// Rule used when contracting a nonzero loop of a Z^d gain graph with gain
/// gamma, after choosing j with gamma_j != 0.
enum class LatticeLoopRule {
  kPrinted,    // phi -> gamma_j phi - gamma (.) phi  (Hadamard product)
  kProjected,  // phi -> gamma_j phi - phi_j gamma
};

GainGraph gain_delete(const GainGraph& g, int edge);

/// Gain-level contraction of edge index `edge`. The result is checked
/// against matroid contraction and GainRuleMismatch is raised on
/// disagreement.
GainGraph gain_contract(const GainGraph& g, int edge,
                        LatticeLoopRule rule = LatticeLoopRule::kPrinted);

bool is_min_rotation_rigid(const GainGraph& g);
bool is_min_periodic_rigid(const GainGraph& g);
bool is_min_plane_rigid(int vertices,
                        const std::vector<std::pair<int, int>>& edges);

/// Half the self flip product of the associated matroid, after checking the
/// minimal rigidity counts.
Integer realisation_sym(const GainGraph& g, FlipEngine& engine);
Integer realisation_per(const GainGraph& g, FlipEngine& engine);
Integer realisation_plane(int vertices,
                          const std::vector<std::pair<int, int>>& edges,
                          FlipEngine& engine);

}  // namespace flipprod

#endif  // FLIPPROD_GAIN_HPP_
