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

#include "flipprod/gain.hpp"

#include <algorithm>
#include <queue>
#include <string>

#include "flipprod/error.hpp"

namespace flipprod {
namespace {

struct Component {
  int vertex_count = 0;
  std::vector<Gain> cycle_gains;
};

// Connected components of G[F] with their fundamental-cycle gains, using
// potentials along a spanning forest.
std::vector<Component> analyse(const GainGraph& g, Subset f) {
  std::vector<std::vector<int>> incident(g.vertices());
  for (Subset rest = f; rest; rest &= rest - 1) {
    const int i = lowest_element(rest);
    const GainEdge& e = g.edges()[i];
    incident[e.from].push_back(i);
    if (e.to != e.from) incident[e.to].push_back(i);
  }
  std::vector<char> seen(g.vertices(), 0);
  std::vector<char> used(g.edge_count(), 0);
  std::vector<Gain> potential(g.vertices());
  std::vector<Component> out;
  for (int root = 0; root < g.vertices(); ++root) {
    if (seen[root] || incident[root].empty()) continue;
    Component comp;
    seen[root] = 1;
    potential[root] = g.zero();
    std::queue<int> queue;
    queue.push(root);
    while (!queue.empty()) {
      const int x = queue.front();
      queue.pop();
      ++comp.vertex_count;
      for (int i : incident[x]) {
        if (used[i]) continue;
        used[i] = 1;
        const GainEdge& e = g.edges()[i];
        if (e.from == e.to) {
          comp.cycle_gains.push_back(e.gain);
          continue;
        }
        const int y = e.from == x ? e.to : e.from;
        const Gain along = g.add(potential[x], g.gain_from(i, x));
        if (!seen[y]) {
          seen[y] = 1;
          potential[y] = along;
          queue.push(y);
        } else {
          comp.cycle_gains.push_back(g.add(along, g.negate(potential[y])));
        }
      }
    }
    out.push_back(std::move(comp));
  }
  return out;
}

bool all_zero(const GainGraph& g, const std::vector<Gain>& gains) {
  return std::all_of(gains.begin(), gains.end(),
                     [&](const Gain& x) { return g.is_zero(x); });
}

int gain_lattice_rank(const std::vector<Gain>& gains, int width) {
  if (gains.empty()) return 0;
  DenseMatrix<Integer> m(static_cast<Eigen::Index>(gains.size()), width);
  for (std::size_t i = 0; i < gains.size(); ++i) {
    for (int j = 0; j < width; ++j) {
      m(static_cast<Eigen::Index>(i), j) = Integer(gains[i][j]);
    }
  }
  return static_cast<int>(bareiss_rank(m));
}

void require(const GainGraph& g, GainGroup::Kind kind) {
  if (g.group().kind != kind) {
    throw Error(ErrorCode::kWrongGroup,
                kind == GainGroup::Kind::kZk ? "expected a Z_k gain graph"
                                             : "expected a Z^d gain graph");
  }
}

template <typename Rank>
Matroid matroid_from_rank(int n, Rank&& rank) {
  const int r = rank(full_set(n));
  std::vector<Subset> bases;
  for_each_k_subset(n, r, [&](Subset s) {
    if (rank(s) == r) bases.push_back(s);
  });
  return Matroid::from_bases_unchecked(n, std::move(bases));
}

int vertex_count(const GainGraph& g, Subset f) {
  std::vector<char> hit(g.vertices(), 0);
  int count = 0;
  for (; f; f &= f - 1) {
    const GainEdge& e = g.edges()[lowest_element(f)];
    for (int v : {e.from, e.to}) {
      if (!hit[v]) {
        hit[v] = 1;
        ++count;
      }
    }
  }
  return count;
}

void check_edge(const GainGraph& g, int edge) {
  if (edge < 0 || edge >= g.edge_count()) {
    throw Error(ErrorCode::kEdgeNotFound,
                "no edge at position " + std::to_string(edge));
  }
}

Integer half_self_product(const Matroid& m, FlipEngine& engine) {
  const FlipValue v = engine.product(m, m);
  if (v.is_infinite()) {
    throw Error(ErrorCode::kInternal, "self flip product is infinite");
  }
  if (v.value() % 2 != 0) {
    throw Error(ErrorCode::kOddSelfProduct,
                "self flip product " + v.to_string() + " is odd");
  }
  return v.value() / 2;
}

}  // namespace

GainGraph::GainGraph(GainGroup group, int vertices, std::vector<GainEdge> edges)
    : group_(group), vertices_(vertices), edges_(std::move(edges)) {
  if (group_.kind == GainGroup::Kind::kZk && group_.k < 2) {
    throw Error(ErrorCode::kInvalidInput, "Z_k needs k >= 2");
  }
  if (group_.kind == GainGroup::Kind::kZd && (group_.d < 1 || group_.d > 2)) {
    throw Error(ErrorCode::kInvalidInput, "Z^d needs d in {1, 2}");
  }
  if (vertices_ < 0) {
    throw Error(ErrorCode::kIndexOutOfRange, "negative vertex count");
  }
  if (edge_count() > kMaxGround) {
    throw Error(ErrorCode::kSizeCapExceeded,
                "gain graph has more than " + std::to_string(kMaxGround) +
                    " edges");
  }
  for (GainEdge& e : edges_) {
    if (e.from < 0 || e.to < 0 || e.from >= vertices_ || e.to >= vertices_) {
      throw Error(ErrorCode::kIndexOutOfRange, "edge endpoint out of range");
    }
    if (static_cast<int>(e.gain.size()) != group_.width()) {
      throw Error(ErrorCode::kInvalidInput, "gain has the wrong length");
    }
    e.gain = reduce(std::move(e.gain));
  }
}

Gain GainGraph::reduce(Gain g) const {
  if (group_.kind == GainGroup::Kind::kZk) {
    g[0] %= group_.k;
    if (g[0] < 0) g[0] += group_.k;
  }
  return g;
}

Gain GainGraph::add(const Gain& a, const Gain& b) const {
  Gain out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i] + b[i];
  return reduce(std::move(out));
}

Gain GainGraph::negate(const Gain& a) const {
  Gain out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = -a[i];
  return reduce(std::move(out));
}

bool GainGraph::is_zero(const Gain& a) const {
  return std::all_of(a.begin(), a.end(), [](long long x) { return x == 0; });
}

Gain GainGraph::gain_from(int i, int source) const {
  const GainEdge& e = edges_[i];
  if (source == e.from) return e.gain;
  if (source == e.to) return negate(e.gain);
  throw Error(ErrorCode::kInvalidInput, "vertex is not an end of the edge");
}

int GainGraph::index_of_id(int id) const {
  for (int i = 0; i < edge_count(); ++i) {
    if (edges_[i].id == id) return i;
  }
  throw Error(ErrorCode::kEdgeNotFound, "no edge with id " + std::to_string(id));
}

bool GainGraph::is_gain_graph() const {
  for (int i = 0; i < edge_count(); ++i) {
    const GainEdge& e = edges_[i];
    if (e.from == e.to && is_zero(e.gain)) return false;
    for (int j = i + 1; j < edge_count(); ++j) {
      const GainEdge& f = edges_[j];
      if (std::minmax(e.from, e.to) != std::minmax(f.from, f.to)) continue;
      const int source = std::min(e.from, e.to);
      if (gain_from(i, source) == gain_from(j, source)) return false;
    }
  }
  return true;
}

GainGraph switch_vertex(const GainGraph& g, int v, const Gain& gamma) {
  if (v < 0 || v >= g.vertices()) {
    throw Error(ErrorCode::kIndexOutOfRange, "switching vertex out of range");
  }
  std::vector<GainEdge> edges = g.edges();
  for (GainEdge& e : edges) {
    if (e.from == e.to) continue;
    if (e.from == v) e.gain = g.add(e.gain, gamma);
    if (e.to == v) e.gain = g.add(e.gain, g.negate(gamma));
  }
  return GainGraph(g.group(), g.vertices(), std::move(edges));
}

bool is_balanced(const GainGraph& g, Subset f) {
  for (const Component& c : analyse(g, f)) {
    if (!all_zero(g, c.cycle_gains)) return false;
  }
  return true;
}

int zk_rank(const GainGraph& g, Subset f) {
  require(g, GainGroup::Kind::kZk);
  int rank = 0;
  for (const Component& c : analyse(g, f)) {
    rank += c.vertex_count - (all_zero(g, c.cycle_gains) ? 1 : 0);
  }
  return rank;
}

int zd_rank(const GainGraph& g, Subset f) {
  require(g, GainGroup::Kind::kZd);
  int rank = 0;
  std::vector<Gain> gains;
  for (const Component& c : analyse(g, f)) {
    rank += c.vertex_count - 1;
    gains.insert(gains.end(), c.cycle_gains.begin(), c.cycle_gains.end());
  }
  return rank + gain_lattice_rank(gains, g.group().d);
}

int zd_rank_componentwise(const GainGraph& g, Subset f) {
  require(g, GainGroup::Kind::kZd);
  int rank = 0;
  for (const Component& c : analyse(g, f)) {
    rank += c.vertex_count - 1 + gain_lattice_rank(c.cycle_gains, g.group().d);
  }
  return rank;
}

Matroid zk_matroid(const GainGraph& g) {
  require(g, GainGroup::Kind::kZk);
  return matroid_from_rank(g.edge_count(),
                           [&](Subset s) { return zk_rank(g, s); });
}

Matroid zd_matroid(const GainGraph& g) {
  require(g, GainGroup::Kind::kZd);
  return matroid_from_rank(g.edge_count(),
                           [&](Subset s) { return zd_rank(g, s); });
}

Matroid gain_matroid(const GainGraph& g) {
  return g.group().kind == GainGroup::Kind::kZk ? zk_matroid(g)
                                                 : zd_matroid(g);
}

GainGraph gain_delete(const GainGraph& g, int edge) {
  check_edge(g, edge);
  std::vector<GainEdge> edges = g.edges();
  edges.erase(edges.begin() + edge);
  return GainGraph(g.group(), g.vertices(), std::move(edges));
}

GainGraph gain_contract(const GainGraph& g, int edge, LatticeLoopRule rule) {
  check_edge(g, edge);
  const GainEdge target = g.edges()[edge];
  if (target.from == target.to && g.is_zero(target.gain)) {
    return gain_delete(g, edge);
  }

  std::vector<GainEdge> edges;
  int vertices = g.vertices();
  if (target.from != target.to) {
    // Switch at w so the edge has gain 0, then merge w into v.
    const int v = target.from, w = target.to;
    const GainGraph zeroed = switch_vertex(g, w, target.gain);
    auto renumber = [&](int x) {
      if (x == w) x = v;
      return x > w ? x - 1 : x;
    };
    for (int i = 0; i < g.edge_count(); ++i) {
      if (i == edge) continue;
      GainEdge e = zeroed.edges()[i];
      e.from = renumber(e.from);
      e.to = renumber(e.to);
      edges.push_back(std::move(e));
    }
    vertices -= 1;
  } else if (g.group().kind == GainGroup::Kind::kZk) {
    // Delete v; its other edges become gain-1 loops at their far ends and
    // its other loops move to u with gain 0.
    const int v = target.from;
    const bool single = g.vertices() == 1;
    const int u = single ? v : (v == 0 ? 1 : 0);
    auto renumber = [&](int x) { return (single || x < v) ? x : x - 1; };
    for (int i = 0; i < g.edge_count(); ++i) {
      if (i == edge) continue;
      GainEdge e = g.edges()[i];
      if (e.from == v && e.to == v) {
        e.from = e.to = renumber(u);
        e.gain = g.zero();
      } else if (e.from == v || e.to == v) {
        const int other = e.from == v ? e.to : e.from;
        e.from = e.to = renumber(other);
        e.gain = Gain{1};
      } else {
        e.from = renumber(e.from);
        e.to = renumber(e.to);
      }
      edges.push_back(std::move(e));
    }
    if (!single) vertices -= 1;
  } else {
    const Gain& gamma = target.gain;
    int j = 0;
    while (gamma[j] == 0) ++j;
    for (int i = 0; i < g.edge_count(); ++i) {
      if (i == edge) continue;
      GainEdge e = g.edges()[i];
      Gain phi = e.gain;
      for (std::size_t c = 0; c < phi.size(); ++c) {
        phi[c] = rule == LatticeLoopRule::kPrinted
                     ? gamma[j] * e.gain[c] - gamma[c] * e.gain[c]
                     : gamma[j] * e.gain[c] - e.gain[j] * gamma[c];
      }
      e.gain = std::move(phi);
      edges.push_back(std::move(e));
    }
  }

  GainGraph out(g.group(), vertices, std::move(edges));
  if (!(gain_matroid(out) == contraction(gain_matroid(g), singleton(edge)))) {
    throw Error(ErrorCode::kGainRuleMismatch,
                "gain-level contraction of edge " + std::to_string(edge) +
                    " disagrees with matroid contraction");
  }
  return out;
}

bool is_min_rotation_rigid(const GainGraph& g) {
  require(g, GainGroup::Kind::kZk);
  if (g.edge_count() != 2 * g.vertices() - 1) return false;
  const std::size_t count = std::size_t{1} << g.edge_count();
  for (std::size_t s = 1; s < count; ++s) {
    const Subset f = static_cast<Subset>(s);
    const int bound = 2 * vertex_count(g, f) - (is_balanced(g, f) ? 3 : 1);
    if (cardinality(f) > bound) return false;
  }
  return true;
}

bool is_min_periodic_rigid(const GainGraph& g) {
  require(g, GainGroup::Kind::kZd);
  if (g.vertices() == 0) return false;
  if (g.edge_count() != 2 * g.vertices() - 3 + 2 * g.group().d) return false;
  const std::size_t count = std::size_t{1} << g.edge_count();
  for (std::size_t s = 1; s < count; ++s) {
    const Subset f = static_cast<Subset>(s);
    const auto comps = analyse(g, f);
    if (comps.size() != 1) continue;
    const int lattice = gain_lattice_rank(comps[0].cycle_gains, g.group().d);
    if (cardinality(f) > 2 * comps[0].vertex_count - 3 + 2 * lattice) {
      return false;
    }
  }
  return true;
}

bool is_min_plane_rigid(int vertices,
                        const std::vector<std::pair<int, int>>& edges) {
  const int m = static_cast<int>(edges.size());
  if (m > kMaxGround) {
    throw Error(ErrorCode::kSizeCapExceeded, "too many edges");
  }
  if (vertices < 2 || m != 2 * vertices - 3) return false;
  std::vector<GainEdge> as_gain;
  for (int i = 0; i < m; ++i) {
    as_gain.push_back({i, edges[i].first, edges[i].second, Gain{0}});
  }
  const GainGraph g(GainGroup::cyclic(2), vertices, std::move(as_gain));
  const std::size_t count = std::size_t{1} << m;
  for (std::size_t s = 1; s < count; ++s) {
    const Subset f = static_cast<Subset>(s);
    if (cardinality(f) > 2 * vertex_count(g, f) - 3) return false;
  }
  return true;
}

Integer realisation_sym(const GainGraph& g, FlipEngine& engine) {
  if (!is_min_rotation_rigid(g)) {
    throw Error(ErrorCode::kNotMinimallyRigid,
                "gain graph is not minimally rotation-symmetric rigid");
  }
  return half_self_product(zk_matroid(g), engine);
}

Integer realisation_per(const GainGraph& g, FlipEngine& engine) {
  if (!is_min_periodic_rigid(g)) {
    throw Error(ErrorCode::kNotMinimallyRigid,
                "gain graph is not minimally periodically rigid");
  }
  return half_self_product(zd_matroid(g), engine);
}

Integer realisation_plane(int vertices,
                          const std::vector<std::pair<int, int>>& edges,
                          FlipEngine& engine) {
  if (!is_min_plane_rigid(vertices, edges)) {
    throw Error(ErrorCode::kNotMinimallyRigid, "graph is not Laman");
  }
  return half_self_product(graphic(vertices, edges), engine);
}

}  // namespace flipprod
