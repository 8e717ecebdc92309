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

#include "flipprod/checks.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <set>
#include <sstream>

#include "flipprod/enumeration.hpp"
#include "flipprod/error.hpp"
#include "flipprod/gain.hpp"
#include "flipprod/invariants.hpp"
#include "flipprod/oracle.hpp"

namespace flipprod {
namespace {

std::vector<std::vector<int>> permutations_of(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

// Distinct relabelings of m.
std::vector<Matroid> images(const Matroid& m) {
  std::set<std::vector<Subset>> seen;
  std::vector<Matroid> out;
  for (const auto& sigma : permutations_of(m.size())) {
    Matroid image = relabel(m, sigma);
    if (seen.insert(image.bases()).second) out.push_back(std::move(image));
  }
  return out;
}

// Records the first failure and counts cases.
class Tally {
 public:
  explicit Tally(std::string name) : start_(std::chrono::steady_clock::now()) {
    result_.name = std::move(name);
  }
  void pass() { ++result_.cases; }
  void check(bool ok, const std::string& what) {
    ++result_.cases;
    if (!ok && result_.passed) {
      result_.passed = false;
      result_.detail = what;
    }
  }
  bool failed() const { return !result_.passed; }
  CheckResult finish(const std::string& summary = "") {
    if (result_.passed) result_.detail = summary;
    result_.seconds = std::chrono::duration<double>(
                          std::chrono::steady_clock::now() - start_)
                          .count();
    return result_;
  }

 private:
  CheckResult result_;
  std::chrono::steady_clock::time_point start_;
};

std::string pair_text(const Matroid& m, const Matroid& n) {
  return "M = " + describe(m) + ", N = " + describe(n);
}

bool equal_regime(const Matroid& m, const Matroid& n) {
  return m.rank() + n.rank() == m.size() + 1;
}

GainGraph random_gain_graph(GainGroup group, int vertices, int edges,
                            std::mt19937_64& rng, int spread) {
  std::uniform_int_distribution<int> vertex(0, vertices - 1);
  std::uniform_int_distribution<int> value(-spread, spread);
  std::vector<GainEdge> list;
  for (int i = 0; i < edges; ++i) {
    Gain g(group.width());
    for (long long& c : g) c = value(rng);
    list.push_back({i, vertex(rng), vertex(rng), g});
  }
  return GainGraph(group, vertices, std::move(list));
}

}  // namespace

Matroid random_matroid(int n, int r, int p, bool loopless,
                       std::mt19937_64& rng) {
  if (r < 0 || r > n) {
    throw Error(ErrorCode::kRankOutOfRange, "need 0 <= r <= n");
  }
  if (r == 0) {
    if (loopless && n > 0) {
      throw Error(ErrorCode::kInvalidInput, "rank 0 matroids have loops");
    }
    return uniform(n, 0);
  }
  std::uniform_int_distribution<int> residue(0, p - 1);
  while (true) {
    PrimeFieldMatrix m;
    m.p = p;
    m.entries.resize(r, n);
    for (int j = 0; j < n; ++j) {
      do {
        for (int i = 0; i < r; ++i) m.entries(i, j) = residue(rng);
      } while (loopless && (m.entries.col(j).array() == 0).all());
    }
    Matroid out = from_matrix(m, Orientation::kColumns);
    if (out.rank() == r) return out;
  }
}

std::string describe(const Matroid& m) {
  std::ostringstream os;
  os << "n=" << m.size() << " r=" << m.rank() << " bases=[";
  for (std::size_t i = 0; i < m.bases().size(); ++i) {
    if (i) os << ",";
    os << "{";
    const auto elems = elements_of(m.bases()[i]);
    for (std::size_t j = 0; j < elems.size(); ++j) {
      if (j) os << ",";
      os << elems[j];
    }
    os << "}";
  }
  os << "]";
  return os.str();
}

PropertySuite::PropertySuite(SuiteOptions options)
    : options_(options), engine_(options.config) {}

const std::vector<Matroid>& PropertySuite::classes(int n) {
  auto it = classes_.find(n);
  if (it != classes_.end()) return it->second;
  std::vector<Matroid> all;
  for (int r = 0; r <= n; ++r) {
    auto reps = enumerate_matroids(n, r).reps;
    all.insert(all.end(), reps.begin(), reps.end());
  }
  return classes_[n] = std::move(all);
}

template <typename Fn>
void PropertySuite::for_each_pair(int n, Fn&& fn) {
  const auto& cs = classes(n);
  std::vector<std::vector<Matroid>> relabeled;
  for (const Matroid& c : cs) relabeled.push_back(images(c));
  for (const Matroid& m : cs) {
    for (const auto& family : relabeled) {
      for (const Matroid& n2 : family) {
        if (!fn(m, n2)) return;
      }
    }
  }
}

CheckResult PropertySuite::matroid_axioms() {
  Tally t("matroid axioms, duality and rank");
  t.check(graphic(3, {{0, 1}, {0, 2}, {1, 2}}) == uniform(3, 2),
          "graphic(K3) != U(3,2)");
  for (int n = 0; n <= options_.max_n; ++n) {
    for (const Matroid& m : classes(n)) {
      t.check(satisfies_exchange_axiom(m.bases()),
              "exchange axiom fails: " + describe(m));
      t.check(dual(dual(m)) == m, "dual is not an involution: " + describe(m));
      const std::size_t count = std::size_t{1} << n;
      for (std::size_t s = 0; s < count; ++s) {
        const Subset a = static_cast<Subset>(s);
        t.check(deletion(dual(m), a) == dual(contraction(m, a)),
                "(M/S)* != M*\\S: " + describe(m));
        const int ra = m.rank_of(a);
        for (int e = 0; e < n; ++e) {
          const int re = m.rank_of(a | singleton(e));
          t.check(ra <= re && re <= ra + 1, "rank not unit-monotone: " + describe(m));
        }
        for (std::size_t u = 0; u < count; ++u) {
          const Subset b = static_cast<Subset>(u);
          t.check(m.rank_of(a | b) + m.rank_of(a & b) <= ra + m.rank_of(b),
                  "rank not submodular: " + describe(m));
        }
      }
      if (t.failed()) break;
    }
  }
  return t.finish();
}

CheckResult PropertySuite::flip_symmetry() {
  Tally t("flip symmetry");
  // The memo stores pairs symmetrically, so symmetry is tested with the memo
  // off to keep the two evaluations independent.
  FlipConfig raw = options_.config;
  raw.memoize = false;
  FlipEngine forward(raw), backward(raw);
  for (int n = 0; n <= options_.max_n && !t.failed(); ++n) {
    for_each_pair(n, [&](const Matroid& m, const Matroid& nn) {
      t.check(forward.product(m, nn) == backward.product(nn, m),
              "asymmetric: " + pair_text(m, nn));
      return !t.failed();
    });
  }
  std::mt19937_64 rng(options_.seed);
  std::uniform_int_distribution<int> size(6, 8);
  for (int i = 0; i < options_.random_symmetry_pairs && !t.failed(); ++i) {
    const int n = size(rng);
    const int r1 = std::uniform_int_distribution<int>(1, n)(rng);
    const int r2 = n + 1 - r1;
    const int p = (i % 2 == 0) ? 2 : 3;
    const Matroid m = random_matroid(n, r1, p, i % 5 != 0, rng);
    const Matroid nn = random_matroid(n, r2, p, true, rng);
    t.check(forward.product(m, nn) == backward.product(nn, m),
            "asymmetric (random): " + pair_text(m, nn));
  }
  return t.finish();
}

CheckResult PropertySuite::pivot_independence() {
  Tally t("pivot independence");
  FlipConfig branching = options_.config;
  branching.pivot_rule = PivotRule::kMinBranching;
  FlipEngine other(branching);
  for (int n = 2; n <= options_.max_n && !t.failed(); ++n) {
    for_each_pair(n, [&](const Matroid& m, const Matroid& nn) {
      if (!equal_regime(m, nn)) return true;
      const FlipValue base = engine_.product(m, nn);
      for (int e = 0; e < n; ++e) {
        t.check(engine_.product_with_pivot(m, nn, e) == base,
                "pivot " + std::to_string(e) + " differs: " + pair_text(m, nn));
      }
      t.check(other.product(m, nn) == base,
              "min-branching pivot differs: " + pair_text(m, nn));
      return !t.failed();
    });
  }
  return t.finish();
}

CheckResult PropertySuite::loop_annihilation() {
  Tally t("loop annihilation");
  for (int n = 1; n <= options_.max_n && !t.failed(); ++n) {
    for_each_pair(n, [&](const Matroid& m, const Matroid& nn) {
      if ((m.loops() | nn.loops()) == 0) return true;
      t.check(engine_.product(m, nn).is_zero(), "nonzero with a loop: " + pair_text(m, nn));
      return !t.failed();
    });
  }
  return t.finish();
}

CheckResult PropertySuite::rank_gate() {
  Tally t("rank gate tags");
  // The empty pair is the base case with value 1 and sits outside the gate.
  for (int n = 1; n <= options_.max_n && !t.failed(); ++n) {
    for_each_pair(n, [&](const Matroid& m, const Matroid& nn) {
      const FlipValue v = engine_.product(m, nn);
      const int ranks = m.rank() + nn.rank();
      if (ranks < n + 1) {
        t.check(v.is_zero(), "deficit regime not zero: " + pair_text(m, nn));
      } else if (ranks == n + 1) {
        t.check(v.is_finite(), "equal regime not finite: " + pair_text(m, nn));
      } else {
        t.check(v.is_zero() || v.is_infinite(),
                "excess regime finite nonzero: " + pair_text(m, nn));
      }
      return !t.failed();
    });
  }
  return t.finish();
}

CheckResult PropertySuite::positivity_agreement() {
  Tally t("positivity test and zero certificate");
  for (int n = 1; n <= options_.max_n && !t.failed(); ++n) {
    for_each_pair(n, [&](const Matroid& m, const Matroid& nn) {
      if (m.rank() + nn.rank() > n + 1) return true;
      const bool positive = !engine_.product(m, nn).is_zero();
      t.check(is_flip_positive(m, nn) == positive,
              "positivity test disagrees: " + pair_text(m, nn));
      const bool none = flip_zero_certificate(m, nn).kind ==
                        ZeroCertificate::Kind::kNone;
      t.check(none == positive, "certificate disagrees: " + pair_text(m, nn));
      return !t.failed();
    });
  }
  return t.finish();
}

CheckResult PropertySuite::beta_identity() {
  Tally t("beta direct = beta via flip");
  auto check_all = [&](const Matroid& m, const std::string& tag) {
    const Integer direct = beta_direct(m);
    for (int e = 0; e < m.size(); ++e) {
      const FlipValue via = beta_via_flip(m, e, engine_);
      t.check(via.is_finite() && via.value() == direct,
              tag + " beta mismatch at e=" + std::to_string(e) + ": " +
                  describe(m));
    }
  };
  for (int n = 2; n <= options_.max_n && !t.failed(); ++n) {
    for (const Matroid& m : classes(n)) check_all(m, "exhaustive");
  }
  std::mt19937_64 rng(options_.seed + 1);
  for (int i = 0; i < options_.random_beta_matroids && !t.failed(); ++i) {
    const int n = 6 + i % 2;
    const int r = std::uniform_int_distribution<int>(1, n - 1)(rng);
    check_all(random_matroid(n, r, 2 + i % 2, i % 4 != 0, rng), "random");
  }
  return t.finish();
}

CheckResult PropertySuite::nbc_identities() {
  Tally t("nbc ordering independence and M * U = nbc");
  std::mt19937_64 rng(options_.seed + 2);
  for (int n = 0; n <= options_.max_n && !t.failed(); ++n) {
    for (const Matroid& m : classes(n)) {
      const Integer base = nbc_count(m);
      std::vector<int> order(n);
      std::iota(order.begin(), order.end(), 0);
      for (int k = 0; k < options_.orderings_per_matroid; ++k) {
        std::shuffle(order.begin(), order.end(), rng);
        t.check(nbc_count(m, order) == base,
                "nbc depends on the ordering: " + describe(m));
      }
      const FlipValue via = nbc_flip_check(m, engine_);
      t.check(via.is_finite() && via.value() == base,
              "M * U != nbc: " + describe(m));
    }
  }
  return t.finish();
}

CheckResult PropertySuite::mu_identities() {
  Tally t("mu_{r-1} = nbc and mu via truncation");
  for (int n = 0; n <= options_.max_n && !t.failed(); ++n) {
    for (const Matroid& m : classes(n)) {
      const CharPoly cp = char_poly(m);
      if (m.rank() >= 1) {
        t.check(cp.mu.back() == nbc_count(m), "mu_{r-1} != nbc: " + describe(m));
      }
      if (!m.is_simple()) continue;
      for (int k = 0; k < m.rank(); ++k) {
        const FlipValue via = mu_via_flip(m, k, engine_);
        t.check(via.is_finite() && via.value() == cp.mu[k],
                "mu_" + std::to_string(k) + " mismatch: " + describe(m));
      }
    }
  }
  return t.finish();
}

CheckResult PropertySuite::nbc_upper_bound() {
  Tally t("flip <= min(nbc(M), nbc(N))");
  for (int n = 1; n <= options_.max_n && !t.failed(); ++n) {
    std::map<std::vector<Subset>, Integer> nbc_cache;
    auto nbc_of = [&](const Matroid& m) {
      auto key = iso_canonical_bases(m);
      auto it = nbc_cache.find(key);
      if (it == nbc_cache.end()) it = nbc_cache.emplace(key, nbc_count(m)).first;
      return it->second;
    };
    for_each_pair(n, [&](const Matroid& m, const Matroid& nn) {
      if (!equal_regime(m, nn)) return true;
      const Integer bound = std::min(nbc_of(m), nbc_of(nn));
      t.check(engine_.product(m, nn).value() <= bound,
              "exceeds nbc bound: " + pair_text(m, nn));
      return !t.failed();
    });
  }
  return t.finish();
}

CheckResult PropertySuite::relaxation_monotonicity() {
  Tally t("relaxation monotonicity");
  long long relaxations = 0;
  for (int n = 1; n <= options_.max_n && !t.failed(); ++n) {
    const auto& cs = classes(n);
    for (const Matroid& m : cs) {
      std::vector<Subset> xs;
      for_each_k_subset(n, m.rank(), [&](Subset x) {
        if (is_circuit_hyperplane(m, x)) xs.push_back(x);
      });
      for (Subset x : xs) {
        const Matroid relaxed = circuit_hyperplane_relax(m, x);
        ++relaxations;
        for (const Matroid& c : cs) {
          if (c.rank() != n + 1 - m.rank()) continue;
          for (const Matroid& nn : images(c)) {
            t.check(engine_.product(m, nn) <= engine_.product(relaxed, nn),
                    "relaxation decreased the product: " + pair_text(m, nn) +
                        ", X=" + std::to_string(x));
          }
        }
      }
    }
  }
  return t.finish(std::to_string(relaxations) + " relaxations");
}

CheckResult PropertySuite::oracle_equivalence() {
  Tally t("oracle equivalence");
  std::uint64_t seed = options_.seed;
  for (int n = 1; n <= options_.max_n && !t.failed(); ++n) {
    for_each_pair(n, [&](const Matroid& m, const Matroid& nn) {
      if (!equal_regime(m, nn) || m.loops() || nn.loops()) return true;
      t.check(oracle_flip(m, nn, 0, ++seed) == engine_.product(m, nn),
              "oracle disagrees: " + pair_text(m, nn));
      return !t.failed();
    });
  }
  std::mt19937_64 rng(options_.seed + 3);
  long long nonzero = 0;
  for (int i = 0; i < options_.random_oracle_pairs && !t.failed(); ++i) {
    const int n = 6 + i % 2;
    const int r1 = std::uniform_int_distribution<int>(2, n - 1)(rng);
    const int p = (i % 3 == 0) ? 3 : 2;
    const Matroid m = random_matroid(n, r1, p, true, rng);
    const Matroid nn = random_matroid(n, n + 1 - r1, p, true, rng);
    const FlipValue expected = engine_.product(m, nn);
    if (!expected.is_zero()) ++nonzero;
    t.check(oracle_flip(m, nn, 0, ++seed) == expected,
            "oracle disagrees (random): " + pair_text(m, nn));
  }
  return t.finish(std::to_string(nonzero) + " of " +
                  std::to_string(options_.random_oracle_pairs) +
                  " random pairs nonzero");
}

CheckResult PropertySuite::oracle_invariance() {
  Tally t("oracle shift, epsilon and multiplicity invariance");
  std::uint64_t seed = options_.seed + 1000;
  const int small = std::min(4, options_.max_n);
  for (int n = 1; n <= small && !t.failed(); ++n) {
    for_each_pair(n, [&](const Matroid& m, const Matroid& nn) {
      if (!equal_regime(m, nn) || m.loops() || nn.loops()) return true;
      const FlipValue first = oracle_flip(m, nn, 0, ++seed);
      t.check(oracle_flip(m, nn, 0, ++seed) == first,
              "two shifts disagree: " + pair_text(m, nn));
      for (int e = 1; e < n; ++e) {
        t.check(oracle_flip(m, nn, e, ++seed) == first,
                "epsilon " + std::to_string(e) + " differs: " + pair_text(m, nn));
      }
      return !t.failed();
    });
  }

  // Uniform and graphic inputs: every multiplicity should be 1.
  std::vector<Matroid> inputs;
  std::set<std::pair<int, std::vector<Subset>>> seen;
  auto add = [&](const Matroid& m) {
    if (m.loops()) return;
    if (seen.insert({m.size(), m.bases()}).second) inputs.push_back(m);
  };
  for (int n = 1; n <= options_.max_n; ++n) {
    for (int r = 1; r <= n; ++r) add(uniform(n, r));
  }
  // All loopless multigraphs with up to max_n edges on up to 5 vertices.
  for (int v = 2; v <= 5; ++v) {
    std::vector<std::pair<int, int>> pairs;
    for (int a = 0; a < v; ++a) {
      for (int b = a + 1; b < v; ++b) pairs.push_back({a, b});
    }
    for (int m = 1; m <= options_.max_n; ++m) {
      std::vector<int> pick(m, 0);
      while (true) {
        std::vector<std::pair<int, int>> edges;
        for (int i : pick) edges.push_back(pairs[i]);
        add(graphic(v, edges));
        int i = m - 1;
        while (i >= 0 && pick[i] == static_cast<int>(pairs.size()) - 1) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < m; ++j) pick[j] = pick[i];
      }
    }
  }
  long long points = 0;
  for (const Matroid& m : inputs) {
    for (const Matroid& nn : inputs) {
      if (nn.size() != m.size() || !equal_regime(m, nn)) continue;
      for (const Matroid& image : images(nn)) {
        const auto detailed = oracle_flip_detailed(m, image, 0, ++seed);
        for (const Integer& mult : detailed.multiplicities) {
          ++points;
          t.check(mult == 1, "multiplicity " + mult.str() + ": " +
                                 pair_text(m, image));
        }
      }
    }
  }
  return t.finish(std::to_string(points) +
                  " intersection points from uniform and graphic inputs");
}

CheckResult PropertySuite::gain_properties() {
  Tally t("gain graph properties");
  std::mt19937_64 rng(options_.seed + 4);

  // Switching invariance.
  std::vector<GainGraph> graphs;
  graphs.push_back(GainGraph(GainGroup::cyclic(4), 3,
                             {{1, 0, 1, {1}}, {2, 1, 0, {0}}, {3, 1, 2, {2}},
                              {4, 2, 0, {3}}, {5, 2, 2, {1}}}));
  for (int i = 0; i < 4; ++i) {
    graphs.push_back(random_gain_graph(GainGroup::cyclic(3 + i), 4, 6, rng, 5));
    graphs.push_back(random_gain_graph(GainGroup::lattice(1 + i % 2), 4, 6, rng, 2));
  }
  for (const GainGraph& g : graphs) {
    const Matroid base = gain_matroid(g);
    std::uniform_int_distribution<int> vertex(0, g.vertices() - 1);
    std::uniform_int_distribution<int> value(-3, 3);
    for (int s = 0; s < options_.switch_sequences; ++s) {
      GainGraph h = g;
      const int steps = 1 + s % 5;
      for (int k = 0; k < steps; ++k) {
        Gain gamma(g.group().width());
        for (long long& c : gamma) c = value(rng);
        h = switch_vertex(h, vertex(rng), gamma);
      }
      t.check(gain_matroid(h) == base, "switching changed the matroid");
    }
  }

  // Zero-gain Z^1 matroid = graphic matroid: all multigraphs with at most 4
  // vertices and 6 edges, loops allowed.
  for (int v = 1; v <= 4 && !t.failed(); ++v) {
    std::vector<std::pair<int, int>> slots;
    for (int a = 0; a < v; ++a) {
      for (int b = a; b < v; ++b) slots.push_back({a, b});
    }
    for (int m = 0; m <= 6; ++m) {
      std::vector<int> pick(m, 0);
      while (true) {
        std::vector<std::pair<int, int>> edges;
        std::vector<GainEdge> gain_edges;
        for (int i : pick) {
          gain_edges.push_back({static_cast<int>(edges.size()), slots[i].first,
                                slots[i].second, Gain{0}});
          edges.push_back(slots[i]);
        }
        const GainGraph g(GainGroup::lattice(1), v, gain_edges);
        t.check(zd_matroid(g) == graphic(v, edges),
                "zero-gain Z^1 matroid is not graphic");
        int i = m - 1;
        while (i >= 0 && pick[i] == static_cast<int>(slots.size()) - 1) --i;
        if (i < 0) break;
        ++pick[i];
        for (int j = i + 1; j < m; ++j) pick[j] = pick[i];
      }
    }
  }

  // Gain-level contraction agrees with matroid contraction. Non-loop edges
  // and Z_k loops must always agree, as must the projected Z^d loop rule.
  long long printed_mismatches = 0, printed_loops = 0;
  for (int i = 0; i < 60 && !t.failed(); ++i) {
    const int vertices = 2 + i % 5;
    const GainGroup group = i % 3 == 0   ? GainGroup::cyclic(2 + i % 5)
                            : i % 3 == 1 ? GainGroup::lattice(1)
                                         : GainGroup::lattice(2);
    const GainGraph g = random_gain_graph(group, vertices, 2 + i % 7, rng, 2);
    for (int e = 0; e < g.edge_count(); ++e) {
      const GainEdge& edge = g.edges()[e];
      const bool lattice_loop = edge.from == edge.to &&
                                group.kind == GainGroup::Kind::kZd &&
                                !g.is_zero(edge.gain);
      if (lattice_loop) {
        ++printed_loops;
        try {
          gain_contract(g, e, LatticeLoopRule::kPrinted);
        } catch (const Error& err) {
          if (err.code() != ErrorCode::kGainRuleMismatch) throw;
          ++printed_mismatches;
        }
        try {
          gain_contract(g, e, LatticeLoopRule::kProjected);
          t.pass();
        } catch (const Error& err) {
          t.check(false, std::string("projected loop rule: ") + err.what());
        }
        continue;
      }
      try {
        gain_contract(g, e);
        t.pass();
      } catch (const Error& err) {
        t.check(false, std::string("contraction: ") + err.what());
      }
    }
  }
  return t.finish("printed Z^d loop rule mismatched " +
                  std::to_string(printed_mismatches) + " of " +
                  std::to_string(printed_loops) + " loop contractions");
}

std::vector<CheckResult> PropertySuite::run_all() {
  return {matroid_axioms(),        flip_symmetry(),
          pivot_independence(),    loop_annihilation(),
          rank_gate(),             positivity_agreement(),
          beta_identity(),         nbc_identities(),
          mu_identities(),         nbc_upper_bound(),
          relaxation_monotonicity(), oracle_equivalence(),
          oracle_invariance(),     gain_properties()};
}

}  // namespace flipprod
