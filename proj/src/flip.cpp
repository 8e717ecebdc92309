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

#include "flipprod/flip.hpp"

#include <exception>
#include <functional>
#include <numeric>
#include <thread>

#include "flipprod/error.hpp"

namespace flipprod {
namespace {

void check_pair(const Matroid& m, const Matroid& n) {
  if (m.size() != n.size()) {
    throw Error(ErrorCode::kGroundSetMismatch,
                "matroids have ground sets of different sizes");
  }
}

bool hadamard_inequality(const Matroid& m, const Matroid& n, Subset f) {
  return m.rank_of(f) + n.rank_of(f) >= cardinality(f) + 1;
}

struct UnionFind {
  explicit UnionFind(int n) : parent(n) {
    std::iota(parent.begin(), parent.end(), 0);
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
  std::vector<int> parent;
};

// Unites elements lying in a common fundamental circuit with respect to the
// first basis. The resulting classes are the connected components.
void unite_components(const Matroid& m, UnionFind& uf) {
  const Subset basis = m.bases().front();
  for (Subset out = m.ground() & ~basis; out; out &= out - 1) {
    const int e = lowest_element(out);
    for (Subset in = basis; in; in &= in - 1) {
      const int b = lowest_element(in);
      if (m.is_basis((basis & ~singleton(b)) | singleton(e))) uf.unite(e, b);
    }
  }
}

bool has_common_separator(const Matroid& m, const Matroid& n) {
  UnionFind uf(m.size());
  unite_components(m, uf);
  unite_components(n, uf);
  const int root = uf.find(0);
  for (int e = 1; e < m.size(); ++e) {
    if (uf.find(e) != root) return true;
  }
  return false;
}

// Answers every case that needs no branching: sizes 0 and 1, loops, the rank
// gate, a shared coloop and a common separator.
std::optional<FlipValue> decide_directly(const Matroid& m, const Matroid& n) {
  const int size = m.size();
  if (size == 0) return FlipValue(1);
  if (size == 1) return FlipValue(m.rank() == 1 && n.rank() == 1 ? 1 : 0);
  if (m.loops() != 0 || n.loops() != 0) return FlipValue(0);
  const int ranks = m.rank() + n.rank();
  if (ranks < size + 1) return FlipValue(0);
  if (ranks > size + 1) {
    return is_flip_positive(m, n) ? FlipValue::infinite() : FlipValue(0);
  }
  if ((m.coloops() & n.coloops()) != 0) return FlipValue(0);
  if (has_common_separator(m, n)) return FlipValue(0);
  return std::nullopt;
}

// The two rank equalities a split (E1, E2) must satisfy to contribute.
bool split_survives(const Matroid& m, const Matroid& n, Subset e1, Subset e2) {
  const Subset ground = m.ground();
  const Subset eps = e1 & e2;
  return m.rank() - m.rank_of(e1) + n.rank_of(ground & ~e1) ==
             cardinality(e2) &&
         m.rank_of(e1 & ~eps) + n.rank() - n.rank_of(e2) == cardinality(e1);
}

}  // namespace

std::vector<Subset> connected_components(const Matroid& m) {
  UnionFind uf(m.size());
  unite_components(m, uf);
  std::vector<Subset> by_root(m.size(), 0);
  for (int e = 0; e < m.size(); ++e) by_root[uf.find(e)] |= singleton(e);
  std::vector<Subset> out;
  for (Subset s : by_root) {
    if (s) out.push_back(s);
  }
  std::sort(out.begin(), out.end());
  return out;
}

FlipValue FlipEngine::product(const Matroid& m, const Matroid& n) {
  check_pair(m, n);
  if (auto direct = decide_directly(m, n)) return *direct;
  const Key key = config_.memoize ? memo_key(m, n) : Key();
  if (auto hit = lookup(key)) return FlipValue(*hit);

  const Subset only_one = m.coloops() ^ n.coloops();
  FlipValue out;
  if (only_one != 0) {
    const Subset e = singleton(lowest_element(only_one));
    out = product(deletion(m, e), deletion(n, e));
  } else {
    out = expand(m, n, choose_pivot(m, n), config_.parallel_width);
  }
  store(key, out.value());
  return out;
}

FlipValue FlipEngine::product_with_pivot(const Matroid& m, const Matroid& n,
                                         int epsilon) {
  check_pair(m, n);
  if (epsilon < 0 || epsilon >= m.size()) {
    throw Error(ErrorCode::kIndexOutOfRange, "pivot outside the ground set");
  }
  if (auto direct = decide_directly(m, n)) return *direct;
  return expand(m, n, epsilon, config_.parallel_width);
}

Integer FlipEngine::recurse(const Matroid& m, const Matroid& n) {
  const FlipValue v = product(m, n);
  if (v.is_infinite()) {
    throw Error(ErrorCode::kInternal,
                "infinite value inside the pruned recursion");
  }
  return v.value();
}

Integer FlipEngine::expand(const Matroid& m, const Matroid& n, int epsilon,
                           int width) {
  const Subset eps = singleton(epsilon);
  const Subset ground = m.ground();
  const Subset rest = ground & ~eps;

  Integer total = recurse(contraction(m, eps), deletion(n, eps)) +
                  recurse(deletion(m, eps), contraction(n, eps));

  std::vector<Subset> splits;
  for (Subset s = (rest - 1) & rest; s != 0; s = (s - 1) & rest) {
    const Subset e1 = s | eps;
    const Subset e2 = (ground & ~e1) | eps;
    if (split_survives(m, n, e1, e2)) splits.push_back(e1);
  }

  auto term = [&](Subset e1) -> Integer {
    const Subset e2 = (ground & ~e1) | eps;
    const Integer left = recurse(contraction(m, e1), deletion(n, e1));
    if (left.is_zero()) return left;
    return left * recurse(deletion(m, e2), contraction(n, e2));
  };

  const std::size_t workers =
      std::min<std::size_t>(std::max(width, 1), splits.size());
  if (workers <= 1) {
    for (Subset e1 : splits) total += term(e1);
    return total;
  }

  std::vector<Integer> partial(workers);
  std::vector<std::exception_ptr> failures(workers);
  std::vector<std::thread> pool;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w; i < splits.size(); i += workers) {
          partial[w] += term(splits[i]);
        }
      } catch (...) {
        failures[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (std::size_t w = 0; w < workers; ++w) {
    if (failures[w]) std::rethrow_exception(failures[w]);
    total += partial[w];
  }
  return total;
}

int FlipEngine::choose_pivot(const Matroid& m, const Matroid& n) const {
  if (config_.pivot_rule == PivotRule::kFirstIndex) return 0;
  const Subset ground = m.ground();
  int best = 0;
  long best_count = -1;
  for (int e = 0; e < m.size(); ++e) {
    const Subset eps = singleton(e);
    const Subset rest = ground & ~eps;
    long count = 0;
    for (Subset s = (rest - 1) & rest; s != 0; s = (s - 1) & rest) {
      const Subset e1 = s | eps;
      if (split_survives(m, n, e1, (ground & ~e1) | eps)) ++count;
    }
    if (best_count < 0 || count < best_count) {
      best = e;
      best_count = count;
    }
  }
  return best;
}

Key FlipEngine::memo_key(const Matroid& m, const Matroid& n) const {
  if (config_.memo_mode == MemoMode::kIsoCanonical &&
      m.size() <= kMaxIsoCanonical) {
    return iso_pair_key(m, n);
  }
  return pair_key(m, n);
}

std::optional<Integer> FlipEngine::lookup(const Key& key) const {
  if (!config_.memoize) return std::nullopt;
  const Shard& shard = shards_[std::hash<Key>{}(key) % kShards];
  std::lock_guard<std::mutex> lock(shard.mutex);
  auto it = shard.table.find(key);
  if (it == shard.table.end()) return std::nullopt;
  return it->second;
}

void FlipEngine::store(const Key& key, const Integer& value) {
  if (!config_.memoize) return;
  Shard& shard = shards_[std::hash<Key>{}(key) % kShards];
  std::lock_guard<std::mutex> lock(shard.mutex);
  shard.table[key] = value;
}

std::size_t FlipEngine::memo_size() const {
  std::size_t total = 0;
  for (const Shard& shard : shards_) {
    std::lock_guard<std::mutex> lock(shard.mutex);
    total += shard.table.size();
  }
  return total;
}

void FlipEngine::clear() {
  for (Shard& shard : shards_) {
    std::lock_guard<std::mutex> lock(shard.mutex);
    shard.table.clear();
  }
}

FlipValue flip_product(const Matroid& m, const Matroid& n,
                       const FlipConfig& config) {
  FlipEngine engine(config);
  return engine.product(m, n);
}

Matroid hadamard_matroid(const Matroid& m, const Matroid& n) {
  check_pair(m, n);
  const int size = m.size();
  const std::size_t count = std::size_t{1} << size;
  std::vector<char> independent(count, 0);
  independent[0] = 1;
  int best = 0;
  for (std::size_t s = 1; s < count; ++s) {
    const Subset f = static_cast<Subset>(s);
    bool ok = hadamard_inequality(m, n, f);
    for (Subset rest = f; ok && rest; rest &= rest - 1) {
      ok = independent[f & ~(rest & (~rest + 1))];
    }
    independent[s] = ok;
    if (ok) best = std::max(best, cardinality(f));
  }
  std::vector<Subset> bases;
  for (std::size_t s = 0; s < count; ++s) {
    if (independent[s] && cardinality(static_cast<Subset>(s)) == best) {
      bases.push_back(static_cast<Subset>(s));
    }
  }
  return Matroid::from_bases_unchecked(size, std::move(bases));
}

bool is_flip_positive(const Matroid& m, const Matroid& n) {
  check_pair(m, n);
  if (m.loops() != 0 || n.loops() != 0) return false;
  const std::size_t count = std::size_t{1} << m.size();
  for (std::size_t s = 1; s < count; ++s) {
    if (!hadamard_inequality(m, n, static_cast<Subset>(s))) return false;
  }
  return true;
}

const char* zero_certificate_name(ZeroCertificate::Kind kind) {
  switch (kind) {
    case ZeroCertificate::Kind::kNone: return "None";
    case ZeroCertificate::Kind::kLoop: return "Loop";
    case ZeroCertificate::Kind::kRankDeficit: return "RankDeficit";
    case ZeroCertificate::Kind::kSharedColoop: return "SharedColoop";
    case ZeroCertificate::Kind::kBadSubset: return "BadSubset";
  }
  return "Unknown";
}

ZeroCertificate flip_zero_certificate(const Matroid& m, const Matroid& n) {
  check_pair(m, n);
  using Kind = ZeroCertificate::Kind;
  const int size = m.size();
  if (const Subset loops = m.loops() | n.loops()) {
    return {Kind::kLoop, singleton(lowest_element(loops))};
  }
  const int ranks = m.rank() + n.rank();
  if (ranks < size + 1) return {Kind::kRankDeficit, 0};
  if (ranks == size + 1 && size >= 2) {
    if (const Subset shared = m.coloops() & n.coloops()) {
      return {Kind::kSharedColoop, singleton(lowest_element(shared))};
    }
  }
  for (int k = 1; k <= size; ++k) {
    std::optional<Subset> bad;
    for_each_k_subset(size, k, [&](Subset f) {
      if (!bad && !hadamard_inequality(m, n, f)) bad = f;
    });
    if (bad) return {Kind::kBadSubset, *bad};
  }
  return {Kind::kNone, 0};
}

}  // namespace flipprod
