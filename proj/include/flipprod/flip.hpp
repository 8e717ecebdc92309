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

#ifndef FLIPPROD_FLIP_HPP_
#define FLIPPROD_FLIP_HPP_

#include <array>
#include <cstddef>
#include <mutex>
#include <optional>
#include <unordered_map>

#include "flipprod/flip_value.hpp"
#include "flipprod/matroid.hpp"

namespace flipprod {

enum class PivotRule { kFirstIndex, kMinBranching };
enum class MemoMode { kExact, kIsoCanonical };

struct FlipConfig {
  PivotRule pivot_rule = PivotRule::kFirstIndex;
  MemoMode memo_mode = MemoMode::kExact;
  int parallel_width = 1;
  /// Disabling the memo is only useful for testing the recursion itself.
  bool memoize = true;
};

/// Flip product by deletion-contraction with zero rules, coloop removal and
/// a memo table. One engine can be reused across many queries; the memo is
/// shared and safe for concurrent use.
class FlipEngine {
 public:
  explicit FlipEngine(FlipConfig config = {}) : config_(config) {}

  FlipValue product(const Matroid& m, const Matroid& n);

  /// As product(), but the top-level expansion uses pivot `epsilon`
  /// whenever no zero rule decides the answer first. Memo and the coloop
  /// rule are bypassed at the top level.
  FlipValue product_with_pivot(const Matroid& m, const Matroid& n,
                               int epsilon);

  const FlipConfig& config() const { return config_; }
  std::size_t memo_size() const;
  void clear();

 private:
  static constexpr std::size_t kShards = 16;
  struct Shard {
    mutable std::mutex mutex;
    std::unordered_map<Key, Integer> table;
  };

  Integer recurse(const Matroid& m, const Matroid& n);
  Integer expand(const Matroid& m, const Matroid& n, int epsilon,
                 int width);
  int choose_pivot(const Matroid& m, const Matroid& n) const;
  Key memo_key(const Matroid& m, const Matroid& n) const;
  std::optional<Integer> lookup(const Key& key) const;
  void store(const Key& key, const Integer& value);

  FlipConfig config_;
  std::array<Shard, kShards> shards_;
};

/// One-shot convenience wrapper.
FlipValue flip_product(const Matroid& m, const Matroid& n,
                       const FlipConfig& config = {});

/// Matroid whose independent sets are the F with
/// r_M(F') + r_N(F') >= |F'| + 1 for every nonempty F' inside F.
Matroid hadamard_matroid(const Matroid& m, const Matroid& n);

/// Both loopless and every nonempty F satisfies the Hadamard inequality.
bool is_flip_positive(const Matroid& m, const Matroid& n);

struct ZeroCertificate {
  enum class Kind { kNone, kLoop, kRankDeficit, kSharedColoop, kBadSubset };
  Kind kind = Kind::kNone;
  Subset witness = 0;  // the loop, shared coloop or violating subset
};

const char* zero_certificate_name(ZeroCertificate::Kind kind);

/// First witness that M * N = 0, or kNone. A bad subset is reported with
/// minimum cardinality.
ZeroCertificate flip_zero_certificate(const Matroid& m, const Matroid& n);

/// Partition of the ground set into connected components.
std::vector<Subset> connected_components(const Matroid& m);

}  // namespace flipprod

#endif  // FLIPPROD_FLIP_HPP_
