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

#include "flipprod/enumeration.hpp"

#include <algorithm>
#include <exception>
#include <numeric>
#include <set>
#include <thread>

#include "flipprod/error.hpp"

namespace flipprod {
namespace {

// DFS over subfamilies of the r-subsets, in candidate order. After deciding
// candidate i, a family is abandoned when some exchange requirement can no
// longer be met by included or undecided candidates.
class FamilySearch {
 public:
  FamilySearch(int n, int r) : n_(n) {
    for_each_k_subset(n, r, [&](Subset s) { candidates_.push_back(s); });
    state_.assign(candidates_.size(), kUndecided);
  }

  std::set<std::vector<Subset>> run() {
    descend(0);
    return found_;
  }

 private:
  enum State : char { kUndecided, kIn, kOut };

  int index_of(Subset s) const {
    return static_cast<int>(
        std::lower_bound(candidates_.begin(), candidates_.end(), s) -
        candidates_.begin());
  }

  bool still_possible() const {
    for (Subset b1 : chosen_) {
      for (Subset b2 : chosen_) {
        if (b1 == b2) continue;
        for (Subset xs = b1 & ~b2; xs; xs &= xs - 1) {
          const Subset x = xs & (~xs + 1);
          bool ok = false;
          for (Subset ys = b2 & ~b1; ys && !ok; ys &= ys - 1) {
            const Subset y = ys & (~ys + 1);
            ok = state_[index_of((b1 & ~x) | y)] != kOut;
          }
          if (!ok) return false;
        }
      }
    }
    return true;
  }

  void descend(std::size_t i) {
    if (i == candidates_.size()) {
      if (!chosen_.empty() && satisfies_exchange_axiom(chosen_)) {
        found_.insert(
            iso_canonical_bases(Matroid::from_bases_unchecked(n_, chosen_)));
      }
      return;
    }
    state_[i] = kIn;
    chosen_.push_back(candidates_[i]);
    if (still_possible()) descend(i + 1);
    chosen_.pop_back();
    state_[i] = kOut;
    if (still_possible()) descend(i + 1);
    state_[i] = kUndecided;
  }

  int n_;
  std::vector<Subset> candidates_;
  std::vector<State> state_;
  std::vector<Subset> chosen_;
  std::set<std::vector<Subset>> found_;
};

std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  std::vector<std::vector<int>> out;
  do {
    out.push_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

long long as_count(const FlipValue& v) {
  if (v.is_infinite()) {
    throw Error(ErrorCode::kInternal, "infinite value in a table");
  }
  return v.value().convert_to<long long>();
}

long long factorial(int n) {
  long long f = 1;
  for (int i = 2; i <= n; ++i) f *= i;
  return f;
}

}  // namespace

IsoClassSet enumerate_matroids(int n, int r) {
  if (n < 0 || n > kMaxEnumeration) {
    throw Error(ErrorCode::kSizeCapExceeded,
                "enumeration is limited to n <= " +
                    std::to_string(kMaxEnumeration));
  }
  if (r < 0 || r > n) {
    throw Error(ErrorCode::kRankOutOfRange, "need 0 <= r <= n");
  }
  IsoClassSet out;
  out.n = n;
  out.r = r;
  for (const auto& bases : FamilySearch(n, r).run()) {
    out.reps.push_back(Matroid::from_bases_unchecked(n, bases));
  }
  return out;
}

Histogram h_table(int k1, int k2, FlipEngine& engine) {
  const int n = k1 + k2 - 1;
  if (k1 < 1 || k2 < 1 || n > kMaxEnumeration) {
    throw Error(ErrorCode::kSizeCapExceeded,
                "h table needs k1, k2 >= 1 and k1 + k2 - 1 <= " +
                    std::to_string(kMaxEnumeration));
  }
  const auto left = enumerate_matroids(n, k1).reps;
  const auto right = enumerate_matroids(n, k2).reps;
  const auto perms = all_permutations(n);

  const std::size_t workers = static_cast<std::size_t>(
      std::max(1, engine.config().parallel_width));
  std::vector<Histogram> partial(workers);
  std::vector<std::exception_ptr> failures(workers);
  auto work = [&](std::size_t w) {
    try {
      for (std::size_t i = w; i < left.size(); i += workers) {
        for (const Matroid& nn : right) {
          for (const auto& sigma : perms) {
            ++partial[w][as_count(engine.product(left[i], relabel(nn, sigma)))];
          }
        }
      }
    } catch (...) {
      failures[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    work(0);
  } else {
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work, w);
    for (auto& t : pool) t.join();
  }
  Histogram total;
  for (std::size_t w = 0; w < workers; ++w) {
    if (failures[w]) std::rethrow_exception(failures[w]);
    for (const auto& [p, c] : partial[w]) total[p] += c;
  }
  return total;
}

Histogram self_product_table(int n, FlipEngine& engine) {
  if (n < 1 || n % 2 == 0 || n > kMaxEnumeration) {
    throw Error(ErrorCode::kSizeCapExceeded,
                "self product table needs odd n <= " +
                    std::to_string(kMaxEnumeration));
  }
  Histogram out;
  for (const Matroid& m : enumerate_matroids(n, (n + 1) / 2).reps) {
    ++out[as_count(engine.product(m, m))];
  }
  return out;
}

ConjectureReport conjecture_scan(int k1, int k2, const Histogram& table,
                                 FlipEngine& engine) {
  ConjectureReport report;
  report.k1 = k1;
  report.k2 = k2;
  report.n = k1 + k2 - 1;
  report.uniform_value =
      as_count(engine.product(uniform(report.n, k1), uniform(report.n, k2)));
  auto h = [&](long long p) {
    auto it = table.find(p);
    return it == table.end() ? 0LL : it->second;
  };
  const long long bound = factorial(report.n);
  if (report.n >= 2) {
    report.surjectivity_checked = true;
    for (long long p = 0; p <= report.uniform_value; ++p) {
      if (h(p) < 1) {
        report.surjectivity_holds = false;
        report.violations.push_back("h(" + std::to_string(p) + ") = 0");
      }
    }
  }
  if (report.n >= 3) {
    report.threshold_checked = true;
    for (long long p = 0; p <= report.uniform_value; ++p) {
      const bool small = h(p) <= bound;
      const bool top = p == report.uniform_value;
      if (small != top) {
        report.threshold_holds = false;
        report.violations.push_back(
            "h(" + std::to_string(p) + ") = " + std::to_string(h(p)) +
            (small ? " <= " : " > ") + std::to_string(bound));
      }
    }
  }
  return report;
}

ConjectureReport conjecture_scan(int k1, int k2, FlipEngine& engine) {
  return conjecture_scan(k1, k2, h_table(k1, k2, engine), engine);
}

}  // namespace flipprod
