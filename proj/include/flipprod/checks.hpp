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

#ifndef FLIPPROD_CHECKS_HPP_
#define FLIPPROD_CHECKS_HPP_

#include <cstdint>
#include <map>
#include <random>
#include <string>
#include <vector>

#include "flipprod/flip.hpp"
#include "flipprod/matroid.hpp"

namespace flipprod {

struct CheckResult {
  std::string name;
  bool passed = true;
  long long cases = 0;
  std::string detail;  // first counterexample, or a summary line
  double seconds = 0;
};

struct SuiteOptions {
  int max_n = 5;
  std::uint64_t seed = 20260417;
  FlipConfig config;
  int random_symmetry_pairs = 200;
  int random_beta_matroids = 100;
  int random_oracle_pairs = 50;
  int orderings_per_matroid = 10;
  int switch_sequences = 100;
};

/// Column matroid of a random r x n matrix over F_p. With `loopless`, zero
/// columns are redrawn. The rank is exactly r.
Matroid random_matroid(int n, int r, int p, bool loopless, std::mt19937_64& rng);

std::string describe(const Matroid& m);

/// Exhaustive property checks over all matroids on at most max_n elements
/// (up to isomorphism, paired under every relabeling), plus seeded random
/// samples on larger ground sets.
class PropertySuite {
 public:
  explicit PropertySuite(SuiteOptions options = {});

  CheckResult matroid_axioms();
  CheckResult flip_symmetry();
  CheckResult pivot_independence();
  CheckResult loop_annihilation();
  CheckResult rank_gate();
  CheckResult positivity_agreement();
  CheckResult beta_identity();
  CheckResult nbc_identities();
  CheckResult mu_identities();
  CheckResult nbc_upper_bound();
  CheckResult relaxation_monotonicity();
  CheckResult oracle_equivalence();
  CheckResult oracle_invariance();
  CheckResult gain_properties();

  std::vector<CheckResult> run_all();

  /// Every isomorphism class on [n], all ranks.
  const std::vector<Matroid>& classes(int n);

 private:
  // Calls fn(M, sigma(N)) for every ordered pair of classes on [n] and every
  // relabeling sigma. fn returns false to stop early.
  template <typename Fn>
  void for_each_pair(int n, Fn&& fn);

  SuiteOptions options_;
  FlipEngine engine_;
  std::map<int, std::vector<Matroid>> classes_;
};

}  // namespace flipprod

#endif  // FLIPPROD_CHECKS_HPP_
