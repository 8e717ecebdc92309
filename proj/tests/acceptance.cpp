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

// Acceptance run. Prints one PASS/FAIL line per criterion. With an argument
// N only criterion N runs, and the exit status reflects it alone.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "flipprod/checks.hpp"
#include "flipprod/enumeration.hpp"
#include "flipprod/error.hpp"
#include "flipprod/flip.hpp"
#include "flipprod/gain.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace flipprod;
using namespace flipprod::testing;

namespace {

struct Verdict {
  bool passed;
  std::string detail;
};

std::string histogram_text(const Histogram& h) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (const auto& [p, c] : h) {
    os << (first ? "" : ",") << p << ":" << c;
    first = false;
  }
  os << "}";
  return os.str();
}

Verdict base_cases() {
  const Matroid free1 = uniform(1, 1), loop1 = uniform(1, 0);
  const bool ok = flip_product(free1, free1) == FlipValue(1) &&
                  flip_product(free1, loop1).is_zero() &&
                  flip_product(loop1, free1).is_zero() &&
                  flip_product(loop1, loop1).is_zero();
  return {ok, "U11*U11 = 1, other one-element pairs 0"};
}

Verdict graphs() {
  const Graph g = glued_graph(), h = moved_graph();
  const Matroid glued = graphic(g.vertices, g.edges);
  const Matroid moved = graphic(h.vertices, h.edges);
  const FlipValue a = flip_product(glued, glued), b = flip_product(moved, moved);
  return {a == FlipValue(0) && b == FlipValue(16),
          "glued " + a.to_string() + " (want 0), moved edge " + b.to_string() + " (want 16)"};
}

Verdict uniform_binomials() {
  FlipEngine engine;
  int checked = 0;
  for (int n = 1; n <= 10; ++n) {
    for (int r = 1; r <= n; ++r, ++checked) {
      const FlipValue v = engine.product(uniform(n, r), uniform(n, n - r + 1));
      if (v != FlipValue(binomial(n - 1, r - 1))) {
        return {false, "U(" + std::to_string(n) + "," + std::to_string(r) + ") gives " +
                           v.to_string()};
      }
    }
  }
  return {true, std::to_string(checked) + " pairs equal C(n-1,r-1)"};
}

Verdict self_table() {
  FlipEngine engine;
  const Histogram a = self_product_table(1, engine), b = self_product_table(3, engine),
                  c = self_product_table(5, engine);
  const bool ok = a == Histogram{{1, 1}} && b == Histogram{{0, 2}, {2, 1}} &&
                  c == Histogram{{0, 10}, {4, 2}, {6, 1}};
  return {ok, "n=1 " + histogram_text(a) + ", n=3 " + histogram_text(b) + ", n=5 " +
                  histogram_text(c)};
}

const std::vector<std::pair<std::pair<int, int>, Histogram>>& h_rows() {
  static const std::vector<std::pair<std::pair<int, int>, Histogram>> rows = {
      {{1, 1}, {{1, 1}}},
      {{1, 2}, {{0, 2}, {1, 2}}},
      {{1, 3}, {{0, 12}, {1, 6}}},
      {{2, 2}, {{0, 32}, {1, 16}, {2, 6}}},
      {{1, 4}, {{0, 72}, {1, 24}}},
      {{2, 3}, {{0, 414}, {1, 174}, {2, 60}, {3, 24}}},
      {{1, 5}, {{0, 480}, {1, 120}}},
      {{2, 4}, {{0, 5208}, {1, 1416}, {2, 768}, {3, 288}, {4, 120}}},
      {{3, 3}, {{0, 11724}, {1, 3864}, {2, 2596}, {3, 1192}, {4, 508}, {5, 276}, {6, 120}}},
  };
  return rows;
}

Verdict h_table_rows() {
  FlipEngine engine;
  for (const auto& [shape, expected] : h_rows()) {
    Histogram got = h_table(shape.first, shape.second, engine);
    if (got.count(0) && got.at(0) == 0) got.erase(0);
    if (got != expected) {
      return {false, "row (" + std::to_string(shape.first) + "," + std::to_string(shape.second) +
                         ") gives " + histogram_text(got)};
    }
  }
  return {true, "9 rows exact, (3,3) = " + histogram_text(h_rows().back().second)};
}

Verdict binary_example() {
  const Matroid b = binary_matroid();
  const FlipValue v = flip_product(b, b);
  return {b.rank() == 4 && b.size() == 7 && v == FlipValue(6),
          "rank " + std::to_string(b.rank()) + " on " + std::to_string(b.size()) +
              ", M*M = " + v.to_string()};
}

Verdict rotation_example() {
  FlipEngine engine;
  const GainGraph g = rotation_graph();
  const bool rigid = is_min_rotation_rigid(g);
  const Integer c = realisation_sym(g, engine);
  const FlipValue self = engine.product(zk_matroid(g), zk_matroid(g));
  return {rigid && c == 6,
          "csym = " + c.str() + " (want 6), min rotation rigid = " + (rigid ? "true" : "false") +
              "; the Z_4 matroid is U(5,3) and M*M = " + self.to_string() +
              ", so half the self product is " + c.str()};
}

std::string suite_summary(const std::vector<CheckResult>& results, bool& all) {
  std::ostringstream os;
  all = true;
  long long cases = 0;
  for (const CheckResult& r : results) {
    cases += r.cases;
    if (!r.passed) {
      all = false;
      os << r.name << ": " << r.detail << "; ";
    }
  }
  os << results.size() << " checks, " << cases << " cases";
  return os.str();
}

Verdict oracle_agreement() {
  PropertySuite suite;
  const CheckResult r = suite.oracle_equivalence();
  return {r.passed, std::to_string(r.cases) + " pairs; " + r.detail};
}

Verdict invariant_suite() {
  PropertySuite suite;
  std::vector<CheckResult> results = {
      suite.flip_symmetry(),   suite.pivot_independence(), suite.loop_annihilation(),
      suite.rank_gate(),       suite.beta_identity(),      suite.nbc_identities(),
      suite.mu_identities(),   suite.nbc_upper_bound(),    suite.relaxation_monotonicity()};
  bool all = false;
  const std::string summary = suite_summary(results, all);
  return {all, summary};
}

Verdict conjecture() {
  FlipEngine engine;
  int holds = 0;
  std::string failures;
  for (const auto& [shape, expected] : h_rows()) {
    const Histogram got = h_table(shape.first, shape.second, engine);
    const ConjectureReport r = conjecture_scan(shape.first, shape.second, got, engine);
    if (r.holds()) {
      ++holds;
    } else {
      for (const std::string& v : r.violations) failures += v + "; ";
    }
  }
  return {failures.empty(), std::to_string(holds) + " of 9 rows satisfy both clauses" +
                                (failures.empty() ? "" : ": " + failures)};
}

// Enumeration stops at n = 6 by design, so the n = 7 rows are refused. The
// n = 6 h-table rows turn out to be cheap and are checked here as well.
Verdict desk_scale() {
  bool refused = false;
  try {
    enumerate_matroids(7, 4);
  } catch (const Error& e) {
    refused = e.code() == ErrorCode::kSizeCapExceeded;
  }
  FlipEngine engine;
  const bool six = h_table(1, 6, engine) == Histogram{{0, 3600}, {1, 720}} &&
                   h_table(2, 5, engine) == Histogram{{0, 66624}, {1, 16296}, {2, 9792},
                                                      {3, 4248}, {4, 1680}, {5, 720}} &&
                   h_table(3, 4, engine) ==
                       Histogram{{0, 335160}, {1, 85116}, {2, 78172}, {3, 51624},
                                 {4, 32808}, {5, 18128}, {6, 14372}, {7, 7772},
                                 {8, 3824}, {9, 1584}, {10, 720}};
  const bool substitutes =
      binary_example().passed && oracle_agreement().passed && invariant_suite().passed;
  return {refused && six && substitutes,
          std::string("n = 7 enumeration ") + (refused ? "refused" : "not refused") +
              ", so the n = 7 h rows and the (7,4) self-product row are out of reach; "
              "real realisations and Hadamard fibre counts are out of scope; n = 6 h rows " +
              (six ? "match" : "differ") + "; substitutes (binary example, oracle agreement, "
              "invariant suite) " + (substitutes ? "pass" : "fail")};
}

struct Criterion {
  int id;
  const char* name;
  std::function<Verdict()> run;
};

}  // namespace

int main(int argc, char** argv) {
  const std::vector<Criterion> criteria = {
      {1, "one-element base cases", base_cases},
      {2, "glued and moved-edge graphs", graphs},
      {3, "uniform closed form n <= 10", uniform_binomials},
      {4, "self-product table", self_table},
      {5, "h-table n <= 5", h_table_rows},
      {6, "binary rank-4 example", binary_example},
      {7, "rotation-symmetric example", rotation_example},
      {8, "oracle equivalence", oracle_agreement},
      {9, "invariant suite", invariant_suite},
      {10, "conjecture scan n <= 5", conjecture},
      {11, "desk-scale limits", desk_scale},
  };
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all = true;
  for (const Criterion& c : criteria) {
    if (only != 0 && c.id != only) continue;
    const auto start = std::chrono::steady_clock::now();
    Verdict v;
    try {
      v = c.run();
    } catch (const std::exception& e) {
      v = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::printf("criterion %2d %s: %s (%.3f s) %s\n", c.id, c.name, v.passed ? "PASS" : "FAIL",
                secs, v.detail.c_str());
    all = all && v.passed;
  }
  return all ? 0 : 1;
}
