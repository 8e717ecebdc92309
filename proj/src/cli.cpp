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

#include "flipprod/cli.hpp"

#include <algorithm>
#include <functional>
#include <iomanip>
#include <limits>
#include <map>
#include <set>
#include <sstream>

#include "CLI11.hpp"

#include "flipprod/checks.hpp"
#include "flipprod/descriptors.hpp"
#include "flipprod/enumeration.hpp"
#include "flipprod/error.hpp"
#include "flipprod/flip.hpp"
#include "flipprod/gain.hpp"
#include "flipprod/invariants.hpp"
#include "flipprod/oracle.hpp"

namespace flipprod {
namespace {

struct Options {
  std::string format = "text";
  std::string pivot = "index";
  std::string memo = "exact";
  int jobs = 1;
  std::uint64_t seed = 1;
  int epsilon = 0;
  std::vector<std::string> inputs;
  int k1 = 0, k2 = 0, n = 0, max_n = 0;
};

FlipConfig engine_config(const Options& o) {
  FlipConfig c;
  c.pivot_rule = o.pivot == "auto" ? PivotRule::kMinBranching
                                   : PivotRule::kFirstIndex;
  c.memo_mode = o.memo == "iso" ? MemoMode::kIsoCanonical : MemoMode::kExact;
  c.parallel_width = std::max(1, o.jobs);
  return c;
}

// Exact integers go out as JSON numbers while they fit, as strings beyond.
Json integer_json(const Integer& v) {
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max()) {
    return Json(static_cast<long long>(v));
  }
  return Json(v.str());
}

Json value_json(const FlipValue& v) {
  return v.is_infinite() ? Json("inf") : integer_json(v.value());
}

Json integers_json(const std::vector<Integer>& xs) {
  Json out = Json::array();
  for (const Integer& x : xs) out.push_back(integer_json(x));
  return out;
}

Json histogram_json(const Histogram& h) {
  Json out = Json::object();
  for (const auto& [p, count] : h) out[std::to_string(p)] = count;
  return out;
}

// Ascending coefficients, printed from the top degree down.
std::string polynomial_text(const std::vector<Integer>& coeffs) {
  std::ostringstream os;
  bool first = true;
  for (int i = static_cast<int>(coeffs.size()) - 1; i >= 0; --i) {
    const Integer& c = coeffs[i];
    if (c == 0) continue;
    const Integer mag = c < 0 ? Integer(-c) : c;
    if (first) {
      if (c < 0) os << "-";
    } else {
      os << (c < 0 ? " - " : " + ");
    }
    first = false;
    if (mag != 1 || i == 0) os << mag;
    if (i >= 1) os << "t";
    if (i >= 2) os << "^" << i;
  }
  if (first) os << "0";
  return os.str();
}

struct Row {
  std::string left;
  Histogram histogram;
};

// Column layout of the h-table: one column per p, zeros shown up to the
// largest p present in any row.
void print_table(std::ostream& out, const std::string& header,
                 const std::vector<Row>& rows, const std::vector<long long>& ps) {
  std::size_t left = header.size();
  for (const Row& r : rows) left = std::max(left, r.left.size());
  std::vector<std::size_t> widths;
  for (long long p : ps) {
    std::size_t w = std::to_string(p).size();
    for (const Row& r : rows) {
      auto it = r.histogram.find(p);
      if (it != r.histogram.end()) w = std::max(w, std::to_string(it->second).size());
    }
    widths.push_back(w);
  }
  out << std::left << std::setw(static_cast<int>(left)) << header << " |";
  for (std::size_t i = 0; i < ps.size(); ++i) {
    out << " " << std::right << std::setw(static_cast<int>(widths[i])) << ps[i];
  }
  out << "\n";
  for (const Row& r : rows) {
    long long top = r.histogram.empty() ? 0 : r.histogram.rbegin()->first;
    std::ostringstream line;
    line << std::left << std::setw(static_cast<int>(left)) << r.left << " |";
    for (std::size_t i = 0; i < ps.size(); ++i) {
      std::string cell;
      if (ps[i] <= top) {
        auto it = r.histogram.find(ps[i]);
        cell = std::to_string(it == r.histogram.end() ? 0 : it->second);
      }
      line << " " << std::right << std::setw(static_cast<int>(widths[i])) << cell;
    }
    std::string text = line.str();
    text.erase(text.find_last_not_of(' ') + 1);
    out << text << "\n";
  }
}

void emit(std::ostream& out, const Options& o, const Json& j,
          const std::function<void()>& text) {
  if (o.format == "json") {
    out << j.dump(2) << "\n";
  } else {
    text();
  }
}

int cmd_flip(const Options& o, std::ostream& out) {
  const Matroid m = load_matroid(o.inputs.at(0));
  const Matroid n = load_matroid(o.inputs.at(1));
  FlipEngine engine(engine_config(o));
  const FlipValue v = engine.product(m, n);
  emit(out, o, {{"flip", value_json(v)}}, [&] { out << v << "\n"; });
  return kExitOk;
}

int cmd_beta(const Options& o, std::ostream& out) {
  const Matroid m = load_matroid(o.inputs.at(0));
  FlipEngine engine(engine_config(o));
  const Integer direct = beta_direct(m);
  const FlipValue via = beta_via_flip(m, o.epsilon, engine);
  if (!via.is_finite() || via.value() != direct) {
    throw Error(ErrorCode::kInternal, "beta_direct = " + direct.str() +
                                          " but beta_via_flip = " + via.to_string());
  }
  emit(out, o, {{"beta", integer_json(direct)}, {"epsilon", o.epsilon}},
       [&] { out << direct << "\n"; });
  return kExitOk;
}

int cmd_nbc(const Options& o, std::ostream& out) {
  const Matroid m = load_matroid(o.inputs.at(0));
  FlipEngine engine(engine_config(o));
  const Integer count = nbc_count(m);
  const FlipValue via = nbc_flip_check(m, engine);
  if (!via.is_finite() || via.value() != count) {
    throw Error(ErrorCode::kInternal, "nbc = " + count.str() +
                                          " but M * U = " + via.to_string());
  }
  emit(out, o, {{"nbc", integer_json(count)}}, [&] { out << count << "\n"; });
  return kExitOk;
}

int cmd_charpoly(const Options& o, std::ostream& out) {
  const Matroid m = load_matroid(o.inputs.at(0));
  const CharPoly cp = char_poly(m);
  Json j = {{"coefficients", integers_json(cp.coeffs)},
            {"reduced", integers_json(cp.reduced)},
            {"mu", integers_json(cp.mu)}};
  emit(out, o, j, [&] {
    out << "p(t) = " << polynomial_text(cp.coeffs) << "\n";
    out << "reduced(t) = " << polynomial_text(cp.reduced) << "\n";
    out << "mu =";
    for (const Integer& x : cp.mu) out << " " << x;
    out << "\n";
  });
  return kExitOk;
}

int cmd_hadamard(const Options& o, std::ostream& out) {
  const Matroid h = hadamard_matroid(load_matroid(o.inputs.at(0)),
                                     load_matroid(o.inputs.at(1)));
  emit(out, o, matroid_to_json(h), [&] {
    out << "rank " << h.rank() << ", " << h.bases().size() << " bases\n";
    for (Subset b : h.bases()) {
      const auto elems = elements_of(b);
      out << "{";
      for (std::size_t i = 0; i < elems.size(); ++i) out << (i ? "," : "") << elems[i];
      out << "}\n";
    }
  });
  return kExitOk;
}

int cmd_oracle(const Options& o, std::ostream& out) {
  const Matroid m = load_matroid(o.inputs.at(0));
  const Matroid n = load_matroid(o.inputs.at(1));
  const OracleResult r = oracle_flip_detailed(m, n, o.epsilon, o.seed);
  Json j = {{"flip", value_json(r.value)},
            {"seed", o.seed},
            {"epsilon", o.epsilon},
            {"resamples", r.resamples},
            {"multiplicities", integers_json(r.multiplicities)}};
  emit(out, o, j, [&] { out << r.value << "\n"; });
  return kExitOk;
}

int cmd_c2(const Options& o, std::ostream& out) {
  const Graph g = load_graph(o.inputs.at(0));
  FlipEngine engine(engine_config(o));
  const Integer c = realisation_plane(g.vertices, g.edges, engine);
  emit(out, o, {{"c2", integer_json(c)}}, [&] { out << c << "\n"; });
  return kExitOk;
}

int cmd_gain(const Options& o, std::ostream& out, bool rotation) {
  const GainGraph g = load_gain_graph(o.inputs.at(0));
  FlipEngine engine(engine_config(o));
  const Integer c = rotation ? realisation_sym(g, engine) : realisation_per(g, engine);
  emit(out, o, {{rotation ? "csym" : "cper", integer_json(c)}},
       [&] { out << c << "\n"; });
  return kExitOk;
}

std::string pair_label(int k1, int k2) {
  return "(" + std::to_string(k1) + "," + std::to_string(k2) + ")";
}

int cmd_htable(const Options& o, std::ostream& out) {
  FlipEngine engine(engine_config(o));
  std::vector<std::pair<int, int>> shapes;
  if (o.max_n > 0) {
    for (int n = 1; n <= o.max_n; ++n) {
      for (int k1 = 1; 2 * k1 <= n + 1; ++k1) shapes.push_back({k1, n + 1 - k1});
    }
  } else {
    shapes.push_back({o.k1, o.k2});
  }
  std::vector<Row> rows;
  std::vector<ConjectureReport> reports;
  std::set<long long> ps;
  for (const auto& [k1, k2] : shapes) {
    const Histogram h = h_table(k1, k2, engine);
    reports.push_back(conjecture_scan(k1, k2, h, engine));
    std::string n = std::to_string(k1 + k2 - 1);
    if (!rows.empty() && std::to_string(reports[reports.size() - 2].n) == n) n = "";
    rows.push_back({n + (n.empty() ? "  " : " ") + pair_label(k1, k2), h});
    for (const auto& [p, count] : h) ps.insert(p);
  }
  Json j;
  if (shapes.size() == 1) {
    j = histogram_json(rows.front().histogram);
  } else {
    j = Json::object();
    for (std::size_t i = 0; i < shapes.size(); ++i) {
      j[std::to_string(shapes[i].first) + "," + std::to_string(shapes[i].second)] =
          histogram_json(rows[i].histogram);
    }
  }
  emit(out, o, j, [&] {
    const long long top = ps.empty() ? 0 : *ps.rbegin();
    std::vector<long long> columns;
    for (long long p = 0; p <= top; ++p) columns.push_back(p);
    print_table(out, "n (k1,k2)", rows, columns);
    for (const ConjectureReport& r : reports) {
      out << pair_label(r.k1, r.k2) << " conjecture: "
          << (r.holds() ? "holds" : "fails");
      if (!r.surjectivity_checked && !r.threshold_checked) out << " (vacuous)";
      for (const std::string& v : r.violations) out << "; " << v;
      out << "\n";
    }
  });
  return kExitOk;
}

int cmd_selftable(const Options& o, std::ostream& out) {
  FlipEngine engine(engine_config(o));
  std::vector<int> sizes;
  if (o.max_n > 0) {
    for (int n = 1; n <= o.max_n; n += 2) sizes.push_back(n);
  } else {
    sizes.push_back(o.n);
  }
  std::vector<Row> rows;
  std::set<long long> ps = {0, 1};
  for (int n : sizes) {
    const Histogram h = self_product_table(n, engine);
    rows.push_back({pair_label(n, (n + 1) / 2), h});
    for (const auto& [p, count] : h) ps.insert(p);
  }
  Json j;
  if (sizes.size() == 1) {
    j = histogram_json(rows.front().histogram);
  } else {
    j = Json::object();
    for (std::size_t i = 0; i < sizes.size(); ++i) {
      j[std::to_string(sizes[i])] = histogram_json(rows[i].histogram);
    }
  }
  emit(out, o, j, [&] {
    // Self products are even once n > 1, so only 0, 1 and even p get columns.
    std::vector<long long> columns;
    for (long long p = 0; p <= *ps.rbegin(); ++p) {
      if (p <= 1 || p % 2 == 0 || ps.count(p)) columns.push_back(p);
    }
    print_table(out, "(n,k)", rows, columns);
  });
  return kExitOk;
}

int cmd_check(const Options& o, std::ostream& out) {
  SuiteOptions so;
  so.max_n = o.max_n > 0 ? o.max_n : 5;
  so.seed = o.seed;
  so.config = engine_config(o);
  PropertySuite suite(so);
  const auto results = suite.run_all();
  bool all = true;
  Json j = Json::array();
  for (const CheckResult& r : results) {
    all = all && r.passed;
    j.push_back({{"name", r.name},
                 {"passed", r.passed},
                 {"cases", r.cases},
                 {"detail", r.detail}});
  }
  emit(out, o, j, [&] {
    for (const CheckResult& r : results) {
      out << (r.passed ? "PASS " : "FAIL ") << r.name << " (" << r.cases
          << " cases, " << std::fixed << std::setprecision(2) << r.seconds
          << " s)";
      if (!r.detail.empty()) out << ": " << r.detail;
      out << "\n";
    }
  });
  return all ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"Flip products of matroids and rigidity realisation counts"};
  app.require_subcommand(1);
  Options o;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--format", o.format, "Output format")
        ->check(CLI::IsMember({"json", "text"}));
    sub->add_option("--pivot", o.pivot, "Pivot rule")
        ->check(CLI::IsMember({"index", "auto"}));
    sub->add_option("--memo", o.memo, "Memo key")
        ->check(CLI::IsMember({"exact", "iso"}));
    sub->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::Range(1, 256));
    return sub;
  };
  auto inputs = [&](CLI::App* sub, int count, const std::string& what) {
    sub->add_option("inputs", o.inputs, what)->required()->expected(count);
    return sub;
  };

  std::map<std::string, std::function<int()>> actions;
  auto add = [&](const std::string& name, const std::string& help,
                 std::function<int()> fn) {
    actions[name] = std::move(fn);
    return common(app.add_subcommand(name, help));
  };

  inputs(add("flip", "Flip product M * N", [&] { return cmd_flip(o, out); }), 2,
         "Matroid descriptors M N");
  auto* beta = inputs(add("beta", "Beta invariant", [&] { return cmd_beta(o, out); }),
                      1, "Matroid descriptor");
  beta->add_option("--epsilon", o.epsilon, "Element used by the flip identity");
  inputs(add("nbc", "Number of nbc bases", [&] { return cmd_nbc(o, out); }), 1,
         "Matroid descriptor");
  inputs(add("charpoly", "Characteristic polynomial",
             [&] { return cmd_charpoly(o, out); }),
         1, "Matroid descriptor");
  inputs(add("hadamard", "Hadamard product matroid",
             [&] { return cmd_hadamard(o, out); }),
         2, "Matroid descriptors M N");
  auto* oracle = inputs(add("oracle", "Flip product by stable intersection",
                            [&] { return cmd_oracle(o, out); }),
                        2, "Matroid descriptors M N");
  oracle->add_option("--seed", o.seed, "Seed of the generic shift");
  oracle->add_option("--epsilon", o.epsilon, "Coordinate fixed by the slice");
  inputs(add("c2", "Plane realisation number of a minimally rigid graph",
             [&] { return cmd_c2(o, out); }),
         1, "Graph descriptor");
  inputs(add("csym", "Rotation-symmetric realisation number",
             [&] { return cmd_gain(o, out, true); }),
         1, "Z_k gain graph descriptor");
  inputs(add("cper", "Periodic realisation number",
             [&] { return cmd_gain(o, out, false); }),
         1, "Z^d gain graph descriptor");
  auto* htable = add("htable", "Histogram of flip products over rank (k1, k2) pairs",
                     [&] { return cmd_htable(o, out); });
  htable->add_option("k1", o.k1, "Rank of M")->check(CLI::Range(1, 6));
  htable->add_option("k2", o.k2, "Rank of N")->check(CLI::Range(1, 6));
  htable->add_option("--max-n", o.max_n, "Every row with k1 <= k2 up to this n")
      ->check(CLI::Range(1, kMaxEnumeration));
  auto* self = add("selftable", "Histogram of self products for rank (n+1)/2",
                   [&] { return cmd_selftable(o, out); });
  self->add_option("n", o.n, "Odd ground set size")->check(CLI::Range(1, 5));
  self->add_option("--max-n", o.max_n, "Every odd n up to this bound")
      ->check(CLI::Range(1, 5));
  auto* check = add("check", "Run the property suite", [&] { return cmd_check(o, out); });
  check->add_option("--seed", o.seed, "Seed for the randomized checks");
  check->add_option("--max-n", o.max_n, "Largest exhaustive ground set")
      ->check(CLI::Range(1, 5));

  std::vector<std::string> reversed(args.begin() + (args.empty() ? 0 : 1), args.end());
  std::reverse(reversed.begin(), reversed.end());
  try {
    app.parse(reversed);
    if (htable->parsed() && o.max_n == 0 && (o.k1 == 0 || o.k2 == 0)) {
      throw CLI::ValidationError("htable", "give k1 k2 or --max-n");
    }
    if (self->parsed() && o.max_n == 0 && o.n == 0) {
      throw CLI::ValidationError("selftable", "give n or --max-n");
    }
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInputError;
  }

  try {
    for (const auto& [name, fn] : actions) {
      if (app.got_subcommand(name)) return fn();
    }
    return kExitInputError;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return is_consistency_failure(e.code()) ? kExitConsistency : kExitInputError;
  } catch (const Json::exception& e) {
    err << "error: InvalidInput: " << e.what() << "\n";
    return kExitInputError;
  } catch (const std::exception& e) {
    err << "internal error: " << e.what() << "\n";
    return kExitConsistency;
  }
}

}  // namespace flipprod
