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

#include "flipprod/oracle.hpp"

#include <algorithm>
#include <random>
#include <set>

#include "flipprod/error.hpp"

namespace flipprod {
namespace {

int sign_of(const Integer& x) { return x.sign(); }

void covers_dfs(const Matroid& m, std::vector<Subset>& chain,
                std::vector<ChainCone>& out) {
  const Subset top = chain.back();
  if (top == m.ground()) {
    out.push_back({chain});
    return;
  }
  std::vector<Subset> covers;
  for (Subset rest = m.ground() & ~top; rest; rest &= rest - 1) {
    const Subset g = m.closure(top | (rest & (~rest + 1)));
    if (std::find(covers.begin(), covers.end(), g) == covers.end()) {
      covers.push_back(g);
    }
  }
  std::sort(covers.begin(), covers.end());
  for (Subset g : covers) {
    chain.push_back(g);
    covers_dfs(m, chain, out);
    chain.pop_back();
  }
}

struct Attempt {
  bool degenerate = false;
  Integer total{0};
  std::vector<Integer> multiplicities;
};

// One pass over all cone pairs for a fixed integer shift W.
Attempt intersect(const std::vector<ChainCone>& cones_m,
                  const std::vector<ChainCone>& cones_n,
                  const std::vector<Integer>& shift, int epsilon, int n) {
  Attempt attempt;
  std::set<std::vector<Rational>> points;
  const Eigen::Index dim = n + 1;

  for (const ChainCone& c1 : cones_m) {
    const std::vector<Subset> fs = c1.rays();
    const int na = static_cast<int>(fs.size());
    for (const ChainCone& c2 : cones_n) {
      const std::vector<Subset> gs = c2.rays();
      const int nb = static_cast<int>(gs.size());
      if (na + nb + 2 != dim) {
        throw Error(ErrorCode::kInternal, "cone dimensions do not add up");
      }
      // Unknowns: a_1..a_na, t, b_1..b_nb, s.
      DenseMatrix<long long> a = DenseMatrix<long long>::Zero(dim, dim);
      for (int e = 0; e < n; ++e) {
        for (int i = 0; i < na; ++i) a(e, i) = contains(fs[i], e);
        a(e, na) = 1;
        for (int j = 0; j < nb; ++j) a(e, na + 1 + j) = contains(gs[j], e);
        a(e, na + 1 + nb) = 1;
      }
      for (int i = 0; i < na; ++i) a(n, i) = contains(fs[i], epsilon);
      a(n, na) = 1;

      const auto inverse = fraction_free_inverse(a);
      if (!inverse) continue;  // no transverse intersection for any w
      const long long scale = inverse->scale;
      const int scale_sign = scale > 0 ? 1 : -1;

      auto numerator = [&](int k) {
        Integer sum(0);
        for (int e = 0; e < n; ++e) {
          const long long c = inverse->scaled_inverse(k, e);
          if (c != 0) sum += shift[e] * c;
        }
        return sum;
      };

      std::vector<Integer> y(dim);
      bool inside = true;
      for (int k = 0; k < dim && inside; ++k) {
        y[k] = numerator(k);
        if (k == na || k == na + 1 + nb) continue;  // lineality coordinates
        const int sign = sign_of(y[k]) * scale_sign;
        if (sign == 0) {
          attempt.degenerate = true;
          return attempt;
        }
        inside = sign > 0;
      }
      if (!inside) continue;

      std::vector<Rational> x(n);
      for (int e = 0; e < n; ++e) {
        Integer sum = y[na];
        for (int i = 0; i < na; ++i) {
          if (contains(fs[i], e)) sum += y[i];
        }
        x[e] = make_rational(sum, Integer(scale));
      }
      if (!points.insert(x).second) {
        attempt.degenerate = true;
        return attempt;
      }

      std::vector<std::vector<long long>> generators;
      auto indicator = [n](Subset s) {
        std::vector<long long> v(n);
        for (int e = 0; e < n; ++e) v[e] = contains(s, e);
        return v;
      };
      for (Subset f : fs) generators.push_back(indicator(f));
      for (Subset g : gs) generators.push_back(indicator(g));
      generators.push_back(indicator(full_set(n)));
      generators.push_back(indicator(full_set(n)));
      const Integer mult = lattice_index(generators, n);
      attempt.multiplicities.push_back(mult);
      attempt.total += mult;
    }
  }
  return attempt;
}

}  // namespace

std::vector<ChainCone> maximal_chains(const Matroid& m) {
  if (m.loops() != 0) {
    throw Error(ErrorCode::kHasLoop, "Bergman fan needs a loopless matroid");
  }
  std::vector<ChainCone> out;
  std::vector<Subset> chain{0};
  covers_dfs(m, chain, out);
  return out;
}

GenericShift draw_shift(int n, std::uint64_t seed, int retries) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(retries)};
  std::mt19937_64 rng(seq);
  std::uniform_int_distribution<long long> magnitude(1, (1LL << 31) - 1);
  std::bernoulli_distribution negative(0.5);
  GenericShift shift;
  shift.seed = seed;
  shift.retries = retries;
  for (int e = 0; e < n; ++e) {
    const long long num = magnitude(rng);
    const long long den = magnitude(rng);
    shift.w.push_back(
        make_rational(Integer(negative(rng) ? -num : num), Integer(den)));
  }
  return shift;
}

OracleResult oracle_flip_detailed(const Matroid& m, const Matroid& n,
                                  int epsilon, std::uint64_t seed) {
  if (m.size() != n.size()) {
    throw Error(ErrorCode::kGroundSetMismatch,
                "matroids have ground sets of different sizes");
  }
  const int size = m.size();
  if (m.loops() != 0 || n.loops() != 0) {
    throw Error(ErrorCode::kHasLoop, "oracle needs loopless matroids");
  }
  if (m.rank() + n.rank() != size + 1) {
    throw Error(ErrorCode::kRankRegimeUnsupported,
                "oracle needs r(M) + r(N) = n + 1");
  }
  if (epsilon < 0 || epsilon >= size) {
    throw Error(ErrorCode::kIndexOutOfRange, "epsilon outside ground set");
  }
  const auto cones_m = maximal_chains(m);
  const auto cones_n = maximal_chains(n);

  for (int retries = 0; retries <= kMaxResamples; ++retries) {
    const GenericShift shift = draw_shift(size, seed, retries);
    // The count is invariant under positive scaling, so clear denominators.
    Integer lcm(1);
    for (const Rational& c : shift.w) {
      lcm = boost::multiprecision::lcm(lcm,
                                       boost::multiprecision::denominator(c));
    }
    std::vector<Integer> scaled;
    for (const Rational& c : shift.w) {
      scaled.push_back(boost::multiprecision::numerator(c) *
                       (lcm / boost::multiprecision::denominator(c)));
    }
    Attempt attempt = intersect(cones_m, cones_n, scaled, epsilon, size);
    if (attempt.degenerate) continue;
    return {FlipValue(attempt.total), retries,
            std::move(attempt.multiplicities)};
  }
  throw Error(ErrorCode::kDegeneracyRetriesExhausted,
              "no generic shift found after " +
                  std::to_string(kMaxResamples) + " resamples");
}

FlipValue oracle_flip(const Matroid& m, const Matroid& n, int epsilon,
                      std::uint64_t seed) {
  return oracle_flip_detailed(m, n, epsilon, seed).value;
}

Integer lattice_index(const std::vector<std::vector<long long>>& generators,
                      int n) {
  DenseMatrix<long long> a(n, static_cast<Eigen::Index>(generators.size()));
  for (std::size_t j = 0; j < generators.size(); ++j) {
    if (static_cast<int>(generators[j].size()) != n) {
      throw Error(ErrorCode::kInvalidInput, "generator length mismatch");
    }
    for (int i = 0; i < n; ++i) a(i, static_cast<Eigen::Index>(j)) = generators[j][i];
  }
  return Integer(lattice_index<long long>(a));
}

}  // namespace flipprod
