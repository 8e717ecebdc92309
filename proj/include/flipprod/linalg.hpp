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

#ifndef FLIPPROD_LINALG_HPP_
#define FLIPPROD_LINALG_HPP_

// Exact dense linear algebra on Eigen storage. All routines are templated on
// an exact scalar: machine integers where entry growth is bounded, otherwise
// the arbitrary-precision Integer/Rational types below.

#include <Eigen/Dense>
#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/eigen.hpp>

#include <cstdint>
#include <cstdlib>
#include <optional>
#include <utility>
#include <vector>

#include "flipprod/error.hpp"

namespace flipprod {

using Integer = boost::multiprecision::number<
    boost::multiprecision::cpp_int_backend<>, boost::multiprecision::et_off>;
using Rational = boost::multiprecision::number<
    boost::multiprecision::rational_adaptor<
        boost::multiprecision::cpp_int_backend<>>,
    boost::multiprecision::et_off>;

/// num/den in lowest terms. Division is used instead of the two-argument
/// constructor, which mis-normalizes in some Boost releases.
inline Rational make_rational(const Integer& num, const Integer& den) {
  return Rational(num) / Rational(den);
}

template <typename Scalar>
using DenseMatrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using DenseVector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

namespace detail {

inline long long magnitude(long long x) { return x < 0 ? -x : x; }
inline Integer magnitude(const Integer& x) {
  return boost::multiprecision::abs(x);
}
inline bool is_zero(long long x) { return x == 0; }
inline bool is_zero(const Integer& x) { return x.is_zero(); }

}  // namespace detail

/// Rank of an integer matrix by fraction-free (Bareiss) elimination. Every
/// intermediate entry is a minor of the input, so divisions are exact.
template <typename Derived>
Eigen::Index bareiss_rank(const Eigen::MatrixBase<Derived>& input) {
  using Scalar = typename Derived::Scalar;
  DenseMatrix<Scalar> a = input;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Scalar prev(1);
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = rank; i < rows; ++i) {
      if (!detail::is_zero(a(i, col))) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) a.row(pivot).swap(a.row(rank));
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      for (Eigen::Index j = col + 1; j < cols; ++j) {
        a(i, j) = (a(rank, col) * a(i, j) - a(i, col) * a(rank, j)) / prev;
      }
      a(i, col) = Scalar(0);
    }
    prev = a(rank, col);
    ++rank;
  }
  return rank;
}

/// Rank over Q. Rows are scaled to clear denominators, then Bareiss runs over
/// the integers.
inline Eigen::Index rational_rank(const DenseMatrix<Rational>& m) {
  DenseMatrix<Integer> a(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Integer lcm(1);
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      lcm = boost::multiprecision::lcm(lcm,
                                       boost::multiprecision::denominator(m(i, j)));
    }
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      a(i, j) = boost::multiprecision::numerator(m(i, j)) *
                (lcm / boost::multiprecision::denominator(m(i, j)));
    }
  }
  return bareiss_rank(a);
}

inline bool is_small_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

/// Rank over the prime field F_p. Entries must already be residues in [0, p).
inline Eigen::Index rank_mod_p(const Eigen::MatrixXi& input, int p) {
  Eigen::MatrixXi a = input;
  auto inverse = [p](int x) {
    // Fermat: x^(p-2) mod p.
    long long result = 1, base = x, e = p - 2;
    while (e > 0) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return static_cast<int>(result);
  };
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  Eigen::Index rank = 0;
  for (Eigen::Index col = 0; col < cols && rank < rows; ++col) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = rank; i < rows; ++i) {
      if (a(i, col) != 0) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) continue;
    if (pivot != rank) a.row(pivot).swap(a.row(rank));
    const int inv = inverse(a(rank, col));
    for (Eigen::Index i = rank + 1; i < rows; ++i) {
      if (a(i, col) == 0) continue;
      const long long factor = static_cast<long long>(a(i, col)) * inv % p;
      for (Eigen::Index j = col; j < cols; ++j) {
        long long v = a(i, j) - factor * a(rank, j) % p;
        v %= p;
        if (v < 0) v += p;
        a(i, j) = static_cast<int>(v);
      }
    }
    ++rank;
  }
  return rank;
}

/// Result of fraction-free Gauss-Jordan on [A | I]. When A is nonsingular,
/// A^{-1} = scaled_inverse / scale and scale = +-det(A).
template <typename Scalar>
struct ScaledInverse {
  Scalar scale;
  DenseMatrix<Scalar> scaled_inverse;
};

/// Fraction-free Gauss-Jordan inversion of a square integer matrix. Returns
/// nullopt when the matrix is singular. Intermediate entries are minors of
/// [A | I], so machine integers suffice for small 0/1 matrices.
template <typename Scalar>
std::optional<ScaledInverse<Scalar>> fraction_free_inverse(
    const DenseMatrix<Scalar>& input) {
  const Eigen::Index n = input.rows();
  DenseMatrix<Scalar> a(n, 2 * n);
  a.leftCols(n) = input;
  a.rightCols(n).setZero();
  for (Eigen::Index i = 0; i < n; ++i) a(i, n + i) = Scalar(1);
  Scalar prev(1);
  for (Eigen::Index k = 0; k < n; ++k) {
    Eigen::Index pivot = -1;
    for (Eigen::Index i = k; i < n; ++i) {
      if (!detail::is_zero(a(i, k))) {
        pivot = i;
        break;
      }
    }
    if (pivot < 0) return std::nullopt;
    if (pivot != k) a.row(pivot).swap(a.row(k));
    for (Eigen::Index i = 0; i < n; ++i) {
      if (i == k) continue;
      for (Eigen::Index j = 0; j < 2 * n; ++j) {
        if (j == k) continue;
        a(i, j) = (a(k, k) * a(i, j) - a(i, k) * a(k, j)) / prev;
      }
      a(i, k) = Scalar(0);
    }
    prev = a(k, k);
  }
  return ScaledInverse<Scalar>{prev, a.rightCols(n)};
}

/// Smith normal form diagonal (nonzero invariant factors, each >= 1).
template <typename Scalar>
std::vector<Scalar> smith_diagonal(DenseMatrix<Scalar> a) {
  using detail::is_zero;
  using detail::magnitude;
  const Eigen::Index rows = a.rows();
  const Eigen::Index cols = a.cols();
  std::vector<Scalar> diagonal;
  for (Eigen::Index t = 0; t < std::min(rows, cols); ++t) {
    while (true) {
      Eigen::Index pi = -1, pj = -1;
      for (Eigen::Index i = t; i < rows; ++i) {
        for (Eigen::Index j = t; j < cols; ++j) {
          if (is_zero(a(i, j))) continue;
          if (pi < 0 || magnitude(a(i, j)) < magnitude(a(pi, pj))) {
            pi = i;
            pj = j;
          }
        }
      }
      if (pi < 0) return diagonal;
      if (pi != t) a.row(pi).swap(a.row(t));
      if (pj != t) a.col(pj).swap(a.col(t));

      bool clean = true;
      for (Eigen::Index i = t + 1; i < rows; ++i) {
        if (is_zero(a(i, t))) continue;
        const Scalar q = a(i, t) / a(t, t);
        for (Eigen::Index j = t; j < cols; ++j) a(i, j) -= q * a(t, j);
        if (!is_zero(a(i, t))) clean = false;
      }
      for (Eigen::Index j = t + 1; j < cols; ++j) {
        if (is_zero(a(t, j))) continue;
        const Scalar q = a(t, j) / a(t, t);
        for (Eigen::Index i = t; i < rows; ++i) a(i, j) -= q * a(i, t);
        if (!is_zero(a(t, j))) clean = false;
      }
      if (!clean) continue;

      // Divisibility: the pivot must divide the remaining block.
      bool divides = true;
      for (Eigen::Index i = t + 1; i < rows && divides; ++i) {
        for (Eigen::Index j = t + 1; j < cols; ++j) {
          if (!is_zero(a(i, j) % a(t, t))) {
            for (Eigen::Index c = t; c < cols; ++c) a(t, c) += a(i, c);
            divides = false;
            break;
          }
        }
      }
      if (divides) break;
    }
    diagonal.push_back(magnitude(a(t, t)));
  }
  return diagonal;
}

/// Index [Z^n : L] of the lattice L spanned by the columns of `generators`
/// (n rows). Throws NotFullRank when the columns do not span R^n.
template <typename Scalar>
Scalar lattice_index(const DenseMatrix<Scalar>& generators) {
  const auto diagonal = smith_diagonal(generators);
  if (static_cast<Eigen::Index>(diagonal.size()) < generators.rows()) {
    throw Error(ErrorCode::kNotFullRank,
                "lattice generators do not span the ambient space");
  }
  Scalar index(1);
  for (const Scalar& d : diagonal) index *= d;
  return index;
}

}  // namespace flipprod

#endif  // FLIPPROD_LINALG_HPP_
