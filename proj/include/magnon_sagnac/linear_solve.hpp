// Copyright 2026 The magnon-sagnac Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or
// implied. See the License for the specific language governing
// permissions and limitations under the License.

#ifndef MAGNON_SAGNAC_LINEAR_SOLVE_HPP
#define MAGNON_SAGNAC_LINEAR_SOLVE_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <utility>

namespace magnon_sagnac {

template <std::size_t N>
using ComplexMatrix = std::array<std::array<std::complex<double>, N>, N>;

template <std::size_t N>
using ComplexVector = std::array<std::complex<double>, N>;

// LU factorisation with partial pivoting of a small dense complex matrix.
// `singular()` is true when a zero pivot was met; `condition_1norm()` is the
// 1-norm condition number computed from the explicit inverse (N is tiny).
template <std::size_t N>
class PivotedLU {
 public:
  explicit PivotedLU(const ComplexMatrix<N>& a) : lu_(a) {
    for (std::size_t i = 0; i < N; ++i) perm_[i] = i;
    for (std::size_t j = 0; j < N; ++j) {
      a_norm_ = std::max(a_norm_, column_abs_sum(a, j));
    }
    for (std::size_t k = 0; k < N; ++k) {
      std::size_t pivot = k;
      double best = std::abs(lu_[k][k]);
      for (std::size_t i = k + 1; i < N; ++i) {
        const double v = std::abs(lu_[i][k]);
        if (v > best) {
          best = v;
          pivot = i;
        }
      }
      if (best == 0.0) {
        singular_ = true;
        return;
      }
      if (pivot != k) {
        std::swap(lu_[pivot], lu_[k]);
        std::swap(perm_[pivot], perm_[k]);
      }
      for (std::size_t i = k + 1; i < N; ++i) {
        lu_[i][k] /= lu_[k][k];
        for (std::size_t j = k + 1; j < N; ++j) lu_[i][j] -= lu_[i][k] * lu_[k][j];
      }
    }
  }

  bool singular() const { return singular_; }

  ComplexVector<N> solve(const ComplexVector<N>& b) const {
    ComplexVector<N> x;
    for (std::size_t i = 0; i < N; ++i) {
      x[i] = b[perm_[i]];
      for (std::size_t j = 0; j < i; ++j) x[i] -= lu_[i][j] * x[j];
    }
    for (std::size_t i = N; i-- > 0;) {
      for (std::size_t j = i + 1; j < N; ++j) x[i] -= lu_[i][j] * x[j];
      x[i] /= lu_[i][i];
    }
    return x;
  }

  double condition_1norm() const {
    if (singular_) return std::numeric_limits<double>::infinity();
    ComplexMatrix<N> inv{};
    for (std::size_t j = 0; j < N; ++j) {
      ComplexVector<N> e{};
      e[j] = 1.0;
      const auto col = solve(e);
      for (std::size_t i = 0; i < N; ++i) inv[i][j] = col[i];
    }
    double inv_norm = 0.0;
    for (std::size_t j = 0; j < N; ++j) inv_norm = std::max(inv_norm, column_abs_sum(inv, j));
    return a_norm_ * inv_norm;
  }

 private:
  static double column_abs_sum(const ComplexMatrix<N>& m, std::size_t j) {
    double s = 0.0;
    for (std::size_t i = 0; i < N; ++i) s += std::abs(m[i][j]);
    return s;
  }

  ComplexMatrix<N> lu_;
  std::array<std::size_t, N> perm_{};
  double a_norm_ = 0.0;
  bool singular_ = false;
};

}  // namespace magnon_sagnac

#endif  // MAGNON_SAGNAC_LINEAR_SOLVE_HPP
