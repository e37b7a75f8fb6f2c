/*
 * Copyright 2026 The cubhom Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include "matrix.hpp"

#include <boost/multiprecision/cpp_int.hpp>

#include <optional>
#include <utility>
#include <vector>

namespace cubhom {

/// D = U·A·V with D diagonal, d_1 | d_2 | … | d_r, all d_i > 0.
struct SNFResult {
  std::vector<Integer> diagonal;
  std::size_t rank = 0;
  std::optional<DenseMatrix> U; // rows(A) × rows(A)
  std::optional<DenseMatrix> V; // cols(A) × cols(A)

  /// The full rows(A) × cols(A) diagonal matrix.
  DenseMatrix D(std::size_t rows, std::size_t cols) const {
    DenseMatrix out(rows, cols);
    for (std::size_t i = 0; i < diagonal.size(); ++i)
      out(i, i) = diagonal[i];
    return out;
  }
};

namespace detail {

class SmithReducer {
public:
  SmithReducer(DenseMatrix a, bool track)
      : D_(std::move(a)), track_(track) {
    if (track_) {
      U_ = DenseMatrix::identity(D_.rows());
      V_ = DenseMatrix::identity(D_.cols());
    }
  }

  SNFResult run() && {
    SNFResult out;
    const std::size_t m = D_.rows(), n = D_.cols();
    for (std::size_t t = 0; t < std::min(m, n); ++t) {
      auto pivot = min_entry(t, t, m, n);
      if (!pivot)
        break;
      move_to(t, *pivot);
      reduce(t);
      if (D_(t, t) < 0)
        negate_row(t);
      out.diagonal.push_back(D_(t, t));
    }
    out.rank = out.diagonal.size();
    if (track_) {
      out.U = std::move(U_);
      out.V = std::move(V_);
    }
    return out;
  }

private:
  using Pos = std::pair<std::size_t, std::size_t>;

  // Nonzero entry of least absolute value in rows [r0,m) × cols [c0,n);
  // ties go to the lowest row, then the lowest column.
  std::optional<Pos> min_entry(std::size_t r0, std::size_t c0, std::size_t m,
                               std::size_t n) const {
    std::optional<Pos> best;
    Integer best_abs;
    for (std::size_t i = r0; i < m; ++i)
      for (std::size_t j = c0; j < n; ++j) {
        const Integer &v = D_(i, j);
        if (v == 0)
          continue;
        Integer a = abs(v);
        if (!best || a < best_abs) {
          best = Pos{i, j};
          best_abs = std::move(a);
          // Row-major scan: the first unit already wins every tie.
          if (best_abs == 1)
            return best;
        }
      }
    return best;
  }

  void move_to(std::size_t t, Pos p) {
    if (p.first != t)
      swap_rows(t, p.first);
    if (p.second != t)
      swap_cols(t, p.second);
  }

  // Clears row t and column t outside the pivot and makes the pivot divide
  // the remaining submatrix.
  void reduce(std::size_t t) {
    const std::size_t m = D_.rows(), n = D_.cols();
    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m; ++i) {
        if (D_(i, t) == 0)
          continue;
        Integer q = D_(i, t) / D_(t, t);
        if (q != 0)
          add_row(i, t, -q);
        if (D_(i, t) != 0)
          clean = false;
      }
      for (std::size_t j = t + 1; j < n; ++j) {
        if (D_(t, j) == 0)
          continue;
        Integer q = D_(t, j) / D_(t, t);
        if (q != 0)
          add_col(j, t, -q);
        if (D_(t, j) != 0)
          clean = false;
      }
      if (!clean) {
        // A remainder smaller than the pivot survived in row or column t.
        move_to(t, *min_line_entry(t));
        continue;
      }
      if (auto bad = non_multiple(t)) {
        add_row(t, *bad, 1);
        continue;
      }
      return;
    }
  }

  std::optional<Pos> min_line_entry(std::size_t t) const {
    std::optional<Pos> best;
    Integer best_abs;
    auto consider = [&](std::size_t i, std::size_t j) {
      const Integer &v = D_(i, j);
      if (v == 0)
        return;
      Integer a = abs(v);
      if (!best || a < best_abs) {
        best = Pos{i, j};
        best_abs = std::move(a);
      }
    };
    for (std::size_t i = t; i < D_.rows(); ++i)
      consider(i, t);
    for (std::size_t j = t + 1; j < D_.cols(); ++j)
      consider(t, j);
    return best;
  }

  // First row below t holding an entry not divisible by the pivot.
  std::optional<std::size_t> non_multiple(std::size_t t) const {
    const Integer &p = D_(t, t);
    if (p == 1 || p == -1)
      return std::nullopt;
    for (std::size_t i = t + 1; i < D_.rows(); ++i)
      for (std::size_t j = t + 1; j < D_.cols(); ++j)
        if (D_(i, j) % p != 0)
          return i;
    return std::nullopt;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    for (std::size_t j = 0; j < D_.cols(); ++j)
      std::swap(D_(a, j), D_(b, j));
    if (track_)
      for (std::size_t j = 0; j < U_.cols(); ++j)
        std::swap(U_(a, j), U_(b, j));
  }

  void swap_cols(std::size_t a, std::size_t b) {
    for (std::size_t i = 0; i < D_.rows(); ++i)
      std::swap(D_(i, a), D_(i, b));
    if (track_)
      for (std::size_t i = 0; i < V_.rows(); ++i)
        std::swap(V_(i, a), V_(i, b));
  }

  // row[dst] += k·row[src]
  void add_row(std::size_t dst, std::size_t src, const Integer &k) {
    for (std::size_t j = 0; j < D_.cols(); ++j)
      if (D_(src, j) != 0)
        D_(dst, j) += k * D_(src, j);
    if (track_)
      for (std::size_t j = 0; j < U_.cols(); ++j)
        if (U_(src, j) != 0)
          U_(dst, j) += k * U_(src, j);
  }

  // col[dst] += k·col[src]
  void add_col(std::size_t dst, std::size_t src, const Integer &k) {
    for (std::size_t i = 0; i < D_.rows(); ++i)
      if (D_(i, src) != 0)
        D_(i, dst) += k * D_(i, src);
    if (track_)
      for (std::size_t i = 0; i < V_.rows(); ++i)
        if (V_(i, src) != 0)
          V_(i, dst) += k * V_(i, src);
  }

  void negate_row(std::size_t t) {
    for (std::size_t j = 0; j < D_.cols(); ++j)
      D_(t, j) = -D_(t, j);
    if (track_)
      for (std::size_t j = 0; j < U_.cols(); ++j)
        U_(t, j) = -U_(t, j);
  }

  DenseMatrix D_;
  DenseMatrix U_;
  DenseMatrix V_;
  bool track_;
};

} // namespace detail

/// Smith normal form by repeated least-magnitude pivoting with exact
/// integer arithmetic. Deterministic for a given input.
inline SNFResult smith_normal_form(const DenseMatrix &A, bool want_transforms = false) {
  return detail::SmithReducer(A, want_transforms).run();
}

inline SNFResult smith_normal_form(const IntegerMatrix &A, bool want_transforms = false) {
  return smith_normal_form(DenseMatrix(A), want_transforms);
}

} // namespace cubhom
