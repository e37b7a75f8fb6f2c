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

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstddef>
#include <map>
#include <stdexcept>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

namespace cubhom {

using Integer = boost::multiprecision::cpp_int;

/// Sparse integer matrix as (row, column, value) triplets, sorted row-major,
/// without zeros or repeated positions.
class IntegerMatrix {
public:
  struct Entry {
    std::size_t row;
    std::size_t col;
    Integer value;

    friend bool operator==(const Entry &, const Entry &) = default;
  };

  IntegerMatrix() = default;
  IntegerMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols) {}

  /// Sums entries at repeated positions and drops zeros.
  IntegerMatrix(std::size_t rows, std::size_t cols, std::vector<Entry> entries)
      : rows_(rows), cols_(cols) {
    std::map<std::pair<std::size_t, std::size_t>, Integer> acc;
    for (auto &e : entries) {
      if (e.row >= rows || e.col >= cols)
        throw std::out_of_range("matrix entry out of range");
      acc[{e.row, e.col}] += e.value;
    }
    for (auto &[pos, v] : acc)
      if (v != 0)
        entries_.push_back({pos.first, pos.second, std::move(v)});
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const std::vector<Entry> &entries() const noexcept { return entries_; }
  bool is_zero() const noexcept { return entries_.empty(); }

  Integer at(std::size_t r, std::size_t c) const {
    auto it = std::lower_bound(entries_.begin(), entries_.end(), std::pair{r, c},
                               [](const Entry &e, const std::pair<std::size_t, std::size_t> &p) {
                                 return std::pair{e.row, e.col} < p;
                               });
    if (it != entries_.end() && it->row == r && it->col == c)
      return it->value;
    return 0;
  }

  std::vector<Integer> column(std::size_t c) const {
    std::vector<Integer> out(rows_);
    for (const auto &e : entries_)
      if (e.col == c)
        out[e.row] = e.value;
    return out;
  }

  friend IntegerMatrix operator*(const IntegerMatrix &a, const IntegerMatrix &b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("matrix shapes do not chain");
    std::vector<std::vector<std::pair<std::size_t, const Integer *>>> by_row(b.rows_);
    for (const auto &e : b.entries_)
      by_row[e.row].emplace_back(e.col, &e.value);
    std::vector<Entry> out;
    for (const auto &e : a.entries_)
      for (const auto &[c, v] : by_row[e.col])
        out.push_back({e.row, c, e.value * *v});
    return IntegerMatrix(a.rows_, b.cols_, std::move(out));
  }

  friend bool operator==(const IntegerMatrix &, const IntegerMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Entry> entries_;
};

/// Dense row-major integer matrix; the working format of the reduction.
class DenseMatrix {
public:
  DenseMatrix() = default;
  DenseMatrix(std::size_t rows, std::size_t cols)
      : rows_(rows), cols_(cols), data_(rows * cols) {}

  explicit DenseMatrix(const IntegerMatrix &m) : DenseMatrix(m.rows(), m.cols()) {
    for (const auto &e : m.entries())
      (*this)(e.row, e.col) = e.value;
  }

  static DenseMatrix identity(std::size_t n) {
    DenseMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i)
      m(i, i) = 1;
    return m;
  }

  static DenseMatrix from_rows(const std::vector<std::vector<long long>> &rows) {
    DenseMatrix m(rows.size(), rows.empty() ? 0 : rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (rows[i].size() != m.cols_)
        throw std::invalid_argument("ragged matrix rows");
      for (std::size_t j = 0; j < m.cols_; ++j)
        m(i, j) = rows[i][j];
    }
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  Integer &operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Integer &operator()(std::size_t r, std::size_t c) const {
    return data_[r * cols_ + c];
  }

  IntegerMatrix sparse() const {
    std::vector<IntegerMatrix::Entry> out;
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c)
        if ((*this)(r, c) != 0)
          out.push_back({r, c, (*this)(r, c)});
    return IntegerMatrix(rows_, cols_, std::move(out));
  }

  friend DenseMatrix operator*(const DenseMatrix &a, const DenseMatrix &b) {
    if (a.cols_ != b.rows_)
      throw std::invalid_argument("matrix shapes do not chain");
    DenseMatrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        if (a(i, k) == 0)
          continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          out(i, j) += a(i, k) * b(k, j);
      }
    return out;
  }

  friend bool operator==(const DenseMatrix &, const DenseMatrix &) = default;

private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Integer> data_;
};

} // namespace cubhom
