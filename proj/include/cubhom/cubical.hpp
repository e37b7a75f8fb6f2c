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

#include "error.hpp"
#include "state_space.hpp"
#include "trace.hpp"

#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace cubhom {

/// Finite semicubical set: graded cells with face maps ∂_i^{n,ε}.
///
/// Degree n holds size(n) cells; for n ≥ 1 each cell has 2n faces indexing
/// cells of degree n−1. Cells optionally carry a printable label.
class SemicubicalSet {
public:
  using CellId = std::uint32_t;

  /// Appends degree levels() with `count` cells. `faces` is laid out as
  /// faces[(cell·n + i−1)·2 + ε].
  void add_level(std::size_t count, std::vector<CellId> faces,
                 std::vector<std::string> labels = {}) {
    const std::size_t n = levels_.size();
    if (faces.size() != count * n * 2)
      throw std::invalid_argument("face table size does not match degree");
    if (!labels.empty() && labels.size() != count)
      throw std::invalid_argument("label count does not match cell count");
    levels_.push_back({count, std::move(faces), std::move(labels)});
  }

  /// Number of stored degrees (top degree + 1, or 0 when empty).
  std::size_t levels() const noexcept { return levels_.size(); }
  std::size_t top_degree() const noexcept {
    return levels_.empty() ? 0 : levels_.size() - 1;
  }
  bool empty() const noexcept { return levels_.empty(); }

  std::size_t size(std::size_t n) const {
    return n < levels_.size() ? levels_[n].count : 0;
  }
  std::vector<std::size_t> sizes() const {
    std::vector<std::size_t> out;
    for (const auto &l : levels_)
      out.push_back(l.count);
    return out;
  }

  /// ∂_i^{n,ε}(cell), 1 ≤ i ≤ n.
  CellId face(std::size_t n, CellId cell, std::size_t i, int eps) const {
    return levels_[n].faces[slot(n, cell, i, eps)];
  }
  void set_face(std::size_t n, CellId cell, std::size_t i, int eps, CellId to) {
    levels_.at(n).faces.at(slot(n, cell, i, eps)) = to;
  }

  std::string label(std::size_t n, CellId cell) const {
    const auto &l = levels_.at(n);
    return l.labels.empty() ? "#" + std::to_string(cell) : l.labels.at(cell);
  }

  /// Drops empty levels at the top.
  void trim() {
    while (!levels_.empty() && levels_.back().count == 0)
      levels_.pop_back();
  }

private:
  struct Level {
    std::size_t count;
    std::vector<CellId> faces;
    std::vector<std::string> labels;
  };

  static std::size_t slot(std::size_t n, CellId cell, std::size_t i, int eps) {
    return (static_cast<std::size_t>(cell) * n + (i - 1)) * 2 +
           static_cast<std::size_t>(eps);
  }

  std::vector<Level> levels_;
};

struct CubicalReport {
  struct Violation {
    std::size_t n;
    std::size_t i;
    std::size_t j;
    int alpha;
    int beta;
    SemicubicalSet::CellId cell;
  };
  struct RangeError {
    std::size_t n;
    SemicubicalSet::CellId cell;
    std::size_t i;
    int eps;
  };

  std::vector<RangeError> out_of_range;
  std::vector<Violation> violations;

  bool ok() const noexcept { return out_of_range.empty() && violations.empty(); }
};

/// Checks face indices and ∂_i^{α}∂_j^{β} = ∂_{j−1}^{β}∂_i^{α} for i < j.
inline CubicalReport validate(const SemicubicalSet &X) {
  CubicalReport report;
  for (std::size_t n = 1; n < X.levels(); ++n)
    for (SemicubicalSet::CellId c = 0; c < X.size(n); ++c)
      for (std::size_t i = 1; i <= n; ++i)
        for (int e = 0; e < 2; ++e)
          if (X.face(n, c, i, e) >= X.size(n - 1))
            report.out_of_range.push_back({n, c, i, e});
  if (!report.out_of_range.empty())
    return report;
  for (std::size_t n = 2; n < X.levels(); ++n)
    for (SemicubicalSet::CellId c = 0; c < X.size(n); ++c)
      for (std::size_t j = 2; j <= n; ++j)
        for (std::size_t i = 1; i < j; ++i)
          for (int a = 0; a < 2; ++a)
            for (int b = 0; b < 2; ++b) {
              auto lhs = X.face(n - 1, X.face(n, c, j, b), i, a);
              auto rhs = X.face(n - 1, X.face(n, c, i, a), j - 1, b);
              if (lhs != rhs)
                report.violations.push_back({n, i, j, a, b, c});
            }
  return report;
}

namespace detail {

inline std::string tuple_label(const Alphabet &E, const std::string &head,
                               const CliqueTable::Tuple &t) {
  std::string out = "(" + head;
  bool first = head.empty();
  for (Symbol s : t) {
    out += first ? "" : ",";
    out += E.name(s);
    first = false;
  }
  return out + ")";
}

inline CliqueTable::Tuple drop(const CliqueTable::Tuple &t, std::size_t i) {
  CliqueTable::Tuple out = t;
  out.erase(out.begin() + static_cast<std::ptrdiff_t>(i - 1));
  return out;
}

} // namespace detail

/// Generalized torus T(E,I): n-cells are the n-cliques; both faces at
/// position i delete the i-th generator.
inline SemicubicalSet torus(const TraceMonoid &monoid) {
  const CliqueTable T = cliques(monoid.alphabet(), monoid.independence());
  SemicubicalSet X;
  for (std::size_t n = 0; n < T.degrees(); ++n) {
    std::vector<SemicubicalSet::CellId> faces;
    std::vector<std::string> labels;
    for (const auto &tuple : T.tuples(n)) {
      labels.push_back(detail::tuple_label(monoid.alphabet(), "", tuple));
      for (std::size_t i = 1; i <= n; ++i) {
        auto f = static_cast<SemicubicalSet::CellId>(
            *T.index_of(detail::drop(tuple, i)));
        faces.push_back(f);
        faces.push_back(f);
      }
    }
    X.add_level(T.count(n), std::move(faces), std::move(labels));
  }
  return X;
}

/// Q(E,I,S_*): cells S_* × T_n, state-major; ∂_i^0 keeps the state and
/// ∂_i^1 moves it along a_i.
inline SemicubicalSet state_complex_augmented(const AugmentedStateSpace &aug) {
  const StateSpace &S = aug.space();
  const CliqueTable T = cliques(S.alphabet(), S.monoid().independence());
  SemicubicalSet X;
  for (std::size_t n = 0; n < T.degrees(); ++n) {
    const std::size_t p = T.count(n);
    const std::size_t q = n ? T.count(n - 1) : 0;
    std::vector<SemicubicalSet::CellId> faces;
    std::vector<std::string> labels;
    for (StateId x = 0; x < S.size(); ++x)
      for (const auto &tuple : T.tuples(n)) {
        labels.push_back(n ? detail::tuple_label(S.alphabet(), S.name(x), tuple)
                           : S.name(x));
        for (std::size_t i = 1; i <= n; ++i) {
          auto rest = *T.index_of(detail::drop(tuple, i));
          StateId moved = *S.step(x, tuple[i - 1]);
          faces.push_back(static_cast<SemicubicalSet::CellId>(x * q + rest));
          faces.push_back(static_cast<SemicubicalSet::CellId>(moved * q + rest));
        }
      }
    X.add_level(S.size() * p, std::move(faces), std::move(labels));
  }
  return X;
}

/// Q̄(E,I,S): cells (s, a_1..a_n) with s·a_1⋯a_n defined. Faces stay
/// inside the cell set whenever the action respects independence; a
/// ValidationError is thrown otherwise.
inline SemicubicalSet state_complex_reachable(const StateSpace &S) {
  const TraceMonoid &M = S.monoid();
  const CliqueTable T = cliques(S.alphabet(), M.independence());
  SemicubicalSet X;
  std::map<std::pair<StateId, std::size_t>, SemicubicalSet::CellId> previous;
  for (std::size_t n = 0; n < T.degrees(); ++n) {
    std::map<std::pair<StateId, std::size_t>, SemicubicalSet::CellId> current;
    std::vector<SemicubicalSet::CellId> faces;
    std::vector<std::string> labels;
    for (StateId x = 0; x < S.size(); ++x)
      for (std::size_t c = 0; c < T.count(n); ++c) {
        const auto &tuple = T.tuple(n, c);
        if (!S.act(x, M.normal_form(tuple)))
          continue;
        current.emplace(std::pair{x, c},
                        static_cast<SemicubicalSet::CellId>(labels.size()));
        labels.push_back(n ? detail::tuple_label(S.alphabet(), S.name(x), tuple)
                           : S.name(x));
        for (std::size_t i = 1; i <= n; ++i) {
          auto rest = *T.index_of(detail::drop(tuple, i));
          auto moved = S.step(x, tuple[i - 1]);
          auto front = previous.find({x, rest});
          auto back = moved ? previous.find({*moved, rest}) : previous.end();
          if (front == previous.end() || back == previous.end())
            throw ValidationError("face of cell " + labels.back() +
                                  " is not a cell; the action does not respect "
                                  "independence");
          faces.push_back(front->second);
          faces.push_back(back->second);
        }
      }
    const std::size_t count = labels.size();
    X.add_level(count, std::move(faces), std::move(labels));
    previous = std::move(current);
  }
  X.trim();
  return X;
}

} // namespace cubhom
