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

#include "cubical.hpp"
#include "matrix.hpp"
#include "smith.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace cubhom {

/// Free chain complex 0 ← C_0 ← C_1 ← … ← C_N ← 0 with integer
/// differentials. d_n is rank(C_{n−1}) × rank(C_n); d_0 has zero rows.
class ChainComplex {
public:
  ChainComplex() = default;

  ChainComplex(std::vector<std::size_t> ranks, std::vector<IntegerMatrix> differentials)
      : ranks_(std::move(ranks)), d_(std::move(differentials)) {
    if (d_.size() != ranks_.size())
      throw std::invalid_argument("one differential per degree required");
    for (std::size_t n = 0; n < ranks_.size(); ++n) {
      std::size_t expect_rows = n ? ranks_[n - 1] : 0;
      if (d_[n].rows() != expect_rows || d_[n].cols() != ranks_[n])
        throw std::invalid_argument("differential d_" + std::to_string(n) +
                                    " has the wrong shape");
    }
  }

  /// Number of stored degrees; C_n = 0 for n ≥ degrees().
  std::size_t degrees() const noexcept { return ranks_.size(); }
  std::size_t rank(std::size_t n) const { return n < ranks_.size() ? ranks_[n] : 0; }
  const std::vector<std::size_t> &ranks() const noexcept { return ranks_; }

  IntegerMatrix differential(std::size_t n) const {
    if (n < d_.size())
      return d_[n];
    return IntegerMatrix(rank(n - 1), 0);
  }

  /// d_n ∘ d_{n+1} = 0 for all n.
  bool is_complex() const {
    for (std::size_t n = 1; n < d_.size(); ++n)
      if (!(d_[n - 1] * d_[n]).is_zero())
        return false;
    return true;
  }

private:
  std::vector<std::size_t> ranks_;
  std::vector<IntegerMatrix> d_;
};

/// d_n σ = Σ_i (−1)^i ([∂_i^1 σ] − [∂_i^0 σ]).
inline ChainComplex chain_complex(const SemicubicalSet &X) {
  std::vector<std::size_t> ranks = X.sizes();
  std::vector<IntegerMatrix> d;
  for (std::size_t n = 0; n < X.levels(); ++n) {
    if (n == 0) {
      d.emplace_back(0, ranks[0]);
      continue;
    }
    std::vector<IntegerMatrix::Entry> entries;
    for (SemicubicalSet::CellId c = 0; c < X.size(n); ++c)
      for (std::size_t i = 1; i <= n; ++i) {
        const int sign = (i % 2 == 0) ? 1 : -1;
        entries.push_back({X.face(n, c, i, 1), c, Integer(sign)});
        entries.push_back({X.face(n, c, i, 0), c, Integer(-sign)});
      }
    d.emplace_back(ranks[n - 1], ranks[n], std::move(entries));
  }
  return ChainComplex(std::move(ranks), std::move(d));
}

/// ℤ^betti ⊕ ℤ/t_1 ⊕ … with t_1 | t_2 | …, all t_i > 1.
struct HomologyGroup {
  std::size_t betti = 0;
  std::vector<Integer> torsion;

  bool is_zero() const noexcept { return betti == 0 && torsion.empty(); }

  friend bool operator==(const HomologyGroup &, const HomologyGroup &) = default;
};

/// "Z^2 + Z/3", "Z" for rank one, "0" for the trivial group.
inline std::string to_string(const HomologyGroup &h) {
  std::string out;
  if (h.betti == 1)
    out = "Z";
  else if (h.betti > 1)
    out = "Z^" + std::to_string(h.betti);
  for (const auto &t : h.torsion)
    out += (out.empty() ? "" : " + ") + ("Z/" + t.str());
  return out.empty() ? "0" : out;
}

namespace detail {

inline HomologyGroup assemble(std::size_t rank_c, std::size_t rank_dn,
                              const SNFResult &next) {
  if (rank_dn + next.rank > rank_c)
    throw std::domain_error("differentials do not form a chain complex");
  HomologyGroup h;
  h.betti = rank_c - rank_dn - next.rank;
  for (const auto &v : next.diagonal)
    if (v > 1)
      h.torsion.push_back(v);
  return h;
}

} // namespace detail

/// H_n = ker d_n / im d_{n+1}, from the ranks of d_n, d_{n+1} and the
/// invariant factors of d_{n+1}.
inline HomologyGroup homology(const ChainComplex &C, std::size_t n) {
  if (n >= C.degrees())
    return {};
  const std::size_t rank_dn = smith_normal_form(C.differential(n)).rank;
  return detail::assemble(C.rank(n), rank_dn,
                          smith_normal_form(C.differential(n + 1)));
}

/// H_0 … H_N; each differential is reduced once. An empty complex yields
/// the single trivial group H_0 = 0.
inline std::vector<HomologyGroup> homology_all(const ChainComplex &C) {
  if (C.degrees() == 0)
    return {HomologyGroup{}};
  std::vector<SNFResult> snf;
  for (std::size_t n = 0; n <= C.degrees(); ++n)
    snf.push_back(smith_normal_form(C.differential(n)));
  std::vector<HomologyGroup> out;
  for (std::size_t n = 0; n < C.degrees(); ++n)
    out.push_back(detail::assemble(C.rank(n), snf[n].rank, snf[n + 1]));
  return out;
}

/// Σ(−1)^n rank C_n.
inline long long euler_characteristic(const ChainComplex &C) {
  long long chi = 0;
  for (std::size_t n = 0; n < C.degrees(); ++n)
    chi += (n % 2 ? -1 : 1) * static_cast<long long>(C.rank(n));
  return chi;
}

inline long long euler_characteristic(const std::vector<HomologyGroup> &H) {
  long long chi = 0;
  for (std::size_t n = 0; n < H.size(); ++n)
    chi += (n % 2 ? -1 : 1) * static_cast<long long>(H[n].betti);
  return chi;
}

} // namespace cubhom
