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
#include "homology.hpp"
#include "petri.hpp"
#include "state_space.hpp"
#include "trace.hpp"
#include "trace_language.hpp"

#include <json.hpp>

#include <algorithm>
#include <limits>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace cubhom {

/// One differential with the labels of its row and column bases.
struct MatrixDump {
  std::size_t degree;
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  IntegerMatrix matrix;
};

/// Everything a single analysis run reports. Reproducible for identical
/// inputs; wall-clock timing is kept out of the JSON form.
struct AnalysisReport {
  std::string kind;
  nlohmann::ordered_json input = nlohmann::ordered_json::object();
  std::vector<std::pair<std::string, std::string>> independence;
  std::vector<std::size_t> p;
  std::vector<std::size_t> cells;
  std::vector<HomologyGroup> homology;
  // H_n minus the ℤ^(p_n) summand; only for trace languages.
  std::optional<std::vector<nlohmann::ordered_json>> residual;
  std::vector<std::string> diagnostics;
  std::vector<MatrixDump> matrices;
  std::vector<std::string> cell_dump;
  double seconds = 0;
};

struct AnalysisOptions {
  bool augmented = false;
  bool validate = true;
  bool dump_matrices = false;
  bool dump_cells = false;
};

namespace detail {

inline nlohmann::ordered_json integer_json(const Integer &v) {
  if (v >= std::numeric_limits<long long>::min() &&
      v <= std::numeric_limits<long long>::max())
    return static_cast<long long>(v);
  return v.str();
}

inline std::vector<std::string> level_labels(const SemicubicalSet &X, std::size_t n) {
  std::vector<std::string> out;
  for (SemicubicalSet::CellId c = 0; c < X.size(n); ++c)
    out.push_back(X.label(n, c));
  return out;
}

/// Line format: "cell <n> <id> <label>" then one
/// "face <n> <id> <i> <eps> <target>" per face.
inline std::vector<std::string> dump_cells(const SemicubicalSet &X) {
  std::vector<std::string> out;
  for (std::size_t n = 0; n < X.levels(); ++n)
    for (SemicubicalSet::CellId c = 0; c < X.size(n); ++c) {
      out.push_back("cell " + std::to_string(n) + " " + std::to_string(c) + " " +
                    X.label(n, c));
      for (std::size_t i = 1; i <= n; ++i)
        for (int e = 0; e < 2; ++e)
          out.push_back("face " + std::to_string(n) + " " + std::to_string(c) + " " +
                        std::to_string(i) + " " + std::to_string(e) + " " +
                        std::to_string(X.face(n, c, i, e)));
    }
  return out;
}

inline void summarize_monoid(AnalysisReport &r, const TraceMonoid &M) {
  for (const auto &[a, b] : M.independence().pairs())
    r.independence.emplace_back(M.alphabet().name(a), M.alphabet().name(b));
  r.p = cliques(M.alphabet(), M.independence()).counts();
}

/// Cells, d∘d check, homology, the H_1 torsion probe, optional dumps.
inline void finish(AnalysisReport &r, const SemicubicalSet &X,
                   const AnalysisOptions &opt) {
  if (auto check = validate(X); !check.ok())
    r.diagnostics.push_back("semicubical identities fail for " +
                            std::to_string(check.violations.size() +
                                           check.out_of_range.size()) +
                            " face composite(s)");
  ChainComplex C = chain_complex(X);
  r.cells = X.sizes();
  if (C.is_complex())
    r.homology = homology_all(C);
  else
    r.diagnostics.push_back("differentials do not square to zero; homology not computed");
  if (r.homology.size() > 1 && !r.homology[1].torsion.empty())
    r.diagnostics.push_back("H_1 has torsion " + to_string(r.homology[1]) +
                            ": counterexample to freeness of H_1");
  if (opt.dump_matrices)
    for (std::size_t n = 1; n < C.degrees(); ++n)
      r.matrices.push_back({n, level_labels(X, n - 1), level_labels(X, n),
                            C.differential(n)});
  if (opt.dump_cells)
    r.cell_dump = dump_cells(X);
}

/// Runs the cubical pipeline on a state space: Q(E,I,S_*) when augmented,
/// Q̄(E,I,S) otherwise.
inline void analyze_space(AnalysisReport &r, const StateSpace &S,
                          const AnalysisOptions &opt) {
  r.input["states"] = S.size();
  r.input["generators"] = S.alphabet().size();
  r.input["transitions"] = S.transitions().size();
  summarize_monoid(r, S.monoid());
  ActionReport action = validate_action(S);
  if (!action.ok()) {
    if (opt.validate)
      require_valid_action(S);
    r.diagnostics.push_back("action validation disabled: " +
                            std::to_string(action.violations.size()) +
                            " commutation violation(s); homology of the complex "
                            "need not match the state category");
    for (const auto &v : action.violations)
      r.diagnostics.push_back(describe(S, v));
  } else if (!opt.validate) {
    r.diagnostics.push_back("action validation disabled");
  }
  if (opt.augmented) {
    finish(r, state_complex_augmented(augment(S)), opt);
  } else {
    finish(r, state_complex_reachable(S), opt);
  }
}

} // namespace detail

/// Homology of the state category (or its augmentation) of a state space.
inline AnalysisReport analyze_state_space(StateSpace S, const AnalysisOptions &opt,
                                          std::optional<std::string> initial = {}) {
  AnalysisReport r;
  r.kind = "statespace";
  if (initial)
    S = reachable(S, *initial);
  detail::analyze_space(r, S, opt);
  return r;
}

/// Homology of a CE net over its reachable markings (or all markings).
inline AnalysisReport analyze_net(const CENet &net, const AnalysisOptions &opt,
                                  bool all_markings = false) {
  AnalysisReport r;
  r.kind = "petri";
  r.input["conditions"] = net.conditions().size();
  r.input["events"] = net.events().size();
  r.diagnostics = net.warnings();
  StateSpace S = to_state_space(net, !all_markings);
  r.input["markings"] = S.state_names();
  detail::analyze_space(r, S, opt);
  return r;
}

/// Integral homology H_n(K_*(L)) of a trace language, closing it under
/// prefixes first unless prefix_close is false.
inline AnalysisReport analyze_language(const TraceLanguage &raw, bool prefix_close,
                                       const AnalysisOptions &base) {
  AnalysisReport r;
  r.kind = "tracelang";
  TraceLanguage L = prefix_close ? prefix_closure(raw) : raw;
  r.input["traces"] = raw.size();
  r.input["closed_size"] = L.size();
  StateSpace S = to_state_space(L);
  AnalysisOptions opt = base;
  opt.augmented = true;
  detail::analyze_space(r, S, opt);
  std::vector<nlohmann::ordered_json> residual;
  for (std::size_t n = 0; n < r.homology.size(); ++n) {
    const long long pn = n < r.p.size() ? static_cast<long long>(r.p[n]) : 0;
    const long long b = static_cast<long long>(r.homology[n].betti) - pn;
    if (b < 0)
      r.diagnostics.push_back("H_" + std::to_string(n) + " has rank below p_" +
                              std::to_string(n));
    nlohmann::ordered_json h;
    h["betti"] = b;
    h["torsion"] = nlohmann::ordered_json::array();
    for (const auto &t : r.homology[n].torsion)
      h["torsion"].push_back(detail::integer_json(t));
    residual.push_back(std::move(h));
  }
  r.residual = std::move(residual);
  return r;
}

/// Homology of the generalized torus T(E,I).
inline AnalysisReport analyze_torus(const TraceMonoid &M, const AnalysisOptions &opt) {
  AnalysisReport r;
  r.kind = "torus";
  r.input["vertices"] = M.alphabet().size();
  r.input["edges"] = M.independence().pair_count();
  detail::summarize_monoid(r, M);
  detail::finish(r, torus(M), opt);
  return r;
}

/// {"kind", "input", "independence", "p", "cells", "homology",
///  "residual"?, "diagnostics", "matrices"?, "cell_dump"?}
inline nlohmann::ordered_json to_json(const AnalysisReport &r) {
  using oj = nlohmann::ordered_json;
  oj out;
  out["kind"] = r.kind;
  out["input"] = r.input;
  out["independence"] = oj::array();
  for (const auto &[a, b] : r.independence)
    out["independence"].push_back({a, b});
  out["p"] = r.p;
  out["cells"] = r.cells;
  out["homology"] = oj::array();
  for (const auto &h : r.homology) {
    oj g;
    g["betti"] = h.betti;
    g["torsion"] = oj::array();
    for (const auto &t : h.torsion)
      g["torsion"].push_back(detail::integer_json(t));
    out["homology"].push_back(std::move(g));
  }
  if (r.residual)
    out["residual"] = *r.residual;
  out["diagnostics"] = r.diagnostics;
  if (!r.matrices.empty()) {
    out["matrices"] = oj::array();
    for (const auto &m : r.matrices) {
      oj d;
      d["degree"] = m.degree;
      d["rows"] = m.matrix.rows();
      d["cols"] = m.matrix.cols();
      d["row_labels"] = m.row_labels;
      d["col_labels"] = m.col_labels;
      d["triplets"] = oj::array();
      for (const auto &e : m.matrix.entries())
        d["triplets"].push_back({e.row, e.col, detail::integer_json(e.value)});
      out["matrices"].push_back(std::move(d));
    }
  }
  if (!r.cell_dump.empty())
    out["cell_dump"] = r.cell_dump;
  return out;
}

inline std::string render_json(const AnalysisReport &r) {
  return to_json(r).dump(2) + "\n";
}

/// Right-aligned grid with row and column labels.
inline std::string render_grid(const MatrixDump &m) {
  std::vector<std::vector<std::string>> cell(m.matrix.rows(),
                                             std::vector<std::string>(m.matrix.cols(), "0"));
  for (const auto &e : m.matrix.entries())
    cell[e.row][e.col] = (e.value > 0 ? "+" : "") + e.value.str();
  std::size_t label_w = 0;
  for (const auto &l : m.row_labels)
    label_w = std::max(label_w, l.size());
  std::vector<std::size_t> w(m.matrix.cols());
  for (std::size_t c = 0; c < w.size(); ++c) {
    w[c] = m.col_labels[c].size();
    for (std::size_t r = 0; r < m.matrix.rows(); ++r)
      w[c] = std::max(w[c], cell[r][c].size());
  }
  auto pad = [](const std::string &s, std::size_t width) {
    return std::string(width > s.size() ? width - s.size() : 0, ' ') + s;
  };
  std::ostringstream out;
  out << "d_" << m.degree << ": " << m.matrix.rows() << " x " << m.matrix.cols() << "\n";
  out << std::string(label_w, ' ');
  for (std::size_t c = 0; c < w.size(); ++c)
    out << "  " << pad(m.col_labels[c], w[c]);
  out << "\n";
  for (std::size_t r = 0; r < m.matrix.rows(); ++r) {
    out << m.row_labels[r] << std::string(label_w - m.row_labels[r].size(), ' ');
    for (std::size_t c = 0; c < w.size(); ++c)
      out << "  " << pad(cell[r][c], w[c]);
    out << "\n";
  }
  return out.str();
}

/// "triplets d_n <rows> <cols>" followed by one "<row> <col> <value>" line
/// per nonzero entry.
inline std::string render_triplets(const MatrixDump &m) {
  std::ostringstream out;
  out << "triplets d_" << m.degree << " " << m.matrix.rows() << " " << m.matrix.cols()
      << "\n";
  for (const auto &e : m.matrix.entries())
    out << e.row << " " << e.col << " " << e.value.str() << "\n";
  return out.str();
}

inline std::string render_text(const AnalysisReport &r, bool timing = false) {
  std::ostringstream out;
  auto list = [](const std::vector<std::size_t> &v) {
    std::string s = "(";
    for (std::size_t i = 0; i < v.size(); ++i)
      s += (i ? ", " : "") + std::to_string(v[i]);
    return s + ")";
  };
  out << "kind: " << r.kind << "\n";
  for (const auto &[k, v] : r.input.items())
    out << k << ": " << v.dump() << "\n";
  out << "independence: {";
  for (std::size_t i = 0; i < r.independence.size(); ++i)
    out << (i ? ", " : "") << "{" << r.independence[i].first << ","
        << r.independence[i].second << "}";
  out << "}\n";
  out << "cliques p: " << list(r.p) << "\n";
  out << "cells: " << list(r.cells) << "\n";
  for (std::size_t n = 0; n < r.homology.size(); ++n)
    out << "H_" << n << " = " << to_string(r.homology[n]) << "\n";
  if (r.residual)
    for (std::size_t n = 0; n < r.residual->size(); ++n)
      out << "H_" << n << " - Z^p_" << n << ": betti "
          << (*r.residual)[n]["betti"].dump() << ", torsion "
          << (*r.residual)[n]["torsion"].dump() << "\n";
  for (const auto &d : r.diagnostics)
    out << "note: " << d << "\n";
  for (const auto &m : r.matrices)
    out << render_grid(m) << render_triplets(m);
  for (const auto &line : r.cell_dump)
    out << line << "\n";
  if (timing)
    out << "time: " << r.seconds << " s\n";
  return out.str();
}

} // namespace cubhom
