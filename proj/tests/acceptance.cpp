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

// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Every threshold below is fixed; nothing is calibrated at
// run time.

#include "support/generators.hpp"
#include "support/oracles.hpp"

#include <cubhom/cli.hpp>
#include <cubhom/cubhom.hpp>

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>

using namespace cubhom;
using ojson = nlohmann::ordered_json;

namespace {

constexpr double kPerCriterionSeconds = 5.0;
constexpr double kPropertySuiteSeconds = 120.0;

std::string data(const std::string &name) { return std::string(CUBHOM_DATA_DIR) + "/" + name; }

struct Outcome {
  bool pass = true;
  std::string detail;

  void expect(bool cond, const std::string &what) {
    if (!cond && pass) {
      pass = false;
      detail = what;
    }
  }
};

struct CliRun {
  int code;
  std::string out;
  std::string err;
};

CliRun cli_run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

// Every complex built by criteria 1–6 is audited for criterion 7.
struct Audit {
  std::size_t complexes = 0;
  std::size_t failures = 0;
  std::string first_failure;

  void check(const SemicubicalSet &X, const std::string &origin) {
    ++complexes;
    bool ok = validate(X).ok() && chain_complex(X).is_complex();
    if (!ok && failures++ == 0)
      first_failure = origin;
  }
} audit;

std::vector<std::pair<std::size_t, std::vector<Integer>>> groups(const std::vector<HomologyGroup> &H) {
  std::vector<std::pair<std::size_t, std::vector<Integer>>> out;
  for (const auto &h : H)
    out.emplace_back(h.betti, h.torsion);
  return out;
}

std::vector<HomologyGroup> free_groups(std::vector<std::size_t> ranks) {
  std::vector<HomologyGroup> out;
  for (auto r : ranks)
    out.push_back({r, {}});
  return out;
}

std::vector<HomologyGroup> report_homology(const std::string &json) {
  std::vector<HomologyGroup> out;
  const ojson doc = ojson::parse(json);
  for (const auto &h : doc["homology"]) {
    HomologyGroup g{h["betti"].get<std::size_t>(), {}};
    for (const auto &t : h["torsion"])
      g.torsion.push_back(Integer(t.get<long long>()));
    out.push_back(g);
  }
  return out;
}

StateSpace load_space(const std::string &file) {
  return io::load_state_space(io::read_file(data(file)));
}

// 1
Outcome augmented_example() {
  Outcome o;
  auto r = cli_run({"statespace", data("state_category.json"), "--augmented", "--json"});
  o.expect(r.code == 0, "exit code " + std::to_string(r.code));
  if (!o.pass)
    return o;
  const ojson j = ojson::parse(r.out);
  o.expect(j["cells"] == ojson::parse("[3,6,3]"), "cell counts " + j["cells"].dump());
  o.expect(report_homology(r.out) == free_groups({1, 2, 1}), "homology " + j["homology"].dump());
  auto X = state_complex_augmented(augment(load_space("state_category.json")));
  audit.check(X, "criterion 1");
  auto C = chain_complex(X);
  for (std::size_t n = 3; n < 8; ++n)
    o.expect(homology(C, n).is_zero(), "H_" + std::to_string(n) + " nonzero");
  o.detail = o.pass ? "cells (3,6,3); H = (Z, Z^2, Z), 0 above" : o.detail;
  return o;
}

// 2
Outcome state_category_example() {
  Outcome o;
  auto r = cli_run({"statespace", data("state_category.json"), "--json"});
  o.expect(r.code == 0, "exit code " + std::to_string(r.code));
  if (!o.pass)
    return o;
  const ojson j = ojson::parse(r.out);
  o.expect(j["cells"] == ojson::parse("[2,3,1]"), "basis sizes " + j["cells"].dump());
  o.expect(report_homology(r.out) == free_groups({1, 1, 0}), "homology " + j["homology"].dump());
  auto X = state_complex_reachable(load_space("state_category.json"));
  audit.check(X, "criterion 2");
  auto C = chain_complex(X);
  for (std::size_t n = 2; n < 8; ++n)
    o.expect(homology(C, n).is_zero(), "H_" + std::to_string(n) + " nonzero");
  o.detail = o.pass ? "bases (2,3,1); H = (Z, Z), 0 above" : o.detail;
  return o;
}

// 3
Outcome net_example() {
  Outcome o;
  auto r = cli_run({"petri", data("ce_net.json"), "--json", "--dump-matrices"});
  o.expect(r.code == 0, "exit code " + std::to_string(r.code));
  if (!o.pass)
    return o;
  const ojson j = ojson::parse(r.out);
  o.expect(j["independence"] == ojson::parse(R"([["a","b"]])"), "I = " + j["independence"].dump());
  o.expect(j["input"]["markings"].size() == 4, "markings " + j["input"]["markings"].dump());
  o.expect(j["cells"] == ojson::parse("[4,5,1]"), "ranks " + j["cells"].dump());
  o.expect(report_homology(r.out) == free_groups({1, 1, 0}), "homology " + j["homology"].dump());
  const auto &d2 = j["matrices"][1];
  o.expect(d2["col_labels"] == ojson::parse(R"j(["({},a,b)"])j"), "d_2 column basis");
  o.expect(d2["row_labels"] ==
               ojson::parse(R"j(["({},a)","({},b)","({p},b)","({q},a)","({p,q},c)"])j"),
           "d_2 row basis " + d2["row_labels"].dump());
  std::vector<long long> column(5, 0);
  for (const auto &t : d2["triplets"])
    column[t[0].get<std::size_t>()] = t[2].get<long long>();
  o.expect(column == std::vector<long long>{-1, 1, -1, 1, 0}, "d_2 column differs");
  // d_1 follows s − s·e: columns ({q},a) and ({p,q},c)
  const auto &d1 = j["matrices"][0];
  std::vector<std::vector<long long>> m(4, std::vector<long long>(5, 0));
  for (const auto &t : d1["triplets"])
    m[t[0].get<std::size_t>()][t[1].get<std::size_t>()] = t[2].get<long long>();
  o.expect(m[2][3] == 1 && m[3][3] == -1 && m[1][3] == 0, "d_1 column ({q},a)");
  o.expect(m[0][4] == -1 && m[3][4] == 1 && m[1][4] == 0, "d_1 column ({p,q},c)");
  auto net = io::load_net(io::read_file(data("ce_net.json")));
  audit.check(state_complex_reachable(to_state_space(net)), "criterion 3");
  o.detail = o.pass ? "I={{a,b}}, 4 markings, ranks (4,5,1), H = (Z, Z), d_2 = (-1,+1,-1,+1,0)"
                    : o.detail;
  return o;
}

// 4
Outcome clique_counts() {
  Outcome o;
  auto M = io::load_graph(io::read_file(data("clique_graph.json")));
  auto p = cliques(M.alphabet(), M.independence()).counts();
  o.expect(p == std::vector<std::size_t>{1, 5, 4, 1}, "library p differs");
  auto r = cli_run({"torus", data("clique_graph.json"), "--json"});
  o.expect(r.code == 0 && ojson::parse(r.out)["p"] == ojson::parse("[1,5,4,1]"), "CLI p differs");
  o.detail = o.pass ? "p = (1,5,4,1)" : o.detail;
  return o;
}

// 5
Outcome torus_oracle() {
  Outcome o;
  std::size_t cases = 0;
  for (std::size_t n = 0; n <= 5; ++n) {
    std::vector<std::pair<std::uint32_t, std::uint32_t>> slots;
    for (std::uint32_t i = 0; i < n; ++i)
      for (std::uint32_t j = i + 1; j < n; ++j)
        slots.emplace_back(i, j);
    for (std::uint32_t mask = 0; mask < (1u << slots.size()); ++mask) {
      Independence I(n);
      oracle::Adjacency adj(n, std::vector<bool>(n, false));
      for (std::size_t k = 0; k < slots.size(); ++k)
        if (mask >> k & 1u) {
          I.add(Symbol{slots[k].first}, Symbol{slots[k].second});
          adj[slots[k].first][slots[k].second] = adj[slots[k].second][slots[k].first] = true;
        }
      TraceMonoid M(Alphabet(gen::letters(n)), I);
      auto X = torus(M);
      audit.check(X, "criterion 5");
      auto H = homology_all(chain_complex(X));
      o.expect(H == free_groups(oracle::clique_counts(n, adj)),
               "|E|=" + std::to_string(n) + " edge mask " + std::to_string(mask));
      ++cases;
    }
  }
  o.detail = o.pass ? std::to_string(cases) + " graphs (all edge sets, |E| <= 5)" : o.detail;
  return o;
}

// 6
Outcome vanishing_bound() {
  Outcome o;
  gen::Rng rng(6001);
  const int cases = 250;
  for (int k = 0; k < cases; ++k) {
    StateSpace S = gen::state_space(rng, 16, 5);
    const std::size_t top = cliques(S.alphabet(), S.monoid().independence()).top_degree();
    auto X = state_complex_augmented(augment(S));
    audit.check(X, "criterion 6");
    auto C = chain_complex(X);
    o.expect(C.degrees() <= top + 1, "cells above the clique bound");
    for (std::size_t d = top + 1; d <= top + 3; ++d)
      o.expect(homology(C, d).is_zero(), "H_" + std::to_string(d) + " nonzero, case " +
                                             std::to_string(k));
  }
  o.detail = o.pass ? std::to_string(cases) + " random spaces, H_k = 0 above max clique" : o.detail;
  return o;
}

// 7
Outcome complex_laws() {
  Outcome o;
  gen::Rng rng(7001);
  const int nets = 250;
  for (int k = 0; k < nets; ++k) {
    CENet net = gen::net(rng, 8, 5);
    StateSpace S = to_state_space(net);
    audit.check(state_complex_reachable(S), "petri reachable");
    audit.check(state_complex_augmented(augment(S)), "petri augmented");
  }
  o.expect(audit.failures == 0, "first failure: " + audit.first_failure);
  o.detail = o.pass ? std::to_string(audit.complexes) + " complexes (" + std::to_string(nets) +
                          " random nets) satisfy identities and dd = 0"
                    : o.detail;
  return o;
}

// 8
Outcome snf_correctness() {
  Outcome o;
  auto known = smith_normal_form(DenseMatrix::from_rows({{2, 4}, {6, 8}}));
  o.expect(known.diagonal == std::vector<Integer>{2, 4}, "[[2,4],[6,8]] not diag(2,4)");
  gen::Rng rng(8001);
  const int cases = 1000;
  for (int k = 0; k < cases && o.pass; ++k) {
    const std::size_t m = gen::uniform(rng, 1, 12), n = gen::uniform(rng, 1, 12);
    DenseMatrix A(m, n);
    oracle::Matrix raw(m, std::vector<Integer>(n));
    const double density = std::uniform_real_distribution<double>(0.1, 1.0)(rng);
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < n; ++j)
        if (gen::coin(rng, density))
          raw[i][j] = A(i, j) = static_cast<long long>(gen::uniform(rng, 0, 18)) - 9;
    auto r = smith_normal_form(A, true);
    const std::string tag = " (case " + std::to_string(k) + ")";
    o.expect(*r.U * A * *r.V == r.D(m, n), "UAV != D" + tag);
    auto to_raw = [](const DenseMatrix &X) {
      oracle::Matrix out(X.rows(), std::vector<Integer>(X.cols()));
      for (std::size_t i = 0; i < X.rows(); ++i)
        for (std::size_t j = 0; j < X.cols(); ++j)
          out[i][j] = X(i, j);
      return out;
    };
    o.expect(abs(oracle::determinant(to_raw(*r.U))) == 1, "U not unimodular" + tag);
    o.expect(abs(oracle::determinant(to_raw(*r.V))) == 1, "V not unimodular" + tag);
    for (std::size_t d = 0; d < r.diagonal.size(); ++d) {
      o.expect(r.diagonal[d] > 0, "nonpositive diagonal" + tag);
      if (d + 1 < r.diagonal.size())
        o.expect(r.diagonal[d + 1] % r.diagonal[d] == 0, "divisibility" + tag);
    }
    o.expect(r.rank == oracle::bareiss_rank(raw), "rank mismatch" + tag);
  }
  o.detail = o.pass ? std::to_string(cases) + " random matrices up to 12x12; diag(2,4) reproduced"
                    : o.detail;
  return o;
}

// 9
Outcome language_consequences() {
  Outcome o;
  gen::Rng rng(9001);
  const int per_shape = 120;
  auto words = [](const TraceLanguage &L) {
    std::string s = "{";
    for (const auto &t : L.members())
      s += L.monoid().format(t) + " ";
    return s + "}";
  };
  for (auto shape : {gen::Shape::Full, gen::Shape::Free, gen::Shape::Random}) {
    for (int k = 0; k < per_shape; ++k) {
      auto M = gen::monoid(rng, gen::uniform(rng, 1, 4), shape);
      auto L = gen::language(rng, M, 64);
      o.expect(L.size() <= 64 && is_prefix_closed(L).closed, "generator produced bad L");
      auto X = state_complex_augmented(augment(to_state_space(L)));
      audit.check(X, "criterion 9");
      auto H = homology_all(chain_complex(X));
      auto p = cliques(M.alphabet(), M.independence()).counts();
      const std::string repro = " for E=" + std::to_string(M.alphabet().size()) + " L=" + words(L);
      if (shape == gen::Shape::Full)
        for (std::size_t n = 1; n < std::max(H.size(), p.size()); ++n) {
          HomologyGroup h = n < H.size() ? H[n] : HomologyGroup{};
          std::size_t pn = n < p.size() ? p[n] : 0;
          o.expect(h == HomologyGroup{pn, {}}, "(a) H_" + std::to_string(n) + repro);
        }
      if (shape == gen::Shape::Free)
        for (std::size_t n = 2; n < H.size(); ++n)
          o.expect(H[n].is_zero(), "(b) H_" + std::to_string(n) + repro);
      if (H.size() > 1 && !H[1].torsion.empty()) {
        std::cerr << "H_1 torsion counterexample" << repro << "\n";
        o.expect(false, "(c) H_1 torsion" + repro);
      }
    }
  }
  o.detail = o.pass ? std::to_string(3 * per_shape) +
                          " languages: (a) Z^p_n, (b) vanishing n>=2, (c) H_1 torsion-free"
                    : o.detail;
  return o;
}

// 10
Outcome determinism() {
  Outcome o;
  const std::vector<std::vector<std::string>> runs{
      {"statespace", data("state_category.json"), "--json"},
      {"statespace", data("state_category.json"), "--augmented", "--json", "--dump-matrices"},
      {"statespace", data("async_square.json"), "--json"},
      {"statespace", data("grid.json"), "--augmented", "--json"},
      {"statespace", data("commutation_violation.json"), "--json"},
      {"statespace", data("commutation_violation.json"), "--augmented", "--no-validate", "--json"},
      {"petri", data("ce_net.json"), "--json", "--dump-matrices", "--dump-cells"},
      {"petri", data("empty_net.json"), "--json"},
      {"tracelang", data("language_ab.json"), "--json"},
      {"tracelang", data("language_unit.json"), "--json"},
      {"tracelang", data("language_not_closed.json"), "--json"},
      {"tracelang", data("language_not_closed.json"), "--no-prefix-close", "--json"},
      {"torus", data("clique_graph.json"), "--json"}};
  for (const auto &args : runs) {
    auto a = cli_run(args), b = cli_run(args);
    o.expect(a.code == b.code && a.out == b.out && a.err == b.err, "non-reproducible: " + args[1]);
    if (a.code == 0)
      o.expect(ojson::parse(a.out).dump(2) + "\n" == a.out, "JSON does not round-trip: " + args[1]);
  }
  gen::Rng rng(10001);
  const int instances = 80;
  for (int k = 0; k < instances; ++k) {
    StateSpace S = gen::state_space(rng, 12, 5);
    std::vector<std::uint32_t> perm(S.alphabet().size());
    std::iota(perm.begin(), perm.end(), 0u);
    std::shuffle(perm.begin(), perm.end(), rng);
    StateSpace P = gen::permute_generators(S, perm);
    for (bool augmented : {true, false}) {
      auto hs = augmented ? homology_all(chain_complex(state_complex_augmented(augment(S))))
                          : homology_all(chain_complex(state_complex_reachable(S)));
      auto hp = augmented ? homology_all(chain_complex(state_complex_augmented(augment(P))))
                          : homology_all(chain_complex(state_complex_reachable(P)));
      o.expect(groups(hs) == groups(hp), "permutation changed homology, instance " +
                                             std::to_string(k));
    }
  }
  o.detail = o.pass ? std::to_string(runs.size()) + " shipped runs byte-identical; " +
                          std::to_string(instances) + " permuted alphabets agree"
                    : o.detail;
  return o;
}

} // namespace

int main() {
  struct Criterion {
    int id;
    const char *name;
    std::function<Outcome()> run;
    bool property;
  };
  const std::vector<Criterion> criteria{
      {1, "augmented state-category example", augmented_example, false},
      {2, "state-category example", state_category_example, false},
      {3, "CE-net example", net_example, false},
      {4, "clique counts", clique_counts, false},
      {5, "torus oracle", torus_oracle, true},
      {6, "vanishing bound", vanishing_bound, true},
      {7, "dd = 0 and semicubical identities", complex_laws, true},
      {8, "Smith normal form correctness", snf_correctness, true},
      {9, "trace-language consequences", language_consequences, true},
      {10, "determinism", determinism, false},
  };
  int failed = 0;
  double property_seconds = 0;
  for (const auto &c : criteria) {
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception &e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (c.property)
      property_seconds += secs;
    if (secs > kPerCriterionSeconds)
      o = {false, "took " + std::to_string(secs) + " s"};
    failed += !o.pass;
    std::printf("[%s] AC%-2d %-36s %s (%.2f s)\n", o.pass ? "PASS" : "FAIL", c.id, c.name,
                o.detail.c_str(), secs);
  }
  const bool in_budget = property_seconds < kPropertySuiteSeconds;
  failed += !in_budget;
  std::printf("[%s] property suites total %.2f s (budget %.0f s)\n", in_budget ? "PASS" : "FAIL",
              property_seconds, kPropertySuiteSeconds);
  std::printf("%s: %d failing\n", failed ? "FAILED" : "ALL PASSED", failed);
  return failed ? 1 : 0;
}
