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

#include "analysis.hpp"
#include "error.hpp"
#include "io.hpp"
#include "state_space.hpp"
#include "trace_language.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <ostream>
#include <string>
#include <vector>

namespace cubhom::cli {

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kInternal = 1,
  kParse = 2,
  kValidation = 3,
};

namespace detail {

inline std::vector<std::string> split(const std::string &s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == sep) {
      if (!cur.empty())
        out.push_back(cur);
      cur.clear();
    } else if (c != ' ') {
      cur += c;
    }
  }
  if (!cur.empty())
    out.push_back(cur);
  return out;
}

/// Inline graph: vertices "a,b,c", edges "a-b,b-c".
inline TraceMonoid inline_graph(const std::string &vertices, const std::string &edges) {
  Alphabet E(split(vertices, ','));
  std::vector<std::pair<std::string, std::string>> raw;
  for (const auto &e : split(edges, ',')) {
    auto ends = split(e, '-');
    if (ends.size() != 2)
      throw InputError("edge '" + e + "' must have the form a-b");
    raw.emplace_back(ends[0], ends[1]);
  }
  Independence I = validate_independence(E, raw);
  return TraceMonoid(std::move(E), std::move(I));
}

} // namespace detail

/// Runs the command line `cubhom <args…>`; args excludes the program name.
inline int run(const std::vector<std::string> &args, std::ostream &out,
               std::ostream &err) {
  CLI::App app{"Integral homology of trace monoid actions, CE nets and trace "
               "languages"};
  app.require_subcommand(1);

  std::string file;
  bool json = false, timing = false;
  AnalysisOptions opt;
  auto common = [&](CLI::App *sub) {
    sub->add_flag("--json", json, "Emit the report as JSON");
    sub->add_flag("--dump-matrices", opt.dump_matrices,
                  "Print the differentials as grids and triplets");
    sub->add_flag("--dump-cells", opt.dump_cells, "Print cells and face tables");
    sub->add_flag("--timing", timing, "Print elapsed time (text output only)");
  };

  auto *ss = app.add_subcommand("statespace", "Homology of a state space");
  ss->add_option("file", file, "State space JSON file")->required();
  bool no_validate = false;
  std::string initial;
  ss->add_flag("--augmented", opt.augmented, "Use the augmented complex Q(E,I,S_*)");
  ss->add_flag("--no-validate", no_validate, "Do not reject non-commuting actions");
  ss->add_option("--initial", initial, "Restrict to states reachable from this one");
  common(ss);

  auto *pn = app.add_subcommand("petri", "Homology of a CE net");
  pn->add_option("file", file, "Net JSON file")->required();
  bool all_markings = false;
  pn->add_flag("--all-markings", all_markings, "Use all 2^|B| markings");
  pn->add_flag("--augmented", opt.augmented, "Use the augmented complex");
  common(pn);

  auto *tl = app.add_subcommand("tracelang", "Integral homology of a trace language");
  tl->add_option("file", file, "Language JSON file")->required();
  bool no_close = false;
  tl->add_flag("--no-prefix-close", no_close, "Reject languages that are not prefix closed");
  common(tl);

  auto *to = app.add_subcommand("torus", "Homology of the generalized torus T(E,I)");
  to->add_option("file", file, "Graph JSON file");
  std::string vertices, edges;
  to->add_option("--vertices", vertices, "Inline vertex list, e.g. a,b,c");
  to->add_option("--edges", edges, "Inline edge list, e.g. a-b,b-c");
  common(to);

  std::vector<const char *> argv{"cubhom"};
  for (const auto &a : args)
    argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError &e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kOk : kParse;
  }

  try {
    const auto start = std::chrono::steady_clock::now();
    AnalysisReport report;
    if (*ss) {
      opt.validate = !no_validate;
      std::optional<std::string> init;
      if (!initial.empty())
        init = initial;
      report = analyze_state_space(io::load_state_space(io::read_file(file)), opt, init);
    } else if (*pn) {
      report = analyze_net(io::load_net(io::read_file(file)), opt, all_markings);
    } else if (*tl) {
      report = analyze_language(io::load_language(io::read_file(file)), !no_close, opt);
    } else {
      TraceMonoid M;
      if (!file.empty())
        M = io::load_graph(io::read_file(file));
      else if (!vertices.empty())
        M = detail::inline_graph(vertices, edges);
      else
        throw InputError("torus needs a graph file or --vertices");
      report = analyze_torus(M, opt);
    }
    report.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                         .count();
    out << (json ? render_json(report) : render_text(report, timing));
    return kOk;
  } catch (const CommutationViolation &e) {
    err << "error: " << e.what() << "\n";
    for (const auto &line : e.details())
      err << "  " << line << "\n";
    return kValidation;
  } catch (const ValidationError &e) {
    err << "error: " << e.what() << "\n";
    return kValidation;
  } catch (const InputError &e) {
    err << "error: " << e.what() << "\n";
    return kParse;
  } catch (const std::exception &e) {
    err << "internal error: " << e.what() << "\n";
    return kInternal;
  }
}

inline int run(int argc, char **argv, std::ostream &out, std::ostream &err) {
  return run(std::vector<std::string>(argv + 1, argv + argc), out, err);
}

} // namespace cubhom::cli
