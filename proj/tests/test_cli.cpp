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

#include <catch2/catch_amalgamated.hpp>
#include <cubhom/cli.hpp>

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace cubhom;
using ojson = nlohmann::ordered_json;

namespace {

std::string data(const std::string &name) { return std::string(CUBHOM_DATA_DIR) + "/" + name; }

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  std::ostringstream out, err;
  int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::size_t> bettis(const std::string &report) {
  std::vector<std::size_t> out;
  const ojson doc = ojson::parse(report);
  for (const auto &h : doc["homology"]) {
    REQUIRE(h["torsion"].empty());
    out.push_back(h["betti"].get<std::size_t>());
  }
  return out;
}

// Scratch inputs live in the system temp directory and are removed at exit.
struct Scratch {
  std::vector<std::filesystem::path> paths;
  ~Scratch() {
    std::error_code ec;
    for (const auto &p : paths)
      std::filesystem::remove(p, ec);
  }
} scratch;

std::string temp_file(const std::string &name, const std::string &content) {
  auto path = std::filesystem::temp_directory_path() / ("cubhom_cli_test_" + name);
  std::ofstream(path) << content;
  scratch.paths.push_back(path);
  return path.string();
}

} // namespace

TEST_CASE("statespace command", "[cli]") {
  auto aug = run({"statespace", data("state_category.json"), "--augmented", "--json"});
  REQUIRE(aug.code == 0);
  CHECK(bettis(aug.out) == std::vector<std::size_t>{1, 2, 1});
  CHECK(ojson::parse(aug.out)["cells"] == ojson::parse("[3,6,3]"));

  auto plain = run({"statespace", data("state_category.json"), "--json"});
  REQUIRE(plain.code == 0);
  CHECK(bettis(plain.out) == std::vector<std::size_t>{1, 1, 0});

  auto text = run({"statespace", data("state_category.json")});
  CHECK(text.out.find("H_1 = Z\n") != std::string::npos);
  CHECK(text.out.find("H_2 = 0\n") != std::string::npos);

  auto square = run({"statespace", data("async_square.json"), "--initial", "s2", "--json"});
  REQUIRE(square.code == 0);
  CHECK(ojson::parse(square.out)["input"]["states"] == 2);
}

TEST_CASE("statespace validation failures", "[cli]") {
  auto bad = run({"statespace", data("commutation_violation.json")});
  CHECK(bad.code == 3);
  CHECK(bad.err.find("state 's0' for (a,b): ab -> s3, ba -> s4") != std::string::npos);

  auto forced = run({"statespace", data("commutation_violation.json"), "--augmented",
                     "--no-validate", "--json"});
  REQUIRE(forced.code == 0);
  auto diag = ojson::parse(forced.out)["diagnostics"];
  REQUIRE(diag.size() >= 2);
  CHECK(diag[0].get<std::string>().find("validation disabled") != std::string::npos);

  // Faces of the reachable complex exist here, but the cubical identities fail.
  auto raw = run({"statespace", data("commutation_violation.json"), "--no-validate", "--json"});
  REQUIRE(raw.code == 0);
  bool flagged = false;
  const ojson doc = ojson::parse(raw.out);
  CHECK(doc["homology"].empty());
  for (const auto &d : doc["diagnostics"])
    flagged |= d.get<std::string>().find("semicubical identities fail") != std::string::npos;
  CHECK(flagged);
}

TEST_CASE("petri command", "[cli]") {
  auto r = run({"petri", data("ce_net.json"), "--json", "--dump-matrices"});
  REQUIRE(r.code == 0);
  auto j = ojson::parse(r.out);
  CHECK(j["independence"] == ojson::parse(R"([["a","b"]])"));
  CHECK(j["input"]["markings"] == ojson::parse(R"(["{}","{p}","{q}","{p,q}"])"));
  CHECK(j["cells"] == ojson::parse("[4,5,1]"));
  CHECK(bettis(r.out) == std::vector<std::size_t>{1, 1, 0});
  REQUIRE(j["matrices"].size() == 2);
  CHECK(j["matrices"][0]["rows"] == 4);
  CHECK(j["matrices"][0]["cols"] == 5);
  CHECK(j["matrices"][1]["rows"] == 5);
  CHECK(j["matrices"][1]["cols"] == 1);
  CHECK(j["matrices"][1]["triplets"] == ojson::parse("[[0,0,-1],[1,0,1],[2,0,-1],[3,0,1]]"));

  auto text = run({"petri", data("ce_net.json"), "--dump-matrices"});
  CHECK(text.out.find("d_2: 5 x 1") != std::string::npos);
  CHECK(text.out.find("triplets d_1 4 5") != std::string::npos);

  auto idle = run({"petri", data("empty_net.json"), "--json"});
  REQUIRE(idle.code == 0);
  CHECK(bettis(idle.out) == std::vector<std::size_t>{1});

  auto all = run({"petri", data("ce_net.json"), "--all-markings", "--json"});
  CHECK(bettis(all.out) == std::vector<std::size_t>{1, 1, 0});
}

TEST_CASE("tracelang command", "[cli]") {
  auto ab = run({"tracelang", data("language_ab.json"), "--json"});
  REQUIRE(ab.code == 0);
  CHECK(bettis(ab.out) == std::vector<std::size_t>{1, 2, 1});
  auto j = ojson::parse(ab.out);
  CHECK(j["p"] == ojson::parse("[1,2,1]"));
  CHECK(j["residual"][1]["betti"] == 0);
  CHECK(j["residual"][2]["betti"] == 0);

  auto unit = run({"tracelang", data("language_unit.json"), "--json"});
  REQUIRE(unit.code == 0);
  // The isolated vertex e splits the poset of nonempty traces in two, adding
  // one class to H_1 beyond p_1: rank C_1 = 10, rank d_1 = 1, rank d_2 = 3.
  CHECK(bettis(unit.out) == std::vector<std::size_t>{1, 6, 4, 1});
  CHECK(ojson::parse(unit.out)["residual"][1]["betti"] == 1);

  auto open = run({"tracelang", data("language_not_closed.json"), "--no-prefix-close"});
  CHECK(open.code == 3);
  CHECK(open.err.find("missing prefix 'a'") != std::string::npos);
  CHECK(run({"tracelang", data("language_not_closed.json")}).code == 0);
}

TEST_CASE("torus command", "[cli]") {
  auto two = run({"torus", "--vertices", "a,b", "--edges", "a-b", "--json"});
  REQUIRE(two.code == 0);
  CHECK(bettis(two.out) == std::vector<std::size_t>{1, 2, 1});
  auto g = run({"torus", data("clique_graph.json"), "--json"});
  CHECK(bettis(g.out) == std::vector<std::size_t>{1, 5, 4, 1});
  auto wedge = run({"torus", "--vertices", "a,b,c", "--json"});
  CHECK(bettis(wedge.out) == std::vector<std::size_t>{1, 3});
  CHECK(run({"torus"}).code == 2);
  CHECK(run({"torus", "--vertices", "a", "--edges", "a-a"}).code == 2);
}

TEST_CASE("parse errors exit with code 2", "[cli]") {
  CHECK(run({"statespace", "no/such/file.json"}).code == 2);
  CHECK(run({"frobnicate"}).code == 2);
  CHECK(run({}).code == 2);
  CHECK(run({"statespace", temp_file("bad.json", "{not json")}).code == 2);
  CHECK(run({"statespace", temp_file("missing.json", R"({"generators":["a"]})")}).code == 2);
  CHECK(run({"statespace",
             temp_file("refl.json", R"({"generators":["a"],"independence":[["a","a"]],"states":[]})")})
            .code == 2);
  CHECK(run({"statespace", temp_file("star.json",
                                     R"({"generators":["a"],"states":["*"],"transitions":[]})"),
             "--augmented"})
            .code == 2);
  CHECK(run({"statespace", data("state_category.json"), "--initial", "zz"}).code == 2);
  CHECK(run({"statespace", "--help"}).code == 0);
}

TEST_CASE("json reports round-trip and are reproducible", "[cli]") {
  for (const auto &args : std::vector<std::vector<std::string>>{
           {"statespace", data("state_category.json"), "--augmented", "--json", "--dump-matrices"},
           {"petri", data("ce_net.json"), "--json", "--dump-cells"},
           {"tracelang", data("language_ab.json"), "--json"},
           {"torus", data("clique_graph.json"), "--json"}}) {
    auto a = run(args), b = run(args);
    REQUIRE(a.code == 0);
    CHECK(a.out == b.out);
    CHECK(ojson::parse(a.out).dump(2) + "\n" == a.out);
  }
}

TEST_CASE("loaders accept trace word arrays", "[io]") {
  auto doc = io::parse(R"({"generators":["go","stop"],"traces":[["go","stop"],"go"]})");
  auto L = io::load_language(doc);
  CHECK(L.size() == 2);
  CHECK_THROWS_AS(io::load_language(io::parse(R"({"generators":["a"],"traces":[3]})")),
                  InputError);
  CHECK_THROWS_AS(io::load_net(io::parse(R"({"conditions":["p"],"events":[{"name":"a","pre":["x"]}]})")),
                  InputError);
}

TEST_CASE("cell dump lists faces", "[cli]") {
  auto r = run({"statespace", data("state_category.json"), "--dump-cells"});
  REQUIRE(r.code == 0);
  CHECK(r.out.find("cell 2 0 (s0,a,b)") != std::string::npos);
  CHECK(r.out.find("face 1 1 1 1 1") != std::string::npos); // ∂_1^1(s0,b) = s1
}
