// Copyright 2026 The symlu Authors
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

#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <gtest/gtest.h>

#include "json.hpp"
#include "symlu/classifier.hpp"
#include "symlu/cli.hpp"
#include "symlu/error.hpp"
#include "symlu/stabilizer.hpp"
#include "symlu/states.hpp"

namespace symlu {
namespace {

using nlohmann::json;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

Outcome run_cli(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  Outcome o;
  o.code = cli::run(args, out, err);
  o.out = out.str();
  o.err = err.str();
  return o;
}

std::string fixture(const std::string& name) { return std::string(SYMLU_FIXTURE_DIR) + "/" + name + ".json"; }

class TempFile {
 public:
  explicit TempFile(const std::string& content) {
    static int counter = 0;
    path_ = (std::filesystem::temp_directory_path() /
             ("symlu_cli_test_" + std::to_string(::getpid()) + "_" + std::to_string(counter++) + ".json"))
                .string();
    std::ofstream(path_) << content;
  }
  ~TempFile() { std::remove(path_.c_str()); }
  const std::string& path() const { return path_; }

 private:
  std::string path_;
};

std::string state_json(const PauliOperator& rho) {
  json terms = json::object();
  for (const auto& [packed, c] : rho.terms()) terms[PauliIndex(rho.qubits(), packed).str()] = c;
  return json{{"n", rho.qubits()}, {"pauli", terms}}.dump();
}

TEST(ParseState, PauliPresetAndMixture) {
  const PauliOperator p = cli::parse_state(R"({"n": 2, "pauli": {"ii": 0.25, "zz": 0.1}})");
  EXPECT_LT(max_abs_diff(p, zz_example(2, 0.1)), 1e-15);
  const PauliOperator g =
      cli::parse_state(R"({"n": 3, "preset": {"kind": "ghz_pure", "alpha": 0.6, "beta": [0, 0.8]}})");
  EXPECT_LT(max_abs_diff(g, ghz_rho(3, 0.6, Complex(0, 0.8))), 1e-15);
  const PauliOperator m = cli::parse_state(R"({"n": 2, "mixture": [
      {"weight": 0.5, "state": {"preset": {"kind": "singlet"}}},
      {"weight": 0.5, "state": {"n": 2, "preset": {"kind": "completely_mixed"}}}]})");
  EXPECT_LT(max_abs_diff(m, 0.5 * singlet() + 0.5 * completely_mixed(2)), 1e-15);
}

TEST(ParseState, Rejections) {
  const char* bad[] = {
      "not json",
      R"({"pauli": {"i": 1}})",
      R"({"n": 2})",
      R"({"n": 2, "pauli": {"ii": 0.25}, "preset": {"kind": "singlet"}})",
      R"({"n": 2, "pauli": {"ii": 0.25}, "colour": 1})",
      R"({"n": 2, "pauli": {"iii": 0.25}})",
      R"({"n": 2, "pauli": {"iq": 0.25}})",
      R"({"n": 2, "pauli": {"ii": "x"}})",
      R"({"n": 0, "pauli": {}})",
      R"({"n": 2, "preset": {"kind": "singlet", "flavour": 1}})",
      R"({"n": 2, "preset": {"kind": "no_such_kind"}})",
      R"({"n": 3, "preset": {"kind": "ghz_pure", "alpha": 1, "beta": 1}})",
      R"({"n": 2, "mixture": [{"weight": 0.4, "state": {"preset": {"kind": "singlet"}}}]})",
      R"({"n": 2, "mixture": [{"weight": 1.0, "state": {"n": 3, "preset": {"kind": "product_zero"}}}]})",
      R"({"n": 2, "mixture": []})",
  };
  for (const char* text : bad) EXPECT_THROW(cli::parse_state(text), cli::ParseError) << text;
}

TEST(Cli, ClassifyReportStructure) {
  const Outcome o = run_cli({"classify", fixture("zz_plus_3")});
  ASSERT_EQ(o.code, 0) << o.err;
  const json r = json::parse(o.out);
  EXPECT_EQ(r["command"], "classify");
  EXPECT_EQ(r["tag"], "Product");
  EXPECT_EQ(r["stabilizer_dim"], 3);
  EXPECT_EQ(r["projection_dims"], json::array({1, 1, 1}));
  EXPECT_EQ(r["canonical"]["labels"], json::array({"c0", "c1", "c2", "c3"}));
  EXPECT_NEAR(r["canonical"]["coefficients"][3].get<double>(), 0.07, 1e-12);
  EXPECT_NEAR(r["canonical"]["twin"][3].get<double>(), -0.07, 1e-12);
  EXPECT_EQ(r["tolerances"]["rank"], 1e-7);
  EXPECT_EQ(r["inputs"], json::array({fixture("zz_plus_3")}));
}

TEST(Cli, ClassifyZeroHasNullCanonical) {
  const Outcome o = run_cli({"classify", fixture("generic_3")});
  ASSERT_EQ(o.code, 0) << o.err;
  const json r = json::parse(o.out);
  EXPECT_EQ(r["tag"], "Zero");
  EXPECT_TRUE(r["canonical"].is_null());
}

TEST(Cli, EquivExitCodes) {
  const Outcome same = run_cli({"equiv", fixture("zz_plus_3"), fixture("zz_minus_3")});
  EXPECT_EQ(same.code, 0);
  const json r = json::parse(same.out);
  EXPECT_EQ(r["verdict"], "Equivalent");
  EXPECT_EQ(r["witness"].size(), 3u);

  const Outcome diff = run_cli({"equiv", fixture("zz_plus_3"), fixture("ghz_3")});
  EXPECT_EQ(diff.code, 1);
  EXPECT_EQ(json::parse(diff.out)["verdict"], "Inequivalent");
  EXPECT_TRUE(json::parse(diff.out)["witness"].is_null());

  const Outcome unknown = run_cli({"equiv", fixture("generic_3"), fixture("generic_3")});
  EXPECT_EQ(unknown.code, 5);
  EXPECT_EQ(json::parse(unknown.out)["verdict"], "Unknown");

  EXPECT_EQ(run_cli({"equiv", fixture("zz_plus_3"), fixture("zz_plus_2")}).code, 2);
}

TEST(Cli, CanonAndStabilizer) {
  const Outcome c = run_cli({"canon", fixture("werner_mixture_2")});
  ASSERT_EQ(c.code, 0) << c.err;
  EXPECT_EQ(json::parse(c.out)["canonical"]["twin"], "unique");
  EXPECT_EQ(run_cli({"canon", fixture("generic_3")}).code, 5);

  const Outcome s = run_cli({"stabilizer", "--decompose", fixture("singlet")});
  ASSERT_EQ(s.code, 0) << s.err;
  const json r = json::parse(s.out);
  EXPECT_EQ(r["dim"], 3);
  EXPECT_EQ(r["basis"].size(), 3u);
  EXPECT_EQ(r["decomposition"]["blocks"].size(), 1u);
  EXPECT_EQ(r["decomposition"]["blocks"][0]["qubits"], json::array({0, 1}));
  EXPECT_EQ(r["decomposition"]["relations_ok"], true);

  const Outcome plain = run_cli({"stabilizer", fixture("ghz_3")});
  ASSERT_EQ(plain.code, 0);
  EXPECT_FALSE(json::parse(plain.out).contains("decomposition"));
}

TEST(Cli, UsageAndInputErrors) {
  EXPECT_EQ(run_cli({}).code, 2);
  EXPECT_EQ(run_cli({"frobnicate"}).code, 2);
  EXPECT_EQ(run_cli({"classify"}).code, 2);
  EXPECT_EQ(run_cli({"--format", "xml", "classify", fixture("singlet")}).code, 2);
  EXPECT_EQ(run_cli({"--rank-tol", "-1", "classify", fixture("singlet")}).code, 2);
  EXPECT_EQ(run_cli({"classify", "/nonexistent/state.json"}).code, 2);
  TempFile broken("{ nope");
  const Outcome o = run_cli({"classify", broken.path()});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("parse error"), std::string::npos);
  EXPECT_EQ(run_cli({"--help"}).code, 0);
}

TEST(Cli, AsymmetricInputExitsThree) {
  TempFile asym(R"({"n": 2, "pauli": {"ii": 0.25, "zi": 0.1}})");
  for (const char* cmd : {"classify", "canon"}) {
    const Outcome o = run_cli({cmd, asym.path()});
    EXPECT_EQ(o.code, 3) << cmd;
    EXPECT_NE(o.err.find("NotSymmetric"), std::string::npos) << o.err;
  }
  EXPECT_EQ(run_cli({"equiv", asym.path(), asym.path()}).code, 3);
}

TEST(Cli, NumericalFailuresExitFour) {
  TempFile big(state_json(completely_mixed(kMaxStabilizerQubits + 1)));
  EXPECT_EQ(run_cli({"stabilizer", big.path()}).code, 4);
}

TEST(Cli, GlobalOptionsAreReported) {
  const Outcome o = run_cli({"--rank-tol", "1e-6", "--num-tol", "1e-8", "classify", fixture("singlet")});
  ASSERT_EQ(o.code, 0) << o.err;
  const json r = json::parse(o.out);
  EXPECT_EQ(r["tolerances"]["rank"], 1e-6);
  EXPECT_EQ(r["tolerances"]["num"], 1e-8);
}

TEST(Cli, TextFormat) {
  const Outcome o = run_cli({"--format", "text", "classify", fixture("ghz_3")});
  ASSERT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("tag: GHZ\n"), std::string::npos);
  EXPECT_NE(o.out.find("command: classify\n"), std::string::npos);
}

TEST(Cli, ReportsAreDeterministic) {
  for (const char* name : {"ghz_4_complex", "mixture_ghz_dicke_3", "dicke_pure_5_2"}) {
    const Outcome a = run_cli({"classify", fixture(name)});
    const Outcome b = run_cli({"classify", fixture(name)});
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out) << name;
  }
}

TEST(Cli, CanonicalCoefficientsRoundTripThroughStateFiles) {
  for (const char* name : {"ghz_mixture_3", "dicke_pure_3_1", "zz_minus_3", "werner_basis_4_1"}) {
    const Outcome first = run_cli({"canon", fixture(name)});
    ASSERT_EQ(first.code, 0) << name << first.err;
    const PauliOperator rho = cli::load_state(fixture(name));
    const CanonicalForm cf = canonical_form(rho);
    TempFile rebuilt(state_json(representative(cf)));
    const json a = json::parse(first.out)["canonical"]["coefficients"];
    const json b = json::parse(run_cli({"canon", rebuilt.path()}).out)["canonical"]["coefficients"];
    ASSERT_EQ(a.size(), b.size());
    for (std::size_t i = 0; i < a.size(); ++i) EXPECT_NEAR(a[i].get<double>(), b[i].get<double>(), 1e-9) << name;
  }
}

TEST(Cli, BinaryMatchesInProcessRun) {
  const std::string cmd = std::string(SYMLU_CLI_PATH) + " classify " + fixture("singlet");
  FILE* pipe = ::popen(cmd.c_str(), "r");
  ASSERT_NE(pipe, nullptr);
  std::string captured;
  char buf[4096];
  std::size_t got;
  while ((got = std::fread(buf, 1, sizeof buf, pipe)) > 0) captured.append(buf, got);
  EXPECT_EQ(::pclose(pipe), 0);
  EXPECT_EQ(captured, run_cli({"classify", fixture("singlet")}).out);
}

}  // namespace
}  // namespace symlu
