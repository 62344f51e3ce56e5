// Copyright 2026 The xlang Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.


#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "commands.hpp"
#include "support/instances.hpp"

namespace xlang {
namespace {

using nlohmann::json;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = cli::run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string dir(const std::string& name) { return testing::corpus_dir(name).string(); }
std::string file(const std::string& name, const std::string& f) { return (testing::corpus_dir(name) / f).string(); }

std::filesystem::path temp_path(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("xlang_cli_test_" + name);
}

TEST(Cli, CheckTranslationPasses) {
  const Result r = run({"check", file("oil", "lang1.lang"), file("oil", "lang2.lang"), file("oil", "translation.tr")});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  const json j = json::parse(r.out);
  EXPECT_EQ(j["schema_version"], 1);
  EXPECT_EQ(j["command"], "check");
  EXPECT_EQ(j["inputs"].size(), 3U);
  EXPECT_EQ(j["inputs"][0]["sha256"].get<std::string>().size(), 64U);
}

TEST(Cli, CheckImplicationPasses) {
  const Result r = run({"--format", "text", "check", file("platypus", "lang1.lang"), file("platypus", "lang2.lang"),
                        file("platypus", "implication.imp"), "--mode", "implication"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_NE(r.out.find("result: pass"), std::string::npos);
}

TEST(Cli, CheckViolationFailsWithWitness) {
  const auto d = "broken-galois";
  const Result r =
      run({"--format", "text", "check", file(d, "lang1.lang"), file(d, "lang2.lang"), file(d, "translation.tr")});
  EXPECT_EQ(r.code, cli::kFailed);
  EXPECT_NE(r.out.find("C1 fail: lambda = 1.a, eta = 2.x"), std::string::npos) << r.out;
  EXPECT_NE(r.out.find("result: fail"), std::string::npos);
}

TEST(Cli, MalformedSpecIsUsageError) {
  const auto path = temp_path("bad.tr");
  std::ofstream(path) << "outer 1>2: egg_only => nonsense(\n";
  const Result r = run({"check", file("platypus", "lang1.lang"), file("platypus", "lang2.lang"), path.string()});
  EXPECT_EQ(r.code, cli::kUsage);
  EXPECT_FALSE(r.err.empty());
  std::filesystem::remove(path);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, cli::kUsage);
  EXPECT_EQ(run({"bogus"}).code, cli::kUsage);
  EXPECT_EQ(run({"joint"}).code, cli::kUsage);
  EXPECT_EQ(run({"joint", dir("nope")}).code, cli::kUsage);
  EXPECT_EQ(run({"translate", dir("oil"), "lam_0_10", "--direction", "3>1"}).code, cli::kUsage);
  EXPECT_EQ(run({"translate", dir("oil"), "no_such_atom"}).code, cli::kUsage);
  EXPECT_EQ(run({"--format", "xml", "joint", dir("oil")}).code, cli::kUsage);
  EXPECT_EQ(run({"bounds", dir("platypus"), "--formula", "plat"}).code, cli::kUsage);  // no distribution
  EXPECT_EQ(run({"--help"}).code, cli::kOk);
}

TEST(Cli, Translate) {
  const auto oil = dir("oil");
  Result r = run({"translate", oil, "eta_500_600 | eta_600_700", "--direction", "2>1", "--mode", "inner"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out, "lam_80_90 | lam_90_100\n");
  r = run({"translate", oil, "eta_neg | eta_0_100 | eta_100_200", "--direction", "2>1", "--mode", "outer"});
  EXPECT_EQ(r.out, "*\n");
  r = run({"translate", oil, "false", "--direction", "2>1", "--mode", "outer"});
  EXPECT_EQ(r.out, "false\n");
  r = run({"translate", oil, "*", "--direction", "1>2", "--mode", "inner"});
  EXPECT_EQ(r.out, "*\n");
  r = run({"translate", oil, "lam_70_80", "--direction", "1>2", "--mode", "outer"});
  EXPECT_EQ(r.out, "eta_400_500 | eta_500_600\n");
}

TEST(Cli, TranslateRejectsInconsistentInput) {
  const Result r = run({"translate", dir("broken-galois"), "a", "--direction", "1>2"});
  EXPECT_EQ(r.code, cli::kFailed);
  EXPECT_NE(r.err.find("inconsistent"), std::string::npos);
}

TEST(Cli, JointPlatypus) {
  const Result r = run({"joint", dir("platypus")});
  ASSERT_EQ(r.code, cli::kOk) << r.err;
  const json j = json::parse(r.out);
  const json& s = j["joint_state_space"];
  EXPECT_EQ(s["state_count"], 3);
  EXPECT_EQ(s["states"][0]["atom1"], "egg_only");
  EXPECT_EQ(s["states"][0]["atom2"], "huev");
  EXPECT_EQ(s["states"][1]["atom1"], "mam_only");
  EXPECT_EQ(s["states"][1]["atom2"], "mam");
  EXPECT_EQ(s["states"][2]["atom1"], "plat");
  EXPECT_TRUE(s["states"][2]["atom2"].is_null());

  const Result t = run({"--format", "text", "joint", dir("platypus")});
  EXPECT_NE(t.out.find("2: (plat, -)"), std::string::npos) << t.out;
}

TEST(Cli, Classify) {
  Result r = run({"--format", "text", "classify", dir("platypus")});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out, "language 2 less aware than language 1 (pure restriction)\n");
  r = run({"--format", "text", "classify", dir("oil")});
  EXPECT_EQ(r.out, "languages 1 and 2 are incomparable in awareness\n");
  const json j = json::parse(run({"classify", dir("nested-grids")}).out);
  EXPECT_EQ(j["awareness"]["classification"], "1-pure-coarsening-of-2");
}

TEST(Cli, Common) {
  const json j = json::parse(run({"common", dir("platypus")}).out);
  EXPECT_EQ(j["command"], "common");
  EXPECT_EQ(j["common_language"]["host"], 1);
  EXPECT_EQ(j["common_language"]["atoms"], json::array({"egg_only", "mam_only"}));
  const json k = json::parse(run({"common", dir("platypus"), "--host", "2"}).out);
  EXPECT_EQ(k["common_language"]["host"], 2);
}

TEST(Cli, BoundsUniform) {
  const Result r =
      run({"--format", "text", "bounds", dir("platypus"), "--uniform", "--side", "1", "--formula", "egg_only | plat"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out, "[0.3333, 1.0]\n");
  const json j = json::parse(run({"bounds", dir("platypus"), "--uniform", "--formula", "mam_only"}).out);
  EXPECT_EQ(j["language"], 1);
  EXPECT_EQ(j["target"], 2);
  EXPECT_NEAR(j["interval"][0].get<double>(), 1.0 / 3, 1e-12);
  EXPECT_NEAR(j["interval"][1].get<double>(), 1.0 / 3, 1e-12);
}

TEST(Cli, BoundsFromFile) {
  const auto path = temp_path("prob.json");
  std::ofstream(path) << R"({"0": 0.5, "2": 0.5})";
  const Result r = run({"--format", "text", "bounds", dir("platypus"), "--prob", path.string(), "--side", "1",
                        "--formula", "egg_only | plat"});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  EXPECT_EQ(r.out, "[0.5, 1.0]\n");
  std::ofstream(path) << R"({"0": 0.5})";
  EXPECT_NE(run({"bounds", dir("platypus"), "--prob", path.string(), "--formula", "plat"}).code, cli::kOk);
  std::filesystem::remove(path);
}

TEST(Cli, ExportDot) {
  const Result r = run({"export-dot", dir("platypus"), "--what", "cross"});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_EQ(r.out.rfind("digraph cross {", 0), 0U);
  const Result full = run({"export-dot", dir("platypus"), "--what", "cross", "--full"});
  EXPECT_NE(r.out, full.out);
  const Result a = run({"export-dot", dir("platypus"), "--what", "algebra2"});
  EXPECT_EQ(a.out.rfind("digraph algebra2 {", 0), 0U);
}

TEST(Cli, OutputIsDeterministic) {
  for (const auto& cmd : std::vector<std::vector<std::string>>{
           {"joint", dir("oil")},
           {"common", dir("fixed-gap")},
           {"classify", dir("oil")},
           {"check", file("oil", "lang1.lang"), file("oil", "lang2.lang"), file("oil", "implication.imp"), "--mode",
            "implication"}}) {
    EXPECT_EQ(run(cmd).out, run(cmd).out) << cmd[0];
  }
}

TEST(Cli, TimingOnlyWhenRequested) {
  const json plain = json::parse(run({"joint", dir("platypus")}).out);
  EXPECT_FALSE(plain.contains("timing"));
  const json timed = json::parse(run({"--timing", "joint", dir("platypus")}).out);
  ASSERT_TRUE(timed.contains("timing"));
  EXPECT_GE(timed["timing"]["elapsed_ms"].get<double>(), 0.0);
}

TEST(Cli, OutputFile) {
  const auto path = temp_path("out.json");
  const Result r = run({"--output", path.string(), "joint", dir("platypus")});
  EXPECT_EQ(r.code, cli::kOk);
  EXPECT_TRUE(r.out.empty());
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  EXPECT_EQ(ss.str(), run({"joint", dir("platypus")}).out);
  std::filesystem::remove(path);
}

TEST(Cli, OracleAgrees) {
  for (const auto& name : {"platypus", "fixed-gap", "oil"}) {
    const Result r = run({"--oracle", "joint", dir(name)});
    ASSERT_EQ(r.code, cli::kOk) << name << r.err;
    const json j = json::parse(r.out);
    ASSERT_TRUE(j.contains("oracle")) << name;
    for (const auto& c : j["oracle"]) EXPECT_EQ(c["status"], "agree") << name;
  }
}

TEST(Cli, Sha256) {
  EXPECT_EQ(cli::sha256_hex("abc"), "ba7816bf8f01cfea414140de5dae2223b00361a396177a9cb410ff61f20015ad");
}

}  // namespace
}  // namespace xlang
