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

#include <map>
#include <regex>
#include <set>
#include <sstream>

#include "support/instances.hpp"
#include "xlang/export.hpp"
#include "xlang/xlang.hpp"

namespace xlang {
namespace {

using testing::eval;

struct Dot {
  std::map<std::string, std::string> labels;
  std::map<std::string, std::string> cluster;  // node -> cluster name
  std::vector<std::pair<std::string, std::string>> edges;
  std::vector<std::pair<std::string, std::string>> both;
  std::vector<std::pair<std::string, std::string>> dashed;
};

Dot parse_dot(const std::string& text) {
  static const std::regex node(R"re(^\s*(n\d+_\d+) \[label="([^"]*)"\];$)re");
  static const std::regex edge(R"re(^\s*(n\d+_\d+) -> (n\d+_\d+)(.*);$)re");
  static const std::regex sub(R"re(^\s*subgraph (\w+) \{$)re");
  Dot d;
  std::string current;
  std::istringstream in(text);
  std::string line;
  std::smatch m;
  while (std::getline(in, line)) {
    if (std::regex_match(line, m, sub)) {
      current = m[1];
    } else if (line == "  }") {
      current.clear();
    } else if (std::regex_match(line, m, node)) {
      d.labels[m[1]] = m[2];
      d.cluster[m[1]] = current;
    } else if (std::regex_match(line, m, edge)) {
      const std::string attrs = m[3];
      if (attrs.find("dir=both") != std::string::npos) {
        d.both.emplace_back(m[1], m[2]);
      } else if (attrs.find("dashed") != std::string::npos) {
        d.dashed.emplace_back(m[1], m[2]);
      } else {
        d.edges.emplace_back(m[1], m[2]);
      }
    }
  }
  return d;
}

std::size_t count_in(const Dot& d, const std::string& cluster) {
  std::size_t n = 0;
  for (const auto& [id, c] : d.cluster) n += c == cluster;
  return n;
}

std::string id(Side s, std::uint64_t x) { return "n" + std::to_string(number(s)) + "_" + std::to_string(x); }

TEST(AlgebraDot, SingleAtom) {
  const auto a = testing::algebra("language L\natoms: p\n");
  const Dot d = parse_dot(algebra_dot(*a, Side::one));
  EXPECT_EQ(d.labels.size(), 4U);  // two models: p and !p
  const auto b = testing::algebra("language L\natoms: p\nbelieve: p\n");
  const Dot e = parse_dot(algebra_dot(*b, Side::one));
  ASSERT_EQ(e.labels.size(), 2U);
  EXPECT_EQ(e.labels.at("n1_0"), "false");
  EXPECT_EQ(e.labels.at("n1_1"), "true");
  ASSERT_EQ(e.edges.size(), 1U);
  EXPECT_EQ(e.edges[0], std::make_pair(std::string("n1_0"), std::string("n1_1")));
}

TEST(AlgebraDot, HasseEdgesAreCovers) {
  const auto c = testing::corpus("fixed-gap");
  for (Side s : {Side::one, Side::two}) {
    const Algebra& a = s == Side::one ? *c.algebra1 : *c.algebra2;
    const Dot d = parse_dot(algebra_dot(a, s));
    EXPECT_EQ(d.labels.size(), a.full() + 1);
    std::set<std::pair<std::string, std::string>> got(d.edges.begin(), d.edges.end());
    std::set<std::pair<std::string, std::string>> want;
    for (std::uint64_t x = 0; x <= a.full(); ++x) {
      for (std::uint64_t y = 0; y <= a.full(); ++y) {
        if (x != y && (x & ~y) == 0 && std::popcount(y & ~x) == 1) want.emplace(id(s, x), id(s, y));
      }
    }
    EXPECT_EQ(got, want);
  }
}

TEST(CrossDot, Platypus) {
  const auto c = testing::corpus("platypus");
  const CrossImplication r = implication_from_translation(*c.translation);
  const Dot d = parse_dot(cross_dot(r));
  EXPECT_EQ(count_in(d, "cluster_1"), 8U);
  EXPECT_EQ(count_in(d, "cluster_2"), 4U);
  const std::set<std::pair<std::string, std::string>> both(d.both.begin(), d.both.end());
  const auto& a1 = *c.algebra1;
  const auto& a2 = *c.algebra2;
  const std::set<std::pair<std::string, std::string>> want{
      {id(Side::one, 0), id(Side::two, 0)},
      {id(Side::one, eval(a1, "egg_only")), id(Side::two, eval(a2, "huev"))},
      {id(Side::one, eval(a1, "mam_only")), id(Side::two, eval(a2, "mam"))},
      {id(Side::one, eval(a1, "!plat")), id(Side::two, a2.full())},
  };
  EXPECT_EQ(both, want);
}

// The reduced drawing together with both Hasse diagrams must generate
// exactly the cross pairs of the relation.
void expect_reduction_generates(const CrossImplication& r) {
  const Algebra& a1 = r.algebra1();
  const Algebra& a2 = r.algebra2();
  const Dot d = parse_dot(cross_dot(r));
  std::vector<std::string> nodes;
  for (const auto& [n, l] : d.labels) nodes.push_back(n);
  std::map<std::string, std::size_t> at;
  for (std::size_t k = 0; k < nodes.size(); ++k) at[nodes[k]] = k;
  const std::size_t n = nodes.size();
  std::vector<std::vector<bool>> reach(n, std::vector<bool>(n));
  for (std::size_t k = 0; k < n; ++k) reach[k][k] = true;
  for (const auto& [x, y] : d.edges) reach[at[x]][at[y]] = true;
  for (const auto& [x, y] : d.dashed) reach[at[x]][at[y]] = true;
  for (const auto& [x, y] : d.both) reach[at[x]][at[y]] = reach[at[y]][at[x]] = true;
  for (std::size_t k = 0; k < n; ++k) {
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n && reach[i][k]; ++j) {
        if (reach[k][j]) reach[i][j] = true;
      }
    }
  }
  for (std::uint64_t x = 0; x <= a1.full(); ++x) {
    for (std::uint64_t y = 0; y <= a2.full(); ++y) {
      const auto i = at.at(id(Side::one, x));
      const auto j = at.at(id(Side::two, y));
      EXPECT_EQ(reach[i][j], r.implies(Located{Side::one, x}, Located{Side::two, y})) << x << " " << y;
      EXPECT_EQ(reach[j][i], r.implies(Located{Side::two, y}, Located{Side::one, x})) << y << " " << x;
    }
  }
}

TEST(CrossDot, ReductionGeneratesRelation) {
  for (const auto& name : testing::corpus_names()) {
    const auto c = testing::corpus(name);
    SCOPED_TRACE(name);
    expect_reduction_generates(implication_from_translation(*c.translation));
  }
  testing::InstanceGenerator gen(7);
  for (int k = 0; k < 30; ++k) expect_reduction_generates(implication_from_translation(gen.next_consistent()));
}

TEST(CrossDot, FullListsEveryPair) {
  const auto c = testing::corpus("fixed-gap");
  const CrossImplication r = implication_from_translation(*c.translation);
  const std::string reduced = cross_dot(r);
  const std::string full = cross_dot(r, true);
  EXPECT_NE(reduced, full);
  const Dot d = parse_dot(full);
  EXPECT_TRUE(d.both.empty());
  std::size_t want = 0;
  for (std::uint64_t x = 0; x <= c.algebra1->full(); ++x) {
    for (std::uint64_t y = 0; y <= c.algebra2->full(); ++y) {
      want += r.implies(Located{Side::one, x}, Located{Side::two, y});
      want += r.implies(Located{Side::two, y}, Located{Side::one, x});
    }
  }
  EXPECT_EQ(d.dashed.size(), want);
  const auto& a1 = *c.algebra1;
  const auto& a2 = *c.algebra2;
  const std::set<std::pair<std::string, std::string>> got(d.dashed.begin(), d.dashed.end());
  EXPECT_TRUE(got.count({id(Side::two, eval(a2, "c")), id(Side::one, eval(a1, "lam"))}));
  EXPECT_TRUE(got.count({id(Side::one, eval(a1, "lam")), id(Side::two, eval(a2, "b | c"))}));
  EXPECT_FALSE(got.count({id(Side::one, eval(a1, "lam")), id(Side::two, eval(a2, "c"))}));
}

TEST(CrossDot, Deterministic) {
  const auto c = testing::corpus("oil");
  const CrossImplication r = implication_from_translation(*c.translation);
  EXPECT_EQ(cross_dot(r), cross_dot(r));
  EXPECT_EQ(cross_dot(r, true), cross_dot(r, true));
}

TEST(Json, AxiomReportFields) {
  const auto c = testing::corpus("broken-galois");
  const Json j = to_json(check_consistency(*c.translation));
  ASSERT_TRUE(j.is_array());
  bool failed = false;
  for (const auto& v : j) {
    EXPECT_TRUE(v.contains("axiom"));
    EXPECT_TRUE(v.contains("description"));
    const std::string verdict = v.at("verdict");
    EXPECT_TRUE(verdict == "pass" || verdict == "fail");
    if (verdict == "fail") {
      failed = true;
      ASSERT_TRUE(v.contains("witness"));
      for (const auto& it : v["witness"]["items"]) {
        EXPECT_TRUE(it.contains("role"));
        const int lang = it.at("language");
        EXPECT_TRUE(lang == 1 || lang == 2);
        EXPECT_TRUE(it.at("proposition").is_string());
      }
    }
  }
  EXPECT_TRUE(failed);
}

TEST(Json, JointStatesPlatypus) {
  const auto c = testing::corpus("platypus");
  const JointStateSpace js = build_joint_state_space(*c.translation);
  const Json j = to_json(js);
  EXPECT_EQ(j["state_count"], 3);
  ASSERT_EQ(j["states"].size(), 3U);
  EXPECT_EQ(j["states"][2]["atom1"], "plat");
  EXPECT_TRUE(j["states"][2]["atom2"].is_null());
  EXPECT_EQ(j["valuation1"]["scope"], "all propositions");
  EXPECT_EQ(j["valuation1"]["events"].size(), 8U);
  EXPECT_EQ(j["valuation1"]["events"]["plat"], Json::array({2}));
  // The platypus state has no counterpart in language 2.
  EXPECT_EQ(j["valuation2"]["events"]["true"], Json::array({0, 1}));
  EXPECT_EQ(j["valuation1"]["events"]["true"], Json::array({0, 1, 2}));
}

TEST(Json, JointStatesOilListsAtomsOnly) {
  const auto c = testing::corpus("oil");
  const JointStateSpace js = build_joint_state_space(*c.translation);
  const Json j = to_json(js);
  EXPECT_EQ(j["state_count"], js.size());
  EXPECT_EQ(j["valuation1"]["scope"], "atoms");
  EXPECT_EQ(j["valuation1"]["events"].size(), c.algebra1->model_count());
  EXPECT_EQ(j["valuation2"]["events"].size(), c.algebra2->model_count());
}

TEST(Json, CommonLanguageAndAwareness) {
  const auto c = testing::corpus("platypus");
  const CommonLanguage cl = common_language(*c.translation, Side::one);
  const Json j = to_json(cl, *c.algebra1, *c.algebra2);
  EXPECT_EQ(j["host"], 1);
  EXPECT_EQ(j["size"], cl.members.size());
  EXPECT_EQ(j["members"].size(), cl.members.size());
  EXPECT_TRUE(j["checks"].is_array());
  const JointStateSpace js = build_joint_state_space(*c.translation);
  const Json v = to_json(classify_awareness(*c.translation, js));
  EXPECT_EQ(v["classification"], "2-pure-restriction-of-1");
  EXPECT_EQ(v["pairs"].size(), 2U);
  EXPECT_TRUE(v["conditions_agree"].get<bool>());
}

}  // namespace
}  // namespace xlang
