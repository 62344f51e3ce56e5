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

#include "support/instances.hpp"
#include "support/oracles.hpp"
#include "xlang/xlang.hpp"

namespace xlang {
namespace {

using testing::corpus;
using testing::eval;

const Direction k12 = Direction::one_to_two();
const Direction k21 = Direction::two_to_one();

TEST(BruteStates, PlatypusMatchesAtomPairs) {
  const Corpus c = corpus("platypus");
  const CrossImplication r = implication_from_translation(*c.translation);
  const auto brute = brute_states(r);
  EXPECT_EQ(brute.size(), 3U);
  EXPECT_EQ(brute_state_pairs(r), build_joint_state_space(*c.translation).states());
}

TEST(BruteStates, SingleSharedModel) {
  const auto a = testing::algebra("language A\natoms: p\nbelieve: p\n");
  const auto b = testing::algebra("language B\natoms: q\nbelieve: q\n");
  const Translation t = translation_from_atom_outer_indices(a, b, {1}, {1});
  const CrossImplication r = implication_from_translation(t);
  const auto pairs = brute_state_pairs(r);
  ASSERT_EQ(pairs.size(), 1U);
  EXPECT_EQ(pairs[0], (JointState{0, 0}));
}

TEST(BruteStates, Oil) {
  const Corpus c = corpus("oil");
  const CrossImplication r = close_relation(c.algebra1, c.algebra2, *c.seeds);
  auto expected = testing::OilGeometry::states();
  std::sort(expected.begin(), expected.end());
  EXPECT_EQ(brute_state_pairs(r), expected);
}

TEST(BruteStates, MembersAreUpwardClosed) {
  const Corpus c = corpus("fixed-gap");
  const CrossImplication r = implication_from_translation(*c.translation);
  const std::uint64_t n1 = c.algebra1->lattice_size();
  for (const auto& s : brute_states(r)) {
    s.members.for_each([&](std::size_t x) {
      const Located lx = x < n1 ? Located{Side::one, x} : Located{Side::two, x - n1};
      for (std::size_t y = 0; y < s.members.size(); ++y) {
        const Located ly = y < n1 ? Located{Side::one, y} : Located{Side::two, y - n1};
        if (r.implies(lx, ly)) {
          EXPECT_TRUE(s.members.test(y));
        }
      }
    });
  }
}

TEST(BruteStates, Budget) {
  const Corpus c = corpus("oil");
  const CrossImplication r = implication_from_translation(*c.translation);
  EXPECT_THROW(brute_states(r, OracleBudget{8}), BudgetExceededError);
  EXPECT_THROW(brute_states(r, OracleBudget{12, 1000}), BudgetExceededError);
}

TEST(BruteAdjoint, OilInner) {
  const Translation t = *corpus("oil").translation;
  EXPECT_EQ(brute_adjoint(t.table(k12, Mode::outer), t.algebra1(), t.algebra2()), t.table(k21, Mode::inner));
  EXPECT_EQ(brute_adjoint(t.table(k21, Mode::outer), t.algebra2(), t.algebra1()), t.table(k12, Mode::inner));
}

TEST(BruteAdjoint, FixedGapTables) {
  const Translation t = *corpus("fixed-gap").translation;
  const auto inner21 = brute_adjoint(t.table(k12, Mode::outer), t.algebra1(), t.algebra2());
  const Algebra& a1 = t.algebra1();
  const Algebra& a2 = t.algebra2();
  EXPECT_EQ(inner21[eval(a2, "a | b")], eval(a1, "!lam"));
  EXPECT_EQ(inner21[eval(a2, "b | c")], eval(a1, "lam"));
  EXPECT_EQ(inner21[eval(a2, "a | c")], 0U);
  EXPECT_EQ(inner21[eval(a2, "b")], 0U);
  const auto inner12 = brute_adjoint(t.table(k21, Mode::outer), a2, a1);
  EXPECT_EQ(inner12[eval(a1, "lam")], eval(a2, "c"));
  EXPECT_EQ(inner12[eval(a1, "!lam")], eval(a2, "a"));
}

TEST(BruteAdjoint, Identity) {
  const auto a = testing::algebra("language A\natoms: p q\n");
  const auto b = testing::algebra("language B\natoms: p q\n");
  std::vector<std::uint64_t> id(a->lattice_size());
  for (std::uint64_t x = 0; x < id.size(); ++x) id[x] = x;
  EXPECT_EQ(brute_adjoint(id, *a, *b), id);
  EXPECT_THROW(brute_adjoint({0, 1}, *a, *b), InvalidArgumentError);
}

class Extension : public ::testing::Test {
 protected:
  Extension() : c_(corpus("platypus")), r_(implication_from_translation(*c_.translation)) {}

  Bitset up(const std::string& f) const {
    const Algebra& a = *c_.algebra1;
    const std::uint64_t g = eval(a, f);
    Bitset out(a.full() + 1);
    for (std::uint64_t x = 0; x <= a.full(); ++x) {
      if ((g & ~x) == 0) out.set(x);
    }
    return out;
  }
  std::uint64_t huev() const { return eval(*c_.algebra2, "huev"); }

  Corpus c_;
  CrossImplication r_;
};

TEST_F(Extension, PicksTheAtomThatAvoids) {
  const auto u = brute_ultrafilter_extension(r_, Side::one, up("egg_only | plat"), huev());
  ASSERT_TRUE(u.has_value());
  EXPECT_EQ(*u, up("plat"));
}

TEST_F(Extension, UltrafilterIsItsOwnExtension) {
  const auto u = brute_ultrafilter_extension(r_, Side::one, up("plat"), huev());
  ASSERT_TRUE(u.has_value());
  EXPECT_EQ(*u, up("plat"));
}

TEST_F(Extension, NoneWhenAlreadyImplied) {
  EXPECT_FALSE(brute_ultrafilter_extension(r_, Side::one, up("egg_only"), huev()).has_value());
}

TEST_F(Extension, RejectsNonFilters) {
  Bitset not_closed(c_.algebra1->full() + 1);
  not_closed.set(eval(*c_.algebra1, "plat"));
  EXPECT_THROW(brute_ultrafilter_extension(r_, Side::one, not_closed, huev()), InvalidArgumentError);
  EXPECT_THROW(brute_ultrafilter_extension(r_, Side::one, up("false"), huev()), InvalidArgumentError);
}

TEST(OracleAgreement, RandomInstancesWithinBudget) {
  testing::InstanceGenerator gen(23, {6, 8});
  for (int i = 0; i < 40; ++i) {
    const Translation t = gen.next_consistent();
    const CrossImplication r = implication_from_translation(t);
    EXPECT_EQ(brute_state_pairs(r), build_joint_state_space(t).states());
    EXPECT_EQ(brute_adjoint(t.table(k12, Mode::outer), t.algebra1(), t.algebra2()), t.table(k21, Mode::inner));
    EXPECT_EQ(brute_adjoint(t.table(k21, Mode::outer), t.algebra2(), t.algebra1()), t.table(k12, Mode::inner));
  }
}

}  // namespace
}  // namespace xlang
