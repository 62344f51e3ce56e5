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

std::string apply(const Translation& t, Direction d, Mode m, const std::string& formula) {
  const Algebra& src = t.algebra(d.from);
  return t.algebra(d.to).format_index(t.apply(d, m, eval(src, formula)));
}

Translation identity_translation() {
  const auto a = testing::algebra("language A\natoms: p q\n");
  const auto b = testing::algebra("language B\natoms: p q\n");
  std::vector<std::uint64_t> id;
  for (std::size_t k = 0; k < a->model_count(); ++k) id.push_back(std::uint64_t{1} << k);
  return translation_from_atom_outer_indices(a, b, id, id);
}

TEST(Translation, IdentityLanguages) {
  const Translation t = identity_translation();
  for (Direction d : {k12, k21}) {
    for (Mode m : {Mode::inner, Mode::outer}) {
      for (std::uint64_t x = 0; x < t.algebra1().lattice_size(); ++x) EXPECT_EQ(t.apply(d, m, x), x);
    }
  }
  EXPECT_TRUE(check_consistency(t).passed());
  EXPECT_TRUE(check_derived_properties(t).passed());
}

TEST(Translation, OilMatchesGeometry) {
  const Corpus c = corpus("oil");
  const Translation& t = *c.translation;
  using G = testing::OilGeometry;
  for (std::uint64_t x = 0; x < t.algebra1().lattice_size(); ++x) {
    EXPECT_EQ(t.apply(k12, Mode::outer, x), G::outer_to_yuan(x)) << x;
    EXPECT_EQ(t.apply(k12, Mode::inner, x), G::inner_to_yuan(x)) << x;
  }
  for (std::uint64_t y = 0; y < t.algebra2().lattice_size(); ++y) {
    EXPECT_EQ(t.apply(k21, Mode::outer, y), G::outer_to_dollars(y)) << y;
    EXPECT_EQ(t.apply(k21, Mode::inner, y), G::inner_to_dollars(y)) << y;
  }
}

TEST(Translation, OilExamples) {
  const Translation t = *corpus("oil").translation;
  EXPECT_EQ(apply(t, k12, Mode::outer, "lam_70_80"), "eta_400_500 | eta_500_600");
  const std::string span = "eta_500_600 | eta_600_700";
  EXPECT_EQ(apply(t, k21, Mode::inner, span), "lam_80_90 | lam_90_100");
  EXPECT_EQ(apply(t, k21, Mode::outer, span), "lam_70_80 | lam_80_90 | lam_90_100 | lam_100_110");
  const std::string below200 = "eta_neg | eta_0_100 | eta_100_200";
  EXPECT_EQ(apply(t, k21, Mode::inner, below200), "lam_0_10 | lam_10_20 | lam_20_30");
  EXPECT_EQ(apply(t, k21, Mode::outer, below200), "*");
  for (Direction d : {k12, k21}) {
    for (Mode m : {Mode::inner, Mode::outer}) EXPECT_EQ(apply(t, d, m, "false"), "false");
  }
}

TEST(Translation, FixedGapTables) {
  const Translation t = *corpus("fixed-gap").translation;
  EXPECT_EQ(apply(t, k12, Mode::outer, "lam"), "b | c");
  EXPECT_EQ(apply(t, k12, Mode::inner, "lam"), "c");
  EXPECT_EQ(apply(t, k12, Mode::outer, "!lam"), "a | b");
  EXPECT_EQ(apply(t, k12, Mode::inner, "!lam"), "a");
  struct Row {
    const char* eta;
    const char* outer;
    const char* inner;
  };
  for (const Row& r : {Row{"a", "!lam", "false"}, Row{"b", "true", "false"}, Row{"c", "lam", "false"},
                       Row{"a | b", "true", "!lam"}, Row{"a | c", "true", "false"}, Row{"b | c", "true", "lam"}}) {
    EXPECT_EQ(apply(t, k21, Mode::outer, r.eta), r.outer) << r.eta;
    EXPECT_EQ(apply(t, k21, Mode::inner, r.eta), r.inner) << r.eta;
  }
  for (Direction d : {k12, k21}) {
    for (Mode m : {Mode::inner, Mode::outer}) {
      EXPECT_EQ(apply(t, d, m, "true"), "true");
      EXPECT_EQ(apply(t, d, m, "false"), "false");
    }
  }
}

TEST(Translation, FixedGapIsConsistent) {
  const Translation t = *corpus("fixed-gap").translation;
  const AxiomReport r = check_consistency(t);
  EXPECT_TRUE(r.passed("C1"));
  EXPECT_TRUE(r.passed("C2"));
  EXPECT_TRUE(r.passed("C3"));
  EXPECT_TRUE(testing::naive_consistent(t));
}

TEST(Translation, FixedGapInnerPreservesConjunction) {
  const Translation t = *corpus("fixed-gap").translation;
  const Algebra& a2 = t.algebra2();
  const Algebra& a1 = t.algebra1();
  for (std::uint64_t x = 0; x < a2.lattice_size(); ++x) {
    for (std::uint64_t y = 0; y < a2.lattice_size(); ++y) {
      EXPECT_EQ(t.apply(k21, Mode::inner, a2.meet_index(x, y)),
                a1.meet_index(t.apply(k21, Mode::inner, x), t.apply(k21, Mode::inner, y)));
    }
  }
  EXPECT_TRUE(check_derived_properties(t).passed("T4"));
}

TEST(Translation, BrokenGaloisViolatesPairing) {
  const Corpus c = corpus("broken-galois");
  const AxiomReport r = check_galois(*c.translation);
  ASSERT_FALSE(r.passed());
  const Witness& w = *r.find("C1")->witness;
  EXPECT_EQ(w.find("lambda")->text, "a");
  EXPECT_EQ(w.find("eta")->text, "x");
  // x lies under the widened inner image of a, yet its outer image is not below a.
  EXPECT_EQ(w.find("inner(lambda)")->text, "x | z");
  EXPECT_EQ(w.find("outer(eta)")->text, "b");
  EXPECT_FALSE(testing::naive_galois(*c.translation));
}

TEST(Translation, ApproximationViolation) {
  const Translation t = identity_translation();
  const Algebra& a = t.algebra1();
  const std::uint64_t lam = eval(a, "p");
  const Translation bad = t.with_entry(k12, Mode::inner, lam, a.full()).with_entry(k12, Mode::outer, lam, 0);
  const AxiomReport r = check_approximation(bad);
  ASSERT_FALSE(r.passed());
  EXPECT_EQ(r.find("C2")->witness->find("lambda")->index, lam);
}

TEST(Translation, PlatypusRestrictedDuality) {
  const Translation t = *corpus("platypus").translation;
  EXPECT_TRUE(check_restricted_duality(t).passed());
  // inner(!mam) = !outer(mam) & inner(true) = egg_only.
  EXPECT_EQ(apply(t, k21, Mode::inner, "!mam"), "egg_only");
  const Algebra& a1 = t.algebra1();
  EXPECT_EQ(t.apply(k21, Mode::inner, eval(t.algebra2(), "!mam")),
            a1.negate_index(t.apply(k21, Mode::outer, eval(t.algebra2(), "mam"))) &
                t.apply(k21, Mode::inner, t.algebra2().full()));
  EXPECT_EQ(apply(t, k21, Mode::outer, "true"), "egg_only | mam_only");
  EXPECT_EQ(apply(t, k12, Mode::outer, "plat"), "*");
}

TEST(Translation, OilRestrictedDualityAtBelow200) {
  const Translation t = *corpus("oil").translation;
  // !(below 200) lands on [30, 120).
  const std::uint64_t x = eval(t.algebra2(), "!(eta_neg | eta_0_100 | eta_100_200)");
  EXPECT_EQ(t.apply(k21, Mode::inner, x), eval(t.algebra1(), "!(lam_0_10 | lam_10_20 | lam_20_30)"));
}

TEST(Translation, OilApproximableSetIsDownset) {
  const Translation t = *corpus("oil").translation;
  const Algebra& a2 = t.algebra2();
  for (std::uint64_t y = 0; y <= a2.full(); ++y) {
    const bool approximable = !t.algebra1().is_star(t.apply(k21, Mode::outer, y));
    EXPECT_EQ(approximable, (y & 1U) == 0) << y;
  }
  EXPECT_TRUE(check_derived_properties(t).passed());
}

TEST(Translation, InnersAreAdjointsOfOuters) {
  for (const auto& name : testing::corpus_names()) {
    const Translation t = *corpus(name).translation;
    EXPECT_EQ(t.table(k12, Mode::inner), testing::naive_inner(t.table(k21, Mode::outer), t.algebra2(), t.algebra1()))
        << name;
    EXPECT_EQ(t.table(k21, Mode::inner), testing::naive_inner(t.table(k12, Mode::outer), t.algebra1(), t.algebra2()))
        << name;
  }
}

TEST(Translation, ConstructionValidatesTables) {
  const Translation t = identity_translation();
  const AlgebraPtr a = t.algebra_ptr(Side::one), b = t.algebra_ptr(Side::two);
  auto tab = t.table(k12, Mode::inner);
  auto short_tab = tab;
  short_tab.pop_back();
  EXPECT_THROW(Translation(a, b, short_tab, tab, tab, tab), InvalidArgumentError);
  auto bad_star = tab;
  bad_star.back() = 0;
  EXPECT_THROW(Translation(a, b, bad_star, tab, tab, tab), InvalidArgumentError);
  auto out_of_range = tab;
  out_of_range[1] = 99;
  EXPECT_THROW(Translation(a, b, out_of_range, tab, tab, tab), InvalidArgumentError);
  EXPECT_THROW(t.with_entry(k12, Mode::inner, 99, 0), InvalidArgumentError);
}

TEST(Translation, StarPropInterface) {
  const Translation t = *corpus("platypus").translation;
  const Algebra& a1 = t.algebra1();
  const StarProp plat = a1.denote(parse_formula("plat", a1.spec()));
  EXPECT_EQ(translate(t, k12, Mode::outer, plat), t.algebra2().star());
  EXPECT_EQ(translate(t, k12, Mode::inner, plat), t.algebra2().bottom());
  EXPECT_THROW(translate(t, k12, Mode::inner, t.algebra2().top()), AlgebraMismatchError);
}

TEST(Translation, ParallelChecksAgree) {
  testing::InstanceGenerator gen(11);
  for (int i = 0; i < 60; ++i) {
    const Translation t = gen.draw();
    const AxiomReport one = check_consistency(t, CheckOptions{1});
    const AxiomReport four = check_consistency(t, CheckOptions{4});
    ASSERT_EQ(one.verdicts.size(), four.verdicts.size());
    for (std::size_t k = 0; k < one.verdicts.size(); ++k) {
      EXPECT_EQ(one.verdicts[k].passed, four.verdicts[k].passed);
      EXPECT_EQ(one.verdicts[k].witness, four.verdicts[k].witness);
    }
    EXPECT_EQ(one.passed(), testing::naive_consistent(t));
  }
}

}  // namespace
}  // namespace xlang
