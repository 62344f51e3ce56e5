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


#ifndef XLANG_COMMONALITY_HPP
#define XLANG_COMMONALITY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

#include "xlang/algebra.hpp"
#include "xlang/axiom_report.hpp"
#include "xlang/bitset.hpp"
#include "xlang/error.hpp"
#include "xlang/implication.hpp"
#include "xlang/semantics.hpp"
#include "xlang/side.hpp"
#include "xlang/translation.hpp"

namespace xlang {

/// The four characterizations of exactly translatable propositions of side i,
/// each as a sorted list of model masks.
struct PerfectSets {
  std::vector<std::uint64_t> inner_equals_outer;
  std::vector<std::uint64_t> equivalent_to_other;
  std::vector<std::uint64_t> outer_round_trip;
  std::vector<std::uint64_t> inner_round_trip;
};

inline PerfectSets perfect_translation_sets(const Translation& t, Side i, const CheckOptions& opt = {}) {
  const CrossImplication r = implication_from_translation(t, opt);
  const Side j = other(i);
  const Direction there{i, j};
  const Direction back{j, i};
  const Algebra& ai = t.algebra(i);
  const Algebra& aj = t.algebra(j);
  PerfectSets out;
  for (std::uint64_t lam = 0; lam <= ai.full(); ++lam) {
    if (t.apply(there, Mode::inner, lam) == t.apply(there, Mode::outer, lam)) out.inner_equals_outer.push_back(lam);
    for (std::uint64_t eta = 0; eta <= aj.full(); ++eta) {
      if (r.cross_row(i, lam).test(eta) && r.cross_row(j, eta).test(lam)) {
        out.equivalent_to_other.push_back(lam);
        break;
      }
    }
    if (t.apply(back, Mode::outer, t.apply(there, Mode::outer, lam)) == lam) out.outer_round_trip.push_back(lam);
    if (t.apply(back, Mode::inner, t.apply(there, Mode::inner, lam)) == lam) out.inner_round_trip.push_back(lam);
  }
  return out;
}

/// Propositions of side i whose inner and outer translations coincide. All
/// four characterizations are computed and must agree.
inline std::vector<std::uint64_t> perfect_translations(const Translation& t, Side i, const CheckOptions& opt = {}) {
  PerfectSets s = perfect_translation_sets(t, i, opt);
  if (s.inner_equals_outer != s.equivalent_to_other || s.inner_equals_outer != s.outer_round_trip ||
      s.inner_equals_outer != s.inner_round_trip) {
    throw CharacterizationMismatchError("characterizations of exactly translatable propositions disagree on side " +
                                        std::to_string(number(i)));
  }
  return std::move(s.inner_equals_outer);
}

/// Propositions recovered by both round trips through the other language.
inline std::vector<std::uint64_t> fixed_points(const Translation& t, Side i) {
  const Direction there{i, other(i)};
  const Direction back{other(i), i};
  std::vector<std::uint64_t> out;
  for (std::uint64_t lam = 0; lam <= t.algebra(i).full(); ++lam) {
    const bool a = t.apply(back, Mode::outer, t.apply(there, Mode::inner, lam)) == lam;
    const bool b = t.apply(back, Mode::inner, t.apply(there, Mode::outer, lam)) == lam;
    if (a && b) out.push_back(lam);
  }
  return out;
}

/// The exactly translatable propositions of the host side, each paired with
/// its equivalent in the other language.
struct CommonLanguage {
  Side host = Side::one;
  std::vector<std::uint64_t> members;   // host model masks, ascending
  std::vector<std::uint64_t> partners;  // partner of members[k]
  AxiomReport audit;

  std::optional<std::uint64_t> partner(std::uint64_t member) const {
    for (std::size_t k = 0; k < members.size(); ++k) {
      if (members[k] == member) return partners[k];
    }
    return std::nullopt;
  }
  /// Members that no other nonzero member lies strictly below.
  std::vector<std::uint64_t> atoms() const {
    std::vector<std::uint64_t> out;
    for (auto m : members) {
      if (m == 0) continue;
      bool minimal = true;
      for (auto o : members) {
        if (o != 0 && o != m && (o & ~m) == 0) minimal = false;
      }
      if (minimal) out.push_back(m);
    }
    return out;
  }
};

inline CommonLanguage common_language(const Translation& t, Side host = Side::one, const CheckOptions& opt = {}) {
  CommonLanguage c;
  c.host = host;
  c.members = perfect_translations(t, host, opt);
  if (c.members.size() < 2) {
    throw DegenerateCommonLanguageError("only false translates exactly; there is no common language");
  }
  const Side j = other(host);
  const Direction there{host, j};
  const Algebra& ah = t.algebra(host);
  const Algebra& aj = t.algebra(j);
  for (auto m : c.members) c.partners.push_back(t.apply(there, Mode::outer, m));
  const CrossImplication r = implication_from_translation(t, opt);

  std::unordered_set<std::uint64_t> in(c.members.begin(), c.members.end());
  auto item = [&](std::string role, Side s, std::uint64_t x) {
    return WitnessItem{std::move(role), s, x, t.algebra(s).format_index(x)};
  };
  const std::size_t n = c.members.size();

  std::optional<Witness> w;
  for (std::size_t a = 0; a < n && !w; ++a) {
    for (std::size_t b = 0; b < n && !w; ++b) {
      if (!in.count(c.members[a] & c.members[b])) {
        w = Witness{{item("lambda", host, c.members[a]), item("lambda'", host, c.members[b])}, "conjunction missing"};
      }
    }
  }
  c.audit.add("closed-conjunction", "members are closed under conjunction", std::move(w));

  w.reset();
  for (std::size_t a = 0; a < n && !w; ++a) {
    for (std::size_t b = 0; b < n && !w; ++b) {
      if (!in.count(c.members[b] & ~c.members[a] & ah.full())) {
        w = Witness{{item("lambda", host, c.members[a]), item("lambda'", host, c.members[b])},
                    "relative complement !lambda & lambda' missing"};
      }
    }
  }
  c.audit.add("closed-complement", "members are closed under relative complement", std::move(w));

  w.reset();
  std::uint64_t top = 0;
  for (auto m : c.members) top |= m;
  if (!in.count(0) || top == 0) {
    w = Witness{{item("top", host, top)}, "top and bottom coincide or bottom is missing"};
  }
  c.audit.add("bounds", "top and bottom are distinct", std::move(w));

  w.reset();
  for (std::size_t k = 0; k < n && !w; ++k) {
    const Located x{host, c.members[k]}, y{j, c.partners[k]};
    if (aj.is_star(c.partners[k]) || !r.implies(x, y) || !r.implies(y, x)) {
      w = Witness{{item("lambda", host, c.members[k]), item("partner", j, c.partners[k])}, "not equivalent"};
    }
  }
  c.audit.add("partner", "each member is equivalent to its partner", std::move(w));

  w.reset();
  for (std::size_t a = 0; a < n && !w; ++a) {
    for (std::size_t b = 0; b < n && !w; ++b) {
      const bool lhs = ah.le(c.members[a], c.members[b]);
      const bool rhs = aj.le(c.partners[a], c.partners[b]);
      if (lhs != rhs) {
        w = Witness{{item("lambda", host, c.members[a]), item("lambda'", host, c.members[b])},
                    "partner map does not preserve and reflect implication"};
      }
    }
  }
  std::unordered_set<std::uint64_t> distinct(c.partners.begin(), c.partners.end());
  if (!w && distinct.size() != n) w = Witness{{}, "partner map is not injective"};
  c.audit.add("order", "partner map is an order embedding", std::move(w));
  return c;
}

/// Results of realizing each language as a field of sets over the states.
struct EmbeddingReport {
  /// Empty when only false translates exactly.
  std::optional<CommonLanguage> common;
  AxiomReport checks;
};

inline EmbeddingReport joint_embeddings(const Translation& t, const JointStateSpace& js, const CheckOptions& opt = {}) {
  EmbeddingReport rep;
  try {
    rep.common = common_language(t, Side::one, opt);
  } catch (const DegenerateCommonLanguageError&) {
    rep.common.reset();
  }
  auto item = [&](std::string role, Side s, std::uint64_t x) {
    return WitnessItem{std::move(role), s, x, t.algebra(s).format_index(x)};
  };
  std::vector<Bitset> ev[2];
  for (Side s : {Side::one, Side::two}) ev[static_cast<int>(s)] = detail::all_events(js, s);

  std::optional<Witness> w;
  for (Side s : {Side::one, Side::two}) {
    if (w) break;
    std::unordered_set<Bitset, BitsetHash> seen;
    const auto& e = ev[static_cast<int>(s)];
    for (std::uint64_t x = 0; x < e.size(); ++x) {
      if (!seen.insert(e[x]).second) {
        w = Witness{{item("lambda", s, x)}, "event already taken by another proposition"};
        break;
      }
    }
  }
  rep.checks.add("injective", "each valuation is injective", std::move(w));

  w.reset();
  for (Side s : {Side::one, Side::two}) {
    const auto& e = ev[static_cast<int>(s)];
    w = detail::first_hit(e.size(), opt.jobs, [&](std::size_t x) -> std::optional<Witness> {
      for (std::uint64_t y = 0; y < e.size(); ++y) {
        if (!intersection_equals(e[x], e[y], e[x & y])) {
          return Witness{{item("lambda", s, x), item("lambda'", s, y)}, "event of the conjunction differs"};
        }
      }
      return std::nullopt;
    });
    if (w) break;
  }
  rep.checks.add("conjunction", "valuations preserve conjunction", std::move(w));

  w.reset();
  for (Side s : {Side::one, Side::two}) {
    const auto& e = ev[static_cast<int>(s)];
    const std::uint64_t full = t.algebra(s).full();
    w = detail::first_hit(e.size(), opt.jobs, [&](std::size_t x) -> std::optional<Witness> {
      for (std::uint64_t y = 0; y < e.size(); ++y) {
        if (!difference_equals(e[y], e[x], e[~x & y & full])) {
          return Witness{{item("lambda", s, x), item("lambda'", s, y)}, "event of !lambda & lambda' differs"};
        }
      }
      return std::nullopt;
    });
    if (w) break;
  }
  rep.checks.add("complement", "valuations preserve relative complement", std::move(w));

  // Both legs of the common language land on the same events.
  const CommonLanguage c = rep.common.value_or(CommonLanguage{});
  const Side h = c.host;
  const Side o = other(h);
  w.reset();
  for (std::size_t k = 0; k < c.members.size() && !w; ++k) {
    if (ev[static_cast<int>(h)][c.members[k]] != ev[static_cast<int>(o)][c.partners[k]]) {
      w = Witness{{item("lambda", h, c.members[k]), item("partner", o, c.partners[k])}, "legs disagree"};
    }
  }
  rep.checks.add("legs", "both embeddings of the common language agree", std::move(w));

  // Translating a common proposition and embedding the image gives the same
  // event for the inner and the outer map.
  w.reset();
  for (std::size_t k = 0; k < c.members.size() && !w; ++k) {
    const Bitset& target = ev[static_cast<int>(h)][c.members[k]];
    for (Side s : {h, o}) {
      const std::uint64_t x = s == h ? c.members[k] : c.partners[k];
      const Direction d{s, other(s)};
      for (Mode m : {Mode::inner, Mode::outer}) {
        const std::uint64_t y = t.apply(d, m, x);
        if (t.algebra(d.to).is_star(y) || ev[static_cast<int>(d.to)][y] != target) {
          w = Witness{{item("lambda", s, x), item("image", d.to, y)},
                      detail::map_name(d, m) + " image lands on a different event"};
          break;
        }
      }
      if (w) break;
    }
  }
  rep.checks.add("diagram", "translation commutes with the embeddings", std::move(w));
  return rep;
}

/// Comparative awareness of the two languages on a joint state space.
struct AwarenessVerdict {
  std::string classification;
  std::string summary;
  // Indexed by the less aware side: [0] for "1 than 2", [1] for "2 than 1".
  std::array<bool, 2> less_aware{};
  std::array<bool, 2> pure_coarsening{};
  std::array<bool, 2> pure_restriction{};
  // Per ordered pair, the five equivalent conditions: sigma inclusion, other
  // side is a minimal joint language, side is a common language, sigma
  // inclusion on this space, inner equals outer.
  std::array<std::array<bool, 5>, 2> conditions{};
  bool conditions_agree = true;
  std::vector<std::string> evidence;
};

namespace detail {

/// True when event `e` is a union of atom events of side s within its top.
inline bool in_field(const JointStateSpace& js, Side s, const Bitset& e) {
  Bitset covered(js.size());
  for (std::size_t a = 0; a < js.algebra(s).model_count(); ++a) {
    const Bitset& ae = js.atom_event(s, a);
    if (ae.is_subset_of(e)) {
      covered |= ae;
    } else if (ae.intersects(e)) {
      return false;
    }
  }
  return covered == e;
}

inline bool sigma_subset(const JointStateSpace& js, Side i) {
  for (std::size_t a = 0; a < js.algebra(i).model_count(); ++a) {
    if (!in_field(js, other(i), js.atom_event(i, a))) return false;
  }
  return true;
}

}  // namespace detail

inline AwarenessVerdict classify_awareness(const Translation& t, const JointStateSpace& js,
                                           const CheckOptions& opt = {}) {
  AwarenessVerdict v;
  const Bitset top[2] = {js.valuation(Side::one, t.algebra1().full()), js.valuation(Side::two, t.algebra2().full())};

  // Atoms of the field generated by both languages: states grouped by the
  // atoms they carry.
  std::map<std::pair<std::size_t, std::size_t>, Bitset> classes;
  for (std::size_t k = 0; k < js.size(); ++k) {
    const auto& st = js.states()[k];
    auto key = std::make_pair(st.atom1 ? *st.atom1 : SIZE_MAX, st.atom2 ? *st.atom2 : SIZE_MAX);
    auto [it, fresh] = classes.try_emplace(key, Bitset(js.size()));
    it->second.set(k);
  }

  for (Side i : {Side::one, Side::two}) {
    const int k = static_cast<int>(i);
    const Side j = other(i);
    const bool sub = detail::sigma_subset(js, i);
    v.less_aware[k] = sub;
    v.pure_coarsening[k] = sub && top[0] == top[1];
    bool restriction = true;
    // {E & top_i : E in Sigma_j} equals Sigma_i: compare atom by atom.
    for (std::size_t a = 0; a < t.algebra(j).model_count() && restriction; ++a) {
      const Bitset cut = js.atom_event(j, a) & top[k];
      if (!detail::in_field(js, i, cut)) restriction = false;
    }
    restriction = restriction && sub;
    v.pure_restriction[k] = restriction;

    bool generated = true;
    for (const auto& [key, cls] : classes) {
      if (!detail::in_field(js, j, cls)) generated = false;
    }
    bool inner_outer = true;
    const Direction d{i, j};
    for (std::uint64_t lam = 0; lam <= t.algebra(i).full(); ++lam) {
      if (t.apply(d, Mode::inner, lam) != t.apply(d, Mode::outer, lam)) {
        inner_outer = false;
        break;
      }
    }
    const auto perfect = perfect_translations(t, i, opt);
    const bool common = perfect.size() == t.algebra(i).full() + 1;
    v.conditions[k] = {sub, generated, common, sub, inner_outer};
    for (bool c : v.conditions[k]) {
      if (c != sub) v.conditions_agree = false;
    }
    v.evidence.push_back("sigma " + std::to_string(number(i)) + (sub ? " is" : " is not") + " contained in sigma " +
                         std::to_string(number(j)));
    if (sub) {
      v.evidence.push_back(std::string("events of true ") + (top[0] == top[1] ? "coincide" : "differ"));
    }
  }

  if (v.less_aware[0] && v.less_aware[1]) {
    v.classification = "equal";
    v.summary = "languages 1 and 2 are equally aware";
  } else {
    v.classification = "incomparable";
    v.summary = "languages 1 and 2 are incomparable in awareness";
    for (Side i : {Side::one, Side::two}) {
      const int k = static_cast<int>(i);
      if (!v.less_aware[k]) continue;
      const std::string a = std::to_string(number(i));
      const std::string b = std::to_string(number(other(i)));
      v.summary = "language " + a + " less aware than language " + b;
      if (v.pure_coarsening[k]) {
        v.classification = a + "-pure-coarsening-of-" + b;
        v.summary += " (pure coarsening)";
      } else if (v.pure_restriction[k]) {
        v.classification = a + "-pure-restriction-of-" + b;
        v.summary += " (pure restriction)";
      } else {
        v.classification = a + "-less-aware-than-" + b;
      }
    }
  }
  return v;
}

}  // namespace xlang

#endif  // XLANG_COMMONALITY_HPP
