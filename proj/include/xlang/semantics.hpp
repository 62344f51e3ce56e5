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


#ifndef XLANG_SEMANTICS_HPP
#define XLANG_SEMANTICS_HPP

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "xlang/algebra.hpp"
#include "xlang/axiom_report.hpp"
#include "xlang/bitset.hpp"
#include "xlang/error.hpp"
#include "xlang/implication.hpp"
#include "xlang/side.hpp"
#include "xlang/translation.hpp"

namespace xlang {

/// A state names at most one atom (model index) of each language.
struct JointState {
  std::optional<std::size_t> atom1;
  std::optional<std::size_t> atom2;

  const std::optional<std::size_t>& atom(Side s) const { return s == Side::one ? atom1 : atom2; }

  friend bool operator==(const JointState&, const JointState&) = default;
  /// Lexicographic in (atom1, atom2) with an absent atom ordered last.
  friend bool operator<(const JointState& a, const JointState& b) {
    auto key = [](const std::optional<std::size_t>& x) { return x ? *x : SIZE_MAX; };
    if (key(a.atom1) != key(b.atom1)) return key(a.atom1) < key(b.atom1);
    return key(a.atom2) < key(b.atom2);
  }
};

/// A set of states, or the star event.
struct Event {
  bool star = false;
  Bitset set;

  static Event star_event(std::size_t n) { return {true, Bitset(n)}; }
  friend bool operator==(const Event& a, const Event& b) {
    return a.star == b.star && (a.star || a.set == b.set);
  }
};

/// States together with, for each language, the set of states each of its
/// atoms holds in. A proposition's event is the union over its atoms.
class JointStateSpace {
 public:
  JointStateSpace(AlgebraPtr a1, AlgebraPtr a2, std::vector<JointState> states, std::vector<Bitset> atom_events1,
                  std::vector<Bitset> atom_events2)
      : algebras_{std::move(a1), std::move(a2)},
        states_(std::move(states)),
        atom_events_{std::move(atom_events1), std::move(atom_events2)} {
    for (Side s : {Side::one, Side::two}) {
      const auto& ev = atom_events_[static_cast<int>(s)];
      if (ev.size() != algebra(s).model_count()) throw InvalidArgumentError("one event per atom is required");
      Bitset seen(states_.size());
      for (const auto& e : ev) {
        if (e.size() != states_.size()) throw InvalidArgumentError("atom event has the wrong width");
        if (e.none()) throw InvalidArgumentError("atom event is empty, so the valuation is not injective");
        if (e.intersects(seen)) throw InvalidArgumentError("atom events overlap");
        seen |= e;
      }
    }
  }

  const Algebra& algebra(Side s) const { return *algebras_[static_cast<int>(s)]; }
  const AlgebraPtr& algebra_ptr(Side s) const { return algebras_[static_cast<int>(s)]; }
  const std::vector<JointState>& states() const { return states_; }
  std::size_t size() const { return states_.size(); }
  const Bitset& atom_event(Side s, std::size_t atom) const { return atom_events_[static_cast<int>(s)][atom]; }

  /// Event of a non-star proposition (a model mask).
  Bitset valuation(Side s, std::uint64_t x) const {
    const Algebra& a = algebra(s);
    if (a.is_star(x)) throw InvalidArgumentError("the star has no event; use event()");
    Bitset out(states_.size());
    for (std::size_t k = 0; k < a.model_count(); ++k) {
      if ((x >> k) & 1U) out |= atom_event(s, k);
    }
    return out;
  }
  Event event(Side s, std::uint64_t x) const {
    if (algebra(s).is_star(x)) return Event::star_event(states_.size());
    return {false, valuation(s, x)};
  }

  /// True when states are distinct and each carries at least one atom.
  bool minimal() const {
    for (std::size_t k = 0; k + 1 < states_.size(); ++k) {
      if (states_[k] == states_[k + 1]) return false;
    }
    Bitset covered(states_.size());
    for (const auto& evs : atom_events_) {
      for (const auto& e : evs) covered |= e;
    }
    return covered.count() == states_.size();
  }

 private:
  AlgebraPtr algebras_[2];
  std::vector<JointState> states_;
  std::vector<Bitset> atom_events_[2];
};

namespace detail {

inline JointStateSpace space_from_states(AlgebraPtr a1, AlgebraPtr a2, std::vector<JointState> states) {
  std::sort(states.begin(), states.end());
  std::vector<Bitset> ev1(a1->model_count(), Bitset(states.size()));
  std::vector<Bitset> ev2(a2->model_count(), Bitset(states.size()));
  for (std::size_t k = 0; k < states.size(); ++k) {
    if (states[k].atom1) ev1[*states[k].atom1].set(k);
    if (states[k].atom2) ev2[*states[k].atom2].set(k);
  }
  return JointStateSpace(std::move(a1), std::move(a2), std::move(states), std::move(ev1), std::move(ev2));
}

}  // namespace detail

/// States are atom pairs compatible under both outer maps, plus one-sided
/// states for atoms whose outer image is the star.
inline JointStateSpace build_joint_state_space(const Translation& t, const CheckOptions& opt = {}) {
  const AxiomReport rep = check_consistency(t, opt);
  if (const AxiomVerdict* bad = rep.first_failure()) {
    throw InconsistentInputError("translation fails " + bad->axiom + "; no joint state space exists");
  }
  const Algebra& a1 = t.algebra1();
  const Algebra& a2 = t.algebra2();
  const auto& out12 = t.table(Direction::one_to_two(), Mode::outer);
  const auto& out21 = t.table(Direction::two_to_one(), Mode::outer);
  std::vector<JointState> states;
  for (std::size_t x = 0; x < a1.model_count(); ++x) {
    const std::uint64_t ax = std::uint64_t{1} << x;
    for (std::size_t y = 0; y < a2.model_count(); ++y) {
      const std::uint64_t ay = std::uint64_t{1} << y;
      if (a2.le(ay, out12[ax]) && a1.le(ax, out21[ay])) states.push_back({x, y});
    }
    if (a2.is_star(out12[ax])) states.push_back({x, std::nullopt});
  }
  for (std::size_t y = 0; y < a2.model_count(); ++y) {
    if (a1.is_star(out21[std::uint64_t{1} << y])) states.push_back({std::nullopt, y});
  }
  return detail::space_from_states(t.algebra_ptr(Side::one), t.algebra_ptr(Side::two), std::move(states));
}

inline JointStateSpace build_joint_state_space(const CrossImplication& r, const CheckOptions& opt = {}) {
  return build_joint_state_space(translation_from_implication(r, opt), opt);
}

namespace detail {

inline std::vector<Bitset> all_events(const JointStateSpace& j, Side s) {
  std::vector<Bitset> out;
  out.reserve(j.algebra(s).full() + 1);
  for (std::uint64_t f = 0; f <= j.algebra(s).full(); ++f) out.push_back(j.valuation(s, f));
  return out;
}

/// Approximation of `e` by the non-star events `field` of one language.
inline Event approximate_in(const std::vector<Bitset>& field, std::size_t n, Mode m, const Event& e) {
  if (e.star) return Event::star_event(n);
  Bitset acc(n);
  if (m == Mode::inner) {
    for (const auto& ev : field) {
      if (ev.is_subset_of(e.set)) acc |= ev;
    }
    return {false, acc};
  }
  bool any = false;
  for (const auto& ev : field) {
    if (!e.set.is_subset_of(ev)) continue;
    if (!any) {
      acc = ev;
      any = true;
    } else {
      acc &= ev;
    }
  }
  if (!any) return Event::star_event(n);
  return {false, acc};
}

}  // namespace detail

/// Inner or outer approximation of an arbitrary state set by the events of
/// language `target`: the union of its events inside E, or the intersection
/// of its events containing E (the star if there is none).
inline Event approximate(const JointStateSpace& j, Side target, Mode m, const Event& e) {
  return detail::approximate_in(detail::all_events(j, target), j.size(), m, e);
}

/// The approximation maps restricted to events of the source languages,
/// tabulated by source proposition index.
class SemanticTranslation {
 public:
  explicit SemanticTranslation(const JointStateSpace& j) {
    for (Direction d : {Direction::one_to_two(), Direction::two_to_one()}) {
      const Algebra& src = j.algebra(d.from);
      const std::vector<Bitset> field = detail::all_events(j, d.to);
      for (Mode m : {Mode::inner, Mode::outer}) {
        auto& tab = tables_[slot(d, m)];
        tab.reserve(src.lattice_size());
        for (std::uint64_t x = 0; x < src.lattice_size(); ++x) {
          tab.push_back(detail::approximate_in(field, j.size(), m, j.event(d.from, x)));
        }
      }
    }
  }

  /// Approximation of the event of source proposition x.
  const Event& apply(Direction d, Mode m, std::uint64_t x) const { return tables_[slot(d, m)][x]; }

 private:
  static std::size_t slot(Direction d, Mode m) {
    return (d.from == Side::one ? 0U : 2U) + (m == Mode::inner ? 0U : 1U);
  }
  std::vector<Event> tables_[4];
};

inline SemanticTranslation sigma_approximation(const JointStateSpace& j) {
  const std::uint64_t work = j.algebra(Side::one).lattice_size() * j.algebra(Side::two).lattice_size();
  if (work > (std::uint64_t{1} << 26)) throw CapExceededError("event approximation table too large");
  return SemanticTranslation(j);
}

/// Checks that a joint state space represents a translation: (V1) implication
/// matches event inclusion, (V2) approximating the event of x gives the
/// event of T(x), and (V3) T(x) is recovered by pulling the approximation
/// back through the target valuation.
inline AxiomReport verify_representation(const Translation& t, const JointStateSpace& j,
                                         const CheckOptions& opt = {}) {
  const CrossImplication r = implication_from_translation(t, opt);
  const SemanticTranslation v = sigma_approximation(j);
  AxiomReport report;

  std::vector<Event> events[2];
  std::unordered_map<Bitset, std::uint64_t, BitsetHash> preimage[2];
  for (Side s : {Side::one, Side::two}) {
    const Algebra& a = j.algebra(s);
    for (std::uint64_t x = 0; x < a.lattice_size(); ++x) {
      events[static_cast<int>(s)].push_back(j.event(s, x));
      if (!a.is_star(x)) preimage[static_cast<int>(s)].emplace(events[static_cast<int>(s)].back().set, x);
    }
  }
  auto contains = [](const Event& big, const Event& small) {
    if (big.star) return true;
    if (small.star) return false;
    return small.set.is_subset_of(big.set);
  };
  auto item = [&](std::string role, Side s, std::uint64_t x) {
    return WitnessItem{std::move(role), s, x, j.algebra(s).format_index(x)};
  };

  std::optional<Witness> w;
  for (Side si : {Side::one, Side::two}) {
    for (Side sj : {Side::one, Side::two}) {
      if (w) break;
      const auto& ei = events[static_cast<int>(si)];
      const auto& ej = events[static_cast<int>(sj)];
      w = detail::first_hit(ei.size(), opt.jobs, [&](std::size_t x) -> std::optional<Witness> {
        for (std::uint64_t y = 0; y < ej.size(); ++y) {
          if (r.implies(Located{si, x}, Located{sj, y}) != contains(ej[y], ei[x])) {
            return Witness{{item("x", si, x), item("y", sj, y)}, "implication and event inclusion disagree"};
          }
        }
        return std::nullopt;
      });
    }
  }
  report.add("V1", "implication matches inclusion of events", std::move(w));

  w.reset();
  for (Direction d : {Direction::one_to_two(), Direction::two_to_one()}) {
    for (Mode m : {Mode::inner, Mode::outer}) {
      if (w) break;
      const Algebra& src = j.algebra(d.from);
      for (std::uint64_t x = 0; x < src.lattice_size() && !w; ++x) {
        const std::uint64_t image = t.apply(d, m, x);
        if (!(v.apply(d, m, x) == events[static_cast<int>(d.to)][image])) {
          w = Witness{{item("lambda", d.from, x), item("T(lambda)", d.to, image)},
                      detail::map_name(d, m) + ": approximation differs from the event of the image"};
        }
      }
    }
  }
  report.add("V2", "event approximation equals the event of the translation", std::move(w));

  w.reset();
  for (Direction d : {Direction::one_to_two(), Direction::two_to_one()}) {
    for (Mode m : {Mode::inner, Mode::outer}) {
      if (w) break;
      const Algebra& src = j.algebra(d.from);
      const Algebra& dst = j.algebra(d.to);
      for (std::uint64_t x = 0; x < src.lattice_size() && !w; ++x) {
        const Event& e = v.apply(d, m, x);
        std::optional<std::uint64_t> back;
        if (e.star) {
          back = dst.star_index();
        } else if (auto it = preimage[static_cast<int>(d.to)].find(e.set); it != preimage[static_cast<int>(d.to)].end()) {
          back = it->second;
        }
        const std::uint64_t image = t.apply(d, m, x);
        if (!back || *back != image) {
          w = Witness{{item("lambda", d.from, x), item("T(lambda)", d.to, image)},
                      detail::map_name(d, m) + (back ? ": pulled-back approximation differs"
                                                        : ": approximation is not an event of the target")};
        }
      }
    }
  }
  report.add("V3", "translation equals the pulled-back event approximation", std::move(w));
  return report;
}

struct Interval {
  double lo = 0;
  double hi = 0;
};

namespace detail {

inline void check_distribution(const JointStateSpace& j, const std::vector<double>& p) {
  if (p.size() != j.size()) throw InvalidArgumentError("probability vector must have one weight per state");
  double total = 0;
  for (double w : p) {
    if (!std::isfinite(w) || w < 0) throw InvalidArgumentError("probabilities must be finite and non-negative");
    total += w;
  }
  if (std::abs(total - 1.0) > 1e-9) throw InvalidArgumentError("probabilities must sum to 1");
}

inline double mass(const std::vector<double>& p, const Bitset& b) {
  double s = 0;
  b.for_each([&](std::size_t k) { s += p[k]; });
  return s;
}

inline Interval bounds_of(const std::vector<double>& p, const Event& lo, const Event& hi) {
  return {lo.star ? 1.0 : mass(p, lo.set), hi.star ? 1.0 : mass(p, hi.set)};
}

}  // namespace detail

/// Lower and upper probability of proposition x of language `side` as seen
/// through language `target`: p(inner event) and p(outer event), with 1 for
/// a star outer. The star itself gets [1, 1].
inline Interval probability_bounds(const JointStateSpace& j, const std::vector<double>& p, Side side,
                                   std::uint64_t x, Side target) {
  detail::check_distribution(j, p);
  if (j.algebra(side).is_star(x)) return {1.0, 1.0};
  const Event e = j.event(side, x);
  const std::vector<Bitset> field = detail::all_events(j, target);
  return detail::bounds_of(p, detail::approximate_in(field, j.size(), Mode::inner, e),
                           detail::approximate_in(field, j.size(), Mode::outer, e));
}

inline Interval probability_bounds(const JointStateSpace& j, const std::vector<double>& p, Side side,
                                   const StarProp& x, Side target) {
  return probability_bounds(j, p, side, j.algebra(side).index(x), target);
}

/// Same bounds from precomputed approximation tables.
inline Interval probability_bounds(const JointStateSpace& j, const SemanticTranslation& v,
                                   const std::vector<double>& p, Side side, std::uint64_t x, Side target) {
  detail::check_distribution(j, p);
  if (j.algebra(side).is_star(x)) return {1.0, 1.0};
  if (side == target) {
    const double q = detail::mass(p, j.valuation(side, x));
    return {q, q};
  }
  const Direction d{side, target};
  return detail::bounds_of(p, v.apply(d, Mode::inner, x), v.apply(d, Mode::outer, x));
}

}  // namespace xlang

#endif  // XLANG_SEMANTICS_HPP
