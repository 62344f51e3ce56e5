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


#ifndef XLANG_TRANSLATION_HPP
#define XLANG_TRANSLATION_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xlang/algebra.hpp"
#include "xlang/axiom_report.hpp"
#include "xlang/detail/parallel.hpp"
#include "xlang/error.hpp"
#include "xlang/side.hpp"

namespace xlang {

using AlgebraPtr = std::shared_ptr<const Algebra>;

/// Largest model count for which full operator tables are built.
inline constexpr std::size_t kMaxTableModels = 24;

namespace detail {

inline void check_table_size(const Algebra& a) {
  if (a.model_count() > kMaxTableModels) {
    throw CapExceededError("language '" + a.name() + "' has " + std::to_string(a.model_count()) +
                           " models; operator tables support at most " + std::to_string(kMaxTableModels));
  }
}

inline std::size_t slot(Direction d, Mode m) {
  return (d.from == Side::one ? 0U : 2U) + (m == Mode::inner ? 0U : 1U);
}

}  // namespace detail

/// Inner and outer translation maps in both directions, stored as total
/// tables over star-lattice indices.
class Translation {
 public:
  using Table = std::vector<std::uint64_t>;

  Translation(AlgebraPtr a1, AlgebraPtr a2, Table inner12, Table outer12, Table inner21, Table outer21)
      : algebras_{std::move(a1), std::move(a2)},
        tables_{std::move(inner12), std::move(outer12), std::move(inner21), std::move(outer21)} {
    for (Side s : {Side::one, Side::two}) {
      if (!algebras_[static_cast<int>(s)]) throw InvalidArgumentError("translation needs two algebras");
      detail::check_table_size(algebra(s));
    }
    for (Direction d : {Direction::one_to_two(), Direction::two_to_one()}) {
      for (Mode m : {Mode::inner, Mode::outer}) {
        const Table& t = table(d, m);
        const Algebra& src = algebra(d.from);
        const Algebra& dst = algebra(d.to);
        const std::string what = to_string(m) + " " + to_string(d);
        if (t.size() != src.lattice_size()) throw InvalidArgumentError(what + " table is not total");
        for (std::uint64_t v : t) {
          if (v > dst.star_index()) throw InvalidArgumentError(what + " table has an out-of-range value");
        }
        if (!dst.is_star(t[src.star_index()])) throw InvalidArgumentError(what + " does not send * to *");
      }
    }
  }

  const Algebra& algebra(Side s) const { return *algebras_[static_cast<int>(s)]; }
  const AlgebraPtr& algebra_ptr(Side s) const { return algebras_[static_cast<int>(s)]; }
  const Algebra& algebra1() const { return algebra(Side::one); }
  const Algebra& algebra2() const { return algebra(Side::two); }

  const Table& table(Direction d, Mode m) const { return tables_[detail::slot(d, m)]; }
  std::uint64_t apply(Direction d, Mode m, std::uint64_t x) const { return table(d, m)[x]; }

  /// Copy with one table entry replaced. The star entry cannot be changed.
  Translation with_entry(Direction d, Mode m, std::uint64_t x, std::uint64_t value) const {
    Translation copy = *this;
    Table& t = copy.tables_[detail::slot(d, m)];
    if (x >= t.size()) throw InvalidArgumentError("entry outside the source lattice");
    t[x] = value;
    return Translation(copy.algebras_[0], copy.algebras_[1], std::move(copy.tables_[0]), std::move(copy.tables_[1]),
                       std::move(copy.tables_[2]), std::move(copy.tables_[3]));
  }

  /// Same algebras (by name) and identical tables.
  friend bool operator==(const Translation& a, const Translation& b) {
    return a.algebra1().name() == b.algebra1().name() && a.algebra2().name() == b.algebra2().name() &&
           a.tables_ == b.tables_;
  }

 private:
  AlgebraPtr algebras_[2];
  std::vector<Table> tables_;
};

namespace detail {

/// Join-extension of atom images: T(x) = join of T(atom) over atoms below x.
inline Translation::Table outer_from_atoms(const Algebra& src, const Algebra& dst,
                                           const std::vector<std::uint64_t>& images) {
  Translation::Table t(src.lattice_size());
  t[0] = 0;
  for (std::uint64_t x = 1; x <= src.full(); ++x) {
    const auto low = static_cast<std::size_t>(std::countr_zero(x));
    t[x] = dst.join_index(t[x & (x - 1)], images[low]);
  }
  t[src.star_index()] = dst.star_index();
  return t;
}

/// Adjoint of a join-preserving outer map back into `dst`: the join of the
/// atoms of `src` whose outer image lies below x.
inline Translation::Table inner_from_outer_atoms(const Algebra& src, const Algebra& dst,
                                                 const std::vector<std::uint64_t>& src_atom_images) {
  Translation::Table t(dst.lattice_size());
  for (std::uint64_t x = 0; x <= dst.full(); ++x) {
    std::uint64_t acc = 0;
    for (std::size_t b = 0; b < src.model_count(); ++b) {
      if (dst.le(src_atom_images[b], x)) acc |= std::uint64_t{1} << b;
    }
    t[x] = acc;
  }
  t[dst.star_index()] = src.star_index();
  return t;
}

}  // namespace detail

/// Builds a translation from the outer images of atoms: outers are extended
/// by joins and inners are their adjoints. Images are star-lattice indices.
inline Translation translation_from_atom_outer_indices(AlgebraPtr a1, AlgebraPtr a2,
                                                       const std::vector<std::uint64_t>& outer_atoms12,
                                                       const std::vector<std::uint64_t>& outer_atoms21) {
  detail::check_table_size(*a1);
  detail::check_table_size(*a2);
  if (outer_atoms12.size() != a1->model_count() || outer_atoms21.size() != a2->model_count()) {
    throw InvalidArgumentError("atom outer maps must cover every atom");
  }
  for (auto v : outer_atoms12) {
    if (v > a2->star_index()) throw InvalidArgumentError("atom image outside the target lattice");
  }
  for (auto v : outer_atoms21) {
    if (v > a1->star_index()) throw InvalidArgumentError("atom image outside the target lattice");
  }
  auto outer12 = detail::outer_from_atoms(*a1, *a2, outer_atoms12);
  auto outer21 = detail::outer_from_atoms(*a2, *a1, outer_atoms21);
  auto inner12 = detail::inner_from_outer_atoms(*a2, *a1, outer_atoms21);
  auto inner21 = detail::inner_from_outer_atoms(*a1, *a2, outer_atoms12);
  return Translation(std::move(a1), std::move(a2), std::move(inner12), std::move(outer12), std::move(inner21),
                     std::move(outer21));
}

inline Translation translation_from_atom_outers(AlgebraPtr a1, AlgebraPtr a2,
                                                const std::vector<StarProp>& outer_atoms12,
                                                const std::vector<StarProp>& outer_atoms21) {
  std::vector<std::uint64_t> i12, i21;
  for (const auto& p : outer_atoms12) i12.push_back(a2->index(p));
  for (const auto& p : outer_atoms21) i21.push_back(a1->index(p));
  return translation_from_atom_outer_indices(std::move(a1), std::move(a2), i12, i21);
}

inline StarProp translate(const Translation& t, Direction d, Mode m, const StarProp& x) {
  const std::uint64_t i = t.algebra(d.from).index(x);
  return t.algebra(d.to).at(t.apply(d, m, i));
}

namespace detail {

inline WitnessItem item(const Translation& t, std::string role, Side s, std::uint64_t x) {
  return {std::move(role), s, x, t.algebra(s).format_index(x)};
}

inline std::string map_name(Direction d, Mode m) { return to_string(m) + " " + to_string(d); }

}  // namespace detail

/// Adjunction between each inner map and the opposite outer map, over every
/// pair of star-lattice elements.
inline AxiomReport check_galois(const Translation& t, const CheckOptions& opt = {}) {
  AxiomReport report;
  std::optional<Witness> w;
  for (Direction d : {Direction::one_to_two(), Direction::two_to_one()}) {
    const Algebra& ai = t.algebra(d.from);
    const Algebra& aj = t.algebra(d.to);
    const auto& inner = t.table(d, Mode::inner);
    const auto& outer_back = t.table({d.to, d.from}, Mode::outer);
    w = detail::first_hit(ai.lattice_size(), opt.jobs, [&](std::size_t lam) -> std::optional<Witness> {
      for (std::uint64_t eta = 0; eta < aj.lattice_size(); ++eta) {
        const bool lhs = aj.le(eta, inner[lam]);
        const bool rhs = ai.le(outer_back[eta], lam);
        if (lhs != rhs) {
          return Witness{{detail::item(t, "lambda", d.from, lam), detail::item(t, "eta", d.to, eta),
                          detail::item(t, "inner(lambda)", d.to, inner[lam]),
                          detail::item(t, "outer(eta)", d.from, outer_back[eta])},
                         "pairing " + to_string(d)};
        }
      }
      return std::nullopt;
    });
    if (w) break;
  }
  report.add("C1", "inner and opposite outer maps form a Galois connection", std::move(w));
  return report;
}

/// The inner image lies below the outer image.
inline AxiomReport check_approximation(const Translation& t, const CheckOptions& opt = {}) {
  AxiomReport report;
  std::optional<Witness> w;
  for (Direction d : {Direction::one_to_two(), Direction::two_to_one()}) {
    const Algebra& ai = t.algebra(d.from);
    const Algebra& aj = t.algebra(d.to);
    const auto& inner = t.table(d, Mode::inner);
    const auto& outer = t.table(d, Mode::outer);
    w = detail::first_hit(ai.lattice_size(), opt.jobs, [&](std::size_t lam) -> std::optional<Witness> {
      if (aj.le(inner[lam], outer[lam])) return std::nullopt;
      return Witness{{detail::item(t, "lambda", d.from, lam), detail::item(t, "inner(lambda)", d.to, inner[lam]),
                      detail::item(t, "outer(lambda)", d.to, outer[lam])},
                     "direction " + to_string(d)};
    });
    if (w) break;
  }
  report.add("C2", "inner translation implies outer translation", std::move(w));
  return report;
}

/// inner(!x) = !outer(x) & inner(true) whenever outer(x) is not the star.
inline AxiomReport check_restricted_duality(const Translation& t, const CheckOptions& opt = {}) {
  AxiomReport report;
  std::optional<Witness> w;
  for (Direction d : {Direction::one_to_two(), Direction::two_to_one()}) {
    const Algebra& ai = t.algebra(d.from);
    const Algebra& aj = t.algebra(d.to);
    const auto& inner = t.table(d, Mode::inner);
    const auto& outer = t.table(d, Mode::outer);
    const std::uint64_t inner_top = inner[ai.full()];
    w = detail::first_hit(ai.full() + 1, opt.jobs, [&](std::size_t lam) -> std::optional<Witness> {
      if (aj.is_star(outer[lam])) return std::nullopt;
      const std::uint64_t lhs = inner[ai.negate_index(lam)];
      const std::uint64_t rhs = aj.meet_index(aj.negate_index(outer[lam]), inner_top);
      if (lhs == rhs) return std::nullopt;
      return Witness{{detail::item(t, "lambda", d.from, lam), detail::item(t, "inner(!lambda)", d.to, lhs),
                      detail::item(t, "!outer(lambda) & inner(true)", d.to, rhs)},
                     "direction " + to_string(d)};
    });
    if (w) break;
  }
  report.add("C3", "negation is preserved up to the target's awareness", std::move(w));
  return report;
}

/// C1, C2 and C3 in order.
inline AxiomReport check_consistency(const Translation& t, const CheckOptions& opt = {}) {
  AxiomReport r = check_galois(t, opt);
  r.merge(check_approximation(t, opt));
  r.merge(check_restricted_duality(t, opt));
  return r;
}

namespace detail {

template <class PairTest>
std::optional<Witness> scan_pairs(const Translation& t, Direction d, Mode m, bool ordered_only, unsigned jobs,
                                  PairTest&& bad) {
  const Algebra& a = t.algebra(d.from);
  const std::uint64_t n = a.lattice_size();
  return first_hit(n, jobs, [&](std::size_t x) -> std::optional<Witness> {
    if (ordered_only) {
      // Elements above x in increasing order: supersets, then the star.
      if (!a.is_star(x)) {
        for (std::uint64_t y = x;; y = ((y + 1) | x) & a.full()) {
          if (bad(x, y)) {
            return Witness{{item(t, "lambda", d.from, x), item(t, "lambda'", d.from, y)}, map_name(d, m)};
          }
          if (y == a.full()) break;
        }
      }
      const std::uint64_t s = a.star_index();
      if (bad(x, s)) return Witness{{item(t, "lambda", d.from, x), item(t, "lambda'", d.from, s)}, map_name(d, m)};
      return std::nullopt;
    }
    for (std::uint64_t y = 0; y < n; ++y) {
      if (bad(x, y)) {
        return Witness{{item(t, "lambda", d.from, x), item(t, "lambda'", d.from, y)}, map_name(d, m)};
      }
    }
    return std::nullopt;
  });
}

}  // namespace detail

/// Derived properties of the four maps: extremes (T1), concreteness of the
/// inners (T2), monotonicity (T3), conjunction for inners (T4), disjunction
/// for outers (T5), and that each map's approximable set is an ideal.
inline AxiomReport check_derived_properties(const Translation& t, const CheckOptions& opt = {}) {
  AxiomReport report;
  const Direction dirs[] = {Direction::one_to_two(), Direction::two_to_one()};
  const Mode modes[] = {Mode::inner, Mode::outer};

  std::optional<Witness> w;
  for (Direction d : dirs) {
    for (Mode m : modes) {
      if (w) break;
      const auto& tab = t.table(d, m);
      const Algebra& ai = t.algebra(d.from);
      const Algebra& aj = t.algebra(d.to);
      if (tab[0] != 0) {
        w = Witness{{detail::item(t, "lambda", d.from, 0), detail::item(t, "image", d.to, tab[0])},
                    detail::map_name(d, m)};
      } else if (!aj.is_star(tab[ai.star_index()])) {
        w = Witness{{detail::item(t, "lambda", d.from, ai.star_index()),
                     detail::item(t, "image", d.to, tab[ai.star_index()])},
                    detail::map_name(d, m)};
      }
    }
  }
  report.add("T1", "false maps to false and star to star", std::move(w));

  w.reset();
  for (Direction d : dirs) {
    if (w) break;
    const auto& tab = t.table(d, Mode::inner);
    const Algebra& ai = t.algebra(d.from);
    const Algebra& aj = t.algebra(d.to);
    for (std::uint64_t x = 0; x <= ai.full(); ++x) {
      if (aj.is_star(tab[x])) {
        w = Witness{{detail::item(t, "lambda", d.from, x), detail::item(t, "image", d.to, tab[x])},
                    detail::map_name(d, Mode::inner)};
        break;
      }
    }
  }
  report.add("T2", "inner maps send only the star to the star", std::move(w));

  w.reset();
  for (Direction d : dirs) {
    for (Mode m : modes) {
      if (w) break;
      const auto& tab = t.table(d, m);
      const Algebra& aj = t.algebra(d.to);
      w = detail::scan_pairs(t, d, m, true, opt.jobs,
                             [&](std::uint64_t x, std::uint64_t y) { return !aj.le(tab[x], tab[y]); });
    }
  }
  report.add("T3", "all maps preserve implication", std::move(w));

  w.reset();
  for (Direction d : dirs) {
    if (w) break;
    const auto& tab = t.table(d, Mode::inner);
    const Algebra& ai = t.algebra(d.from);
    const Algebra& aj = t.algebra(d.to);
    w = detail::scan_pairs(t, d, Mode::inner, false, opt.jobs, [&](std::uint64_t x, std::uint64_t y) {
      return tab[ai.meet_index(x, y)] != aj.meet_index(tab[x], tab[y]);
    });
  }
  report.add("T4", "inner maps preserve conjunction", std::move(w));

  w.reset();
  for (Direction d : dirs) {
    if (w) break;
    const auto& tab = t.table(d, Mode::outer);
    const Algebra& ai = t.algebra(d.from);
    const Algebra& aj = t.algebra(d.to);
    w = detail::scan_pairs(t, d, Mode::outer, false, opt.jobs, [&](std::uint64_t x, std::uint64_t y) {
      return tab[ai.join_index(x, y)] != aj.join_index(tab[x], tab[y]);
    });
  }
  report.add("T5", "outer maps preserve disjunction", std::move(w));

  // The approximable set {x : T(x) != *} over non-star x must be a downset
  // closed under joins.
  w.reset();
  for (Direction d : dirs) {
    for (Mode m : modes) {
      if (w) break;
      const auto& tab = t.table(d, m);
      const Algebra& ai = t.algebra(d.from);
      const Algebra& aj = t.algebra(d.to);
      auto approx = [&](std::uint64_t x) { return !ai.is_star(x) && !aj.is_star(tab[x]); };
      w = detail::first_hit(ai.full() + 1, opt.jobs, [&](std::size_t x) -> std::optional<Witness> {
        for (std::uint64_t y = 0; y <= ai.full(); ++y) {
          const bool down_bad = approx(x) && (y & ~x) == 0 && !approx(y);
          const bool join_bad = approx(x) && approx(y) && !approx(x | y);
          if (down_bad || join_bad) {
            return Witness{{detail::item(t, "lambda", d.from, x), detail::item(t, "lambda'", d.from, y)},
                           detail::map_name(d, m) + (down_bad ? ": not a downset" : ": not closed under joins")};
          }
        }
        return std::nullopt;
      });
    }
  }
  report.add("ideal", "approximable propositions form an ideal", std::move(w));
  return report;
}

}  // namespace xlang

#endif  // XLANG_TRANSLATION_HPP
