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


#ifndef XLANG_IMPLICATION_HPP
#define XLANG_IMPLICATION_HPP

#include <algorithm>
#include <cstdint>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "xlang/algebra.hpp"
#include "xlang/axiom_report.hpp"
#include "xlang/bitset.hpp"
#include "xlang/detail/parallel.hpp"
#include "xlang/error.hpp"
#include "xlang/side.hpp"
#include "xlang/translation.hpp"

namespace xlang {

/// Total number of star-lattice elements the relation machinery accepts.
inline constexpr std::uint64_t kMaxRelationNodes = std::uint64_t{1} << 14;

/// An element of one of the two star-lattices.
struct Located {
  Side side = Side::one;
  std::uint64_t index = 0;

  friend bool operator==(const Located&, const Located&) = default;
  friend bool operator<(const Located& a, const Located& b) {
    return std::tie(a.side, a.index) < std::tie(b.side, b.index);
  }
};

/// A generating pair `from => to` of a cross implication.
struct Seed {
  Located from;
  Located to;
};

/// A within-language pair present in the relation but not implied by the
/// language's own order.
struct ExtraPair {
  Side side = Side::one;
  std::uint64_t from = 0;
  std::uint64_t to = 0;

  friend bool operator==(const ExtraPair&, const ExtraPair&) = default;
  friend bool operator<(const ExtraPair& a, const ExtraPair& b) {
    return std::tie(a.side, a.from, a.to) < std::tie(b.side, b.from, b.to);
  }
};

/// Implication across two languages. Pairs inside one language come from
/// that language's order, plus any recorded extras; cross pairs are stored
/// as one bit row per source element.
class CrossImplication {
 public:
  CrossImplication(AlgebraPtr a1, AlgebraPtr a2, std::vector<Bitset> rows12, std::vector<Bitset> rows21,
                   std::vector<ExtraPair> extras = {})
      : algebras_{std::move(a1), std::move(a2)}, rows_{std::move(rows12), std::move(rows21)},
        extras_(std::move(extras)) {
    check_size(algebra1(), algebra2());
    for (Side s : {Side::one, Side::two}) {
      const auto& rows = rows_[static_cast<int>(s)];
      if (rows.size() != algebra(s).lattice_size()) throw InvalidArgumentError("cross rows are not total");
      for (const auto& r : rows) {
        if (r.size() != algebra(other(s)).lattice_size()) throw InvalidArgumentError("cross row has wrong width");
      }
    }
    std::sort(extras_.begin(), extras_.end());
    extras_.erase(std::unique(extras_.begin(), extras_.end()), extras_.end());
  }

  static void check_size(const Algebra& a1, const Algebra& a2) {
    if (a1.model_count() > 20 || a2.model_count() > 20 ||
        a1.lattice_size() + a2.lattice_size() > kMaxRelationNodes) {
      throw CapExceededError("cross implication over '" + a1.name() + "' and '" + a2.name() +
                             "' exceeds the relation size limit");
    }
  }

  const Algebra& algebra(Side s) const { return *algebras_[static_cast<int>(s)]; }
  const AlgebraPtr& algebra_ptr(Side s) const { return algebras_[static_cast<int>(s)]; }
  const Algebra& algebra1() const { return algebra(Side::one); }
  const Algebra& algebra2() const { return algebra(Side::two); }

  /// Elements of the other language implied by x.
  const Bitset& cross_row(Side from, std::uint64_t x) const { return rows_[static_cast<int>(from)][x]; }
  const std::vector<ExtraPair>& extras() const { return extras_; }

  bool implies(const Located& x, const Located& y) const {
    if (x.side != y.side) return cross_row(x.side, x.index).test(y.index);
    if (algebra(x.side).le(x.index, y.index)) return true;
    return std::binary_search(extras_.begin(), extras_.end(), ExtraPair{x.side, x.index, y.index});
  }
  bool implies(const StarProp& x, Side sx, const StarProp& y, Side sy) const {
    return implies(Located{sx, algebra(sx).index(x)}, Located{sy, algebra(sy).index(y)});
  }

  std::size_t cross_pair_count() const {
    std::size_t n = 0;
    for (const auto& rows : rows_) {
      for (const auto& r : rows) n += r.count();
    }
    return n;
  }

  std::string format(const Located& x) const {
    return std::to_string(number(x.side)) + "." + algebra(x.side).format_index(x.index);
  }

  friend bool operator==(const CrossImplication& a, const CrossImplication& b) {
    return a.algebra1().name() == b.algebra1().name() && a.algebra2().name() == b.algebra2().name() &&
           a.rows_[0] == b.rows_[0] && a.rows_[1] == b.rows_[1] && a.extras_ == b.extras_;
  }

 private:
  AlgebraPtr algebras_[2];
  std::vector<Bitset> rows_[2];
  std::vector<ExtraPair> extras_;
};

namespace detail {

/// Marks every y >= x in the star-lattice of `a`, offset by `base`.
inline void mark_up(const Algebra& a, std::uint64_t x, std::size_t base, Bitset& row) {
  if (!a.is_star(x)) {
    for (std::uint64_t y = x;; y = ((y + 1) | x) & a.full()) {
      row.set(base + y);
      if (y == a.full()) break;
    }
  }
  row.set(base + a.star_index());
}

}  // namespace detail

/// Least transitive relation containing both language orders, the seeds and
/// the bound pairs f1<=>f2 and *1<=>*2.
inline CrossImplication close_relation(AlgebraPtr a1, AlgebraPtr a2, const std::vector<Seed>& seeds) {
  CrossImplication::check_size(*a1, *a2);
  const std::size_t n1 = a1->lattice_size();
  const std::size_t n2 = a2->lattice_size();
  const std::size_t n = n1 + n2;
  auto node = [&](const Located& x) -> std::size_t {
    const Algebra& a = x.side == Side::one ? *a1 : *a2;
    if (x.index > a.star_index()) throw InvalidArgumentError("seed endpoint outside its lattice");
    return (x.side == Side::one ? 0 : n1) + x.index;
  };

  std::vector<Bitset> rows(n, Bitset(n));
  for (std::uint64_t x = 0; x < n1; ++x) detail::mark_up(*a1, x, 0, rows[x]);
  for (std::uint64_t x = 0; x < n2; ++x) detail::mark_up(*a2, x, n1, rows[n1 + x]);
  for (const auto& s : seeds) rows[node(s.from)].set(node(s.to));
  rows[0].set(n1);
  rows[n1].set(0);
  rows[a1->star_index()].set(n1 + a2->star_index());
  rows[n1 + a2->star_index()].set(a1->star_index());

  for (std::size_t k = 0; k < n; ++k) {
    const Bitset& rk = rows[k];
    for (std::size_t i = 0; i < n; ++i) {
      if (i != k && rows[i].test(k)) rows[i] |= rk;
    }
  }

  std::vector<Bitset> rows12(n1, Bitset(n2));
  std::vector<Bitset> rows21(n2, Bitset(n1));
  std::vector<ExtraPair> extras;
  for (std::size_t x = 0; x < n1; ++x) {
    rows[x].for_each([&](std::size_t y) {
      if (y >= n1) {
        rows12[x].set(y - n1);
      } else if (!a1->le(x, y)) {
        extras.push_back({Side::one, x, y});
      }
    });
  }
  for (std::size_t x = 0; x < n2; ++x) {
    rows[n1 + x].for_each([&](std::size_t y) {
      if (y < n1) {
        rows21[x].set(y);
      } else if (!a2->le(x, y - n1)) {
        extras.push_back({Side::two, x, y - n1});
      }
    });
  }
  return CrossImplication(std::move(a1), std::move(a2), std::move(rows12), std::move(rows21), std::move(extras));
}

namespace detail {

inline WitnessItem item(const CrossImplication& r, std::string role, Side s, std::uint64_t x) {
  return {std::move(role), s, x, r.algebra(s).format_index(x)};
}

/// All elements implied by x over the disjoint union (side one first).
inline Bitset full_row(const CrossImplication& r, const Located& x) {
  const std::size_t n1 = r.algebra1().lattice_size();
  const std::size_t n = n1 + r.algebra2().lattice_size();
  Bitset row(n);
  const std::size_t own = x.side == Side::one ? 0 : n1;
  const std::size_t cross = x.side == Side::one ? n1 : 0;
  mark_up(r.algebra(x.side), x.index, own, row);
  for (const auto& e : r.extras()) {
    if (e.side == x.side && e.from == x.index) row.set(own + e.to);
  }
  r.cross_row(x.side, x.index).for_each([&](std::size_t y) { row.set(cross + y); });
  return row;
}

inline Located located_of(const CrossImplication& r, std::size_t node) {
  const std::size_t n1 = r.algebra1().lattice_size();
  return node < n1 ? Located{Side::one, node} : Located{Side::two, node - n1};
}

}  // namespace detail

/// Checks I1 to I5. I4 is decided exactly through the set of elements
/// implied by (or implying) each proposition; see the inline notes.
inline AxiomReport check_implication_axioms(const CrossImplication& r, const CheckOptions& opt = {}) {
  AxiomReport report;

  // I1: the relation restricted to one language is that language's order.
  std::optional<Witness> w;
  if (!r.extras().empty()) {
    const ExtraPair& e = r.extras().front();
    w = Witness{{detail::item(r, "lambda", e.side, e.from), detail::item(r, "lambda'", e.side, e.to)},
                "implied across languages but not within language " + std::to_string(number(e.side))};
  }
  report.add("I1", "the relation extends each language's implication", std::move(w));

  // I2: transitivity over the disjoint union.
  {
    const std::size_t n1 = r.algebra1().lattice_size();
    const std::size_t n = n1 + r.algebra2().lattice_size();
    std::vector<Bitset> rows;
    rows.reserve(n);
    for (std::size_t v = 0; v < n; ++v) rows.push_back(detail::full_row(r, detail::located_of(r, v)));
    w = detail::first_hit(n, opt.jobs, [&](std::size_t x) -> std::optional<Witness> {
      std::optional<Witness> hit;
      for (std::size_t y = rows[x].first(); y != Bitset::npos && !hit; y = rows[x].next(y + 1)) {
        const std::size_t z = rows[y].first_not_in(rows[x]);
        if (z == Bitset::npos) continue;
        const Located lx = detail::located_of(r, x), ly = detail::located_of(r, y), lz = detail::located_of(r, z);
        hit = Witness{{detail::item(r, "x", lx.side, lx.index), detail::item(r, "y", ly.side, ly.index),
                       detail::item(r, "z", lz.side, lz.index)},
                      "x => y and y => z but not x => z"};
      }
      return hit;
    });
  }
  report.add("I2", "the relation is transitive", std::move(w));

  // I3: bound pairs.
  w.reset();
  for (Side s : {Side::one, Side::two}) {
    const Side o = other(s);
    const Algebra& as = r.algebra(s);
    const Algebra& ao = r.algebra(o);
    if (!r.cross_row(s, 0).test(0)) {
      w = Witness{{detail::item(r, "from", s, 0), detail::item(r, "to", o, 0)}, "missing bound pair"};
      break;
    }
    if (!r.cross_row(s, as.star_index()).test(ao.star_index())) {
      w = Witness{{detail::item(r, "from", s, as.star_index()), detail::item(r, "to", o, ao.star_index())},
                  "missing bound pair"};
      break;
    }
  }
  report.add("I3", "false and star are matched across languages", std::move(w));

  // I4: for lambda in side i and nonempty H in side j (star excluded),
  // lambda => every member of H must give lambda => meet(H), and dually for
  // joins. With U = {eta : lambda => eta}, this holds for every H iff U is
  // closed under binary meets. When U is upward closed that reduces to
  // meet(U) lying in U; otherwise the pairs are scanned directly.
  w.reset();
  for (Side si : {Side::one, Side::two}) {
    if (w) break;
    const Side sj = other(si);
    const Algebra& ai = r.algebra(si);
    const Algebra& aj = r.algebra(sj);
    w = detail::first_hit(ai.full() + 1, opt.jobs, [&](std::size_t lam) -> std::optional<Witness> {
      Bitset up(aj.full() + 1);
      Bitset down(aj.full() + 1);
      const Bitset& row = r.cross_row(si, lam);
      for (std::uint64_t eta = 0; eta <= aj.full(); ++eta) {
        if (row.test(eta)) up.set(eta);
        if (r.cross_row(sj, eta).test(lam)) down.set(eta);
      }
      auto closed_check = [&](const Bitset& set, bool meets) -> std::optional<Witness> {
        if (set.none()) return std::nullopt;
        bool monotone = true;
        std::uint64_t bound = meets ? aj.full() : 0;
        set.for_each([&](std::size_t eta) {
          bound = meets ? (bound & eta) : (bound | eta);
          for (std::size_t k = 0; k < aj.model_count() && monotone; ++k) {
            const std::uint64_t bit = std::uint64_t{1} << k;
            const bool inside = (eta & bit) != 0;
            if (meets && !inside && !set.test(eta | bit)) monotone = false;
            if (!meets && inside && !set.test(eta & ~bit)) monotone = false;
          }
        });
        const char* op = meets ? "meet" : "join";
        const std::string rel = meets ? "lambda => each member of H" : "each member of H => lambda";
        if (monotone) {
          if (set.test(bound)) return std::nullopt;
          return Witness{{detail::item(r, "lambda", si, lam), detail::item(r, std::string(op) + "(H)", sj, bound)},
                         rel + ", H = all such elements, but not for the " + op};
        }
        for (std::size_t a = set.first(); a != Bitset::npos; a = set.next(a + 1)) {
          for (std::size_t b = set.next(a + 1); b != Bitset::npos; b = set.next(b + 1)) {
            const std::uint64_t c = meets ? (a & b) : (a | b);
            if (!set.test(c)) {
              return Witness{{detail::item(r, "lambda", si, lam), detail::item(r, "eta", sj, a),
                              detail::item(r, "eta'", sj, b), detail::item(r, std::string(op) + "(H)", sj, c)},
                             rel + ", H = {eta, eta'}, but not for the " + op};
            }
          }
        }
        return std::nullopt;
      };
      if (auto hit = closed_check(up, true)) return hit;
      return closed_check(down, false);
    });
  }
  report.add("I4", "the relation preserves meets and joins", std::move(w));

  // I5: lambda => t_j and eta => !lambda give lambda => !eta.
  w.reset();
  for (Side si : {Side::one, Side::two}) {
    if (w) break;
    const Side sj = other(si);
    const Algebra& ai = r.algebra(si);
    const Algebra& aj = r.algebra(sj);
    w = detail::first_hit(ai.full() + 1, opt.jobs, [&](std::size_t lam) -> std::optional<Witness> {
      const Bitset& row = r.cross_row(si, lam);
      if (!row.test(aj.full())) return std::nullopt;
      const std::uint64_t not_lam = ai.negate_index(lam);
      for (std::uint64_t eta = 0; eta <= aj.full(); ++eta) {
        if (r.cross_row(sj, eta).test(not_lam) && !row.test(aj.negate_index(eta))) {
          return Witness{{detail::item(r, "lambda", si, lam), detail::item(r, "eta", sj, eta)},
                         "lambda => true, eta => !lambda, but not lambda => !eta"};
        }
      }
      return std::nullopt;
    });
  }
  report.add("I5", "negation is preserved under the awareness guard", std::move(w));
  return report;
}

/// The unique cross implication induced by a consistent translation:
/// lambda => eta iff outer(lambda) <= eta, and eta => lambda iff
/// eta <= inner(lambda), both for the map from side one to side two.
inline CrossImplication implication_from_translation(const Translation& t, const CheckOptions& opt = {}) {
  const AxiomReport rep = check_consistency(t, opt);
  if (const AxiomVerdict* bad = rep.first_failure()) {
    throw InconsistentInputError("translation fails " + bad->axiom + "; no cross implication is induced");
  }
  const Algebra& a1 = t.algebra1();
  const Algebra& a2 = t.algebra2();
  CrossImplication::check_size(a1, a2);
  const auto& outer12 = t.table(Direction::one_to_two(), Mode::outer);
  const auto& inner12 = t.table(Direction::one_to_two(), Mode::inner);
  std::vector<Bitset> rows12(a1.lattice_size(), Bitset(a2.lattice_size()));
  std::vector<Bitset> rows21(a2.lattice_size(), Bitset(a1.lattice_size()));
  for (std::uint64_t lam = 0; lam < a1.lattice_size(); ++lam) {
    for (std::uint64_t eta = 0; eta < a2.lattice_size(); ++eta) {
      if (a2.le(outer12[lam], eta)) rows12[lam].set(eta);
      if (a2.le(eta, inner12[lam])) rows21[eta].set(lam);
    }
  }
  return CrossImplication(t.algebra_ptr(Side::one), t.algebra_ptr(Side::two), std::move(rows12),
                          std::move(rows21));
}

/// Inner image: join of the elements implying x; outer image: meet of the
/// elements x implies, or the star when there are none.
inline Translation translation_from_implication(const CrossImplication& r, const CheckOptions& opt = {}) {
  const AxiomReport rep = check_implication_axioms(r, opt);
  if (const AxiomVerdict* bad = rep.first_failure()) {
    throw InconsistentInputError("cross implication fails " + bad->axiom + "; no translation is induced");
  }
  Translation::Table tabs[2][2];  // [from side][inner=0, outer=1]
  for (Side si : {Side::one, Side::two}) {
    const Side sj = other(si);
    const Algebra& ai = r.algebra(si);
    const Algebra& aj = r.algebra(sj);
    auto& inner = tabs[static_cast<int>(si)][0];
    auto& outer = tabs[static_cast<int>(si)][1];
    inner.assign(ai.lattice_size(), 0);
    outer.assign(ai.lattice_size(), 0);
    for (std::uint64_t lam = 0; lam <= ai.full(); ++lam) {
      std::uint64_t lo = 0;
      std::uint64_t hi = aj.star_index();
      const Bitset& row = r.cross_row(si, lam);
      for (std::uint64_t eta = 0; eta <= aj.full(); ++eta) {
        if (r.cross_row(sj, eta).test(lam)) lo |= eta;
        if (row.test(eta)) hi = aj.meet_index(hi, eta);
      }
      inner[lam] = lo;
      outer[lam] = hi;
    }
    inner[ai.star_index()] = aj.star_index();
    outer[ai.star_index()] = aj.star_index();
  }
  return Translation(r.algebra_ptr(Side::one), r.algebra_ptr(Side::two), std::move(tabs[0][0]),
                     std::move(tabs[0][1]), std::move(tabs[1][0]), std::move(tabs[1][1]));
}

}  // namespace xlang

#endif  // XLANG_IMPLICATION_HPP
