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


#ifndef XLANG_ORACLE_HPP
#define XLANG_ORACLE_HPP

// Brute-force reference computations. Nothing here calls the translation,
// implication or semantics algorithms; inputs are read through their raw
// tables and relation queries only.

#include <algorithm>
#include <bit>
#include <chrono>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "xlang/algebra.hpp"
#include "xlang/bitset.hpp"
#include "xlang/error.hpp"
#include "xlang/implication.hpp"
#include "xlang/semantics.hpp"
#include "xlang/side.hpp"
#include "xlang/translation.hpp"

namespace xlang {

struct OracleBudget {
  std::size_t max_models_per_language = 12;
  std::uint64_t max_candidates = std::uint64_t{1} << 22;
  std::chrono::milliseconds time_ceiling{60000};
};

namespace oracle_detail {

class Meter {
 public:
  explicit Meter(const OracleBudget& b) : budget_(b), start_(std::chrono::steady_clock::now()) {}
  void models(const Algebra& a) const {
    if (a.model_count() > budget_.max_models_per_language) {
      throw BudgetExceededError("language '" + a.name() + "' has " + std::to_string(a.model_count()) +
                                " models; the oracle budget allows " +
                                std::to_string(budget_.max_models_per_language));
    }
  }
  void tick(std::uint64_t n = 1) {
    used_ += n;
    if (used_ > budget_.max_candidates) throw BudgetExceededError("oracle candidate budget exhausted");
    if ((used_ & 0xFFF) == 0 && std::chrono::steady_clock::now() - start_ > budget_.time_ceiling) {
      throw BudgetExceededError("oracle time ceiling reached");
    }
  }

 private:
  OracleBudget budget_;
  std::chrono::steady_clock::time_point start_;
  std::uint64_t used_ = 0;
};

inline std::uint64_t full_mask(const Algebra& a) {
  return a.model_count() == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << a.model_count()) - 1;
}

/// Order of the star-lattice written out from scratch.
inline bool below(const Algebra& a, std::uint64_t x, std::uint64_t y) {
  const std::uint64_t star = full_mask(a) + 1;
  if (y == star) return true;
  if (x == star) return false;
  return (x & ~y) == 0;
}

/// Principal up-set of g within the non-star propositions.
inline Bitset principal(const Algebra& a, std::uint64_t g) {
  const std::uint64_t full = full_mask(a);
  Bitset f(full + 1);
  for (std::uint64_t x = 0; x <= full; ++x) {
    if ((g & ~x) == 0) f.set(x);
  }
  return f;
}

inline bool is_ultrafilter(const Algebra& a, const Bitset& f) {
  const std::uint64_t full = full_mask(a);
  if (f.test(0)) return false;
  for (std::uint64_t x = 0; x <= full; ++x) {
    if (!f.test(x) && !f.test(~x & full)) return false;
  }
  return true;
}

/// All ultrafilters of the non-star propositions, found among the proper
/// filters (each generated by some g other than false).
inline std::vector<std::pair<std::uint64_t, Bitset>> ultrafilters(const Algebra& a, Meter& meter) {
  std::vector<std::pair<std::uint64_t, Bitset>> out;
  for (std::uint64_t g = 1; g <= full_mask(a); ++g) {
    meter.tick();
    Bitset f = principal(a, g);
    if (is_ultrafilter(a, f)) out.emplace_back(g, std::move(f));
  }
  return out;
}

}  // namespace oracle_detail

/// A state found by exhaustive search: its member set over the disjoint
/// union of both star-lattices (side one first) and the atoms generating
/// its restrictions.
struct BruteState {
  Bitset members;
  std::optional<std::size_t> atom1;
  std::optional<std::size_t> atom2;
};

/// Every nonempty upward-closed set whose restriction to each language is
/// empty or an ultrafilter. The set holding only the two stars has no
/// proposition of either language and is left out.
inline std::vector<BruteState> brute_states(const CrossImplication& r, const OracleBudget& budget = {}) {
  oracle_detail::Meter meter(budget);
  const Algebra& a1 = r.algebra1();
  const Algebra& a2 = r.algebra2();
  meter.models(a1);
  meter.models(a2);
  const std::uint64_t n1 = oracle_detail::full_mask(a1) + 2;
  const std::uint64_t n2 = oracle_detail::full_mask(a2) + 2;
  const std::uint64_t n = n1 + n2;
  auto loc = [&](std::uint64_t v) { return v < n1 ? Located{Side::one, v} : Located{Side::two, v - n1}; };

  std::vector<Bitset> rows(n, Bitset(n));
  for (std::uint64_t x = 0; x < n; ++x) {
    for (std::uint64_t y = 0; y < n; ++y) {
      if (r.implies(loc(x), loc(y))) rows[x].set(y);
    }
    meter.tick();
  }

  auto u1 = oracle_detail::ultrafilters(a1, meter);
  auto u2 = oracle_detail::ultrafilters(a2, meter);
  std::vector<BruteState> out;
  for (std::size_t i = 0; i <= u1.size(); ++i) {
    for (std::size_t k = 0; k <= u2.size(); ++k) {
      if (i == u1.size() && k == u2.size()) continue;
      for (int stars = 0; stars < 4; ++stars) {
        meter.tick();
        Bitset w(n);
        if (i < u1.size()) u1[i].second.for_each([&](std::size_t x) { w.set(x); });
        if (k < u2.size()) u2[k].second.for_each([&](std::size_t x) { w.set(n1 + x); });
        if (stars & 1) w.set(n1 - 1);
        if (stars & 2) w.set(n - 1);
        if (w.none()) continue;
        bool closed = true;
        w.for_each([&](std::size_t x) {
          if (closed && !rows[x].is_subset_of(w)) closed = false;
        });
        if (!closed) continue;
        BruteState s{w, std::nullopt, std::nullopt};
        if (i < u1.size()) s.atom1 = static_cast<std::size_t>(std::countr_zero(u1[i].first));
        if (k < u2.size()) s.atom2 = static_cast<std::size_t>(std::countr_zero(u2[k].first));
        out.push_back(std::move(s));
      }
    }
  }
  return out;
}

/// The atom pairs of brute_states in canonical state order.
inline std::vector<JointState> brute_state_pairs(const CrossImplication& r, const OracleBudget& budget = {}) {
  std::vector<JointState> out;
  for (const auto& s : brute_states(r, budget)) out.push_back({s.atom1, s.atom2});
  std::sort(out.begin(), out.end());
  return out;
}

/// Adjoint of an outer map from `src` into `dst`: for each x of `dst`, the
/// join of every y of `src` (star included) whose outer image lies below x.
inline Translation::Table brute_adjoint(const Translation::Table& outer, const Algebra& src, const Algebra& dst,
                                        const OracleBudget& budget = {}) {
  oracle_detail::Meter meter(budget);
  meter.models(src);
  meter.models(dst);
  const std::uint64_t src_star = oracle_detail::full_mask(src) + 1;
  const std::uint64_t dst_star = oracle_detail::full_mask(dst) + 1;
  if (outer.size() != src_star + 1) throw InvalidArgumentError("outer table is not total");
  Translation::Table inner(dst_star + 1);
  for (std::uint64_t x = 0; x <= dst_star; ++x) {
    std::uint64_t acc = 0;
    bool star = false;
    for (std::uint64_t y = 0; y <= src_star; ++y) {
      meter.tick();
      if (!oracle_detail::below(dst, outer[y], x)) continue;
      if (y == src_star) {
        star = true;
      } else {
        acc |= y;
      }
    }
    inner[x] = star ? src_star : acc;
  }
  return inner;
}

/// Searches the ultrafilters of language `side` containing the proper filter
/// `filter` (a set of model masks) for one from which `excluded`, a
/// proposition of the other language, is not implied. Returns none when no
/// such ultrafilter exists, in particular when `excluded` already follows
/// from the filter.
inline std::optional<Bitset> brute_ultrafilter_extension(const CrossImplication& r, Side side, const Bitset& filter,
                                                         std::uint64_t excluded, const OracleBudget& budget = {}) {
  oracle_detail::Meter meter(budget);
  const Algebra& a = r.algebra(side);
  meter.models(a);
  const std::uint64_t full = oracle_detail::full_mask(a);
  if (filter.size() != full + 1) throw InvalidArgumentError("filter has the wrong width");
  if (filter.none() || filter.test(0)) throw InvalidArgumentError("filter must be nonempty and proper");
  for (std::uint64_t x = 0; x <= full; ++x) {
    for (std::uint64_t y = 0; y <= full && filter.test(x); ++y) {
      if ((x & ~y) == 0 && !filter.test(y)) throw InvalidArgumentError("filter is not upward closed");
      if (filter.test(y) && !filter.test(x & y)) throw InvalidArgumentError("filter is not closed under meets");
    }
  }
  const Side o = other(side);
  auto reaches = [&](const Bitset& set) {
    bool hit = false;
    set.for_each([&](std::size_t x) {
      if (!hit && r.implies(Located{side, x}, Located{o, excluded})) hit = true;
    });
    return hit;
  };
  if (reaches(filter)) return std::nullopt;
  for (const auto& [g, u] : oracle_detail::ultrafilters(a, meter)) {
    meter.tick();
    if (filter.is_subset_of(u) && !reaches(u)) return u;
  }
  return std::nullopt;
}

}  // namespace xlang

#endif  // XLANG_ORACLE_HPP
