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

#ifndef XLANG_ALGEBRA_HPP
#define XLANG_ALGEBRA_HPP

#include <bit>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "xlang/error.hpp"
#include "xlang/formula.hpp"
#include "xlang/language.hpp"

namespace xlang {

inline constexpr std::size_t kDefaultMaxAtoms = 20;
/// Propositions are 64-bit model masks and the star sits at index 2^m.
inline constexpr std::size_t kMaxModels = 62;

/// A truth assignment satisfying every belief.
struct Model {
  std::vector<bool> assignment;

  bool value(std::size_t atom) const { return assignment[atom]; }
  friend bool operator==(const Model&, const Model&) = default;
};

/// An element of the star-augmented lattice of one algebra.
struct StarProp {
  std::uint64_t bits = 0;
  bool star = false;
  std::uint64_t origin = 0;

  friend bool operator==(const StarProp&, const StarProp&) = default;
};

namespace detail {

inline std::uint64_t fnv1a(std::string_view s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

/// Evaluates `f` on 64 assignments at once; `columns[i]` holds atom i.
inline std::uint64_t eval_words(const Formula& f, const LanguageSpec& spec,
                                const std::vector<std::uint64_t>& columns) {
  switch (f.kind()) {
    case FormulaKind::Atom: return columns[*spec.atom_index(f.name())];
    case FormulaKind::True: return ~std::uint64_t{0};
    case FormulaKind::False: return 0;
    case FormulaKind::Not: return ~eval_words(f.child(), spec, columns);
    case FormulaKind::And: return eval_words(f.left(), spec, columns) & eval_words(f.right(), spec, columns);
    case FormulaKind::Or: return eval_words(f.left(), spec, columns) | eval_words(f.right(), spec, columns);
    case FormulaKind::Implies:
      return ~eval_words(f.left(), spec, columns) | eval_words(f.right(), spec, columns);
  }
  return 0;
}

}  // namespace detail

/// All assignments satisfying the beliefs, ordered lexicographically with
/// the first atom most significant and true before false.
inline std::vector<Model> enumerate_models(const LanguageSpec& spec, std::size_t max_atoms = kDefaultMaxAtoms) {
  const std::size_t n = spec.elementary.size();
  if (n == 0) throw InvalidArgumentError("language '" + spec.name + "' declares no atoms");
  if (n > max_atoms || n >= 63) {
    throw CapExceededError("language '" + spec.name + "' has " + std::to_string(n) +
                           " atoms; the enumeration limit is " + std::to_string(max_atoms));
  }
  Formula belief = Formula::truth();
  for (const auto& b : spec.beliefs) belief = Formula::conjunction(belief, b);

  // Assignment k gives atom i the value of bit (n-1-i) of k; walking k
  // downwards yields the canonical order.
  const std::uint64_t total = std::uint64_t{1} << n;
  std::vector<Model> models;
  std::vector<std::uint64_t> columns(n);
  for (std::uint64_t base = 0; base < total; base += 64) {
    const std::uint64_t width = std::min<std::uint64_t>(64, total - base);
    for (std::size_t i = 0; i < n; ++i) {
      std::uint64_t w = 0;
      for (std::uint64_t t = 0; t < width; ++t) {
        const std::uint64_t k = total - 1 - (base + t);
        if ((k >> (n - 1 - i)) & 1U) w |= std::uint64_t{1} << t;
      }
      columns[i] = w;
    }
    std::uint64_t sat = detail::eval_words(belief, spec, columns);
    if (width < 64) sat &= (std::uint64_t{1} << width) - 1;
    while (sat != 0) {
      const auto t = static_cast<std::uint64_t>(std::countr_zero(sat));
      sat &= sat - 1;
      const std::uint64_t k = total - 1 - (base + t);
      Model m;
      m.assignment.resize(n);
      for (std::size_t i = 0; i < n; ++i) m.assignment[i] = (k >> (n - 1 - i)) & 1U;
      models.push_back(std::move(m));
      if (models.size() > kMaxModels) {
        throw CapExceededError("language '" + spec.name + "' has more than " + std::to_string(kMaxModels) +
                               " models");
      }
    }
  }
  if (models.empty()) throw ContradictionError("the beliefs of language '" + spec.name + "' admit no model");
  return models;
}

/// The Lindenbaum-Tarski algebra of a language as the powerset of its models.
///
/// A proposition is a bit mask over model indices. The star-augmented lattice
/// is indexed by `0 .. 2^m`, where index `2^m` is the star and every other
/// index is the mask itself.
class Algebra {
 public:
  explicit Algebra(LanguageSpec spec, std::size_t max_atoms = kDefaultMaxAtoms)
      : spec_(std::move(spec)), models_(enumerate_models(spec_, max_atoms)), origin_(detail::fnv1a(spec_.name)) {
    const std::size_t m = models_.size();
    full_ = m == 64 ? ~std::uint64_t{0} : (std::uint64_t{1} << m) - 1;
    atom_masks_.assign(spec_.elementary.size(), 0);
    for (std::size_t k = 0; k < m; ++k) {
      for (std::size_t i = 0; i < spec_.elementary.size(); ++i) {
        if (models_[k].value(i)) atom_masks_[i] |= std::uint64_t{1} << k;
      }
    }
    names_.reserve(m);
    for (std::size_t k = 0; k < m; ++k) names_.push_back(compute_model_name(k));
  }

  const LanguageSpec& spec() const { return spec_; }
  const std::string& name() const { return spec_.name; }
  const std::vector<Model>& models() const { return models_; }
  std::size_t model_count() const { return models_.size(); }
  std::uint64_t origin() const { return origin_; }

  /// Mask of the full model set.
  std::uint64_t full() const { return full_; }
  std::uint64_t star_index() const { return full_ + 1; }
  /// Number of elements in the star-augmented lattice.
  std::uint64_t lattice_size() const { return full_ + 2; }
  bool is_star(std::uint64_t x) const { return x == star_index(); }

  // Index-level lattice operations on 0 .. 2^m.
  bool le(std::uint64_t x, std::uint64_t y) const {
    if (is_star(y)) return true;
    if (is_star(x)) return false;
    return (x & ~y) == 0;
  }
  std::uint64_t meet_index(std::uint64_t x, std::uint64_t y) const {
    if (is_star(x)) return y;
    if (is_star(y)) return x;
    return x & y;
  }
  std::uint64_t join_index(std::uint64_t x, std::uint64_t y) const {
    if (is_star(x) || is_star(y)) return star_index();
    return x | y;
  }
  std::uint64_t negate_index(std::uint64_t x) const {
    if (is_star(x)) throw StarNegationError();
    return ~x & full_;
  }

  StarProp bottom() const { return {0, false, origin_}; }
  StarProp top() const { return {full_, false, origin_}; }
  StarProp star() const { return {0, true, origin_}; }
  StarProp prop(std::uint64_t mask) const {
    if ((mask & ~full_) != 0) throw InvalidArgumentError("mask outside the model range of '" + name() + "'");
    return {mask, false, origin_};
  }
  StarProp at(std::uint64_t index) const { return is_star(index) ? star() : prop(index); }
  std::uint64_t index(const StarProp& x) const {
    check_origin(x);
    return x.star ? star_index() : x.bits;
  }

  StarProp meet(const StarProp& x, const StarProp& y) const { return at(meet_index(index(x), index(y))); }
  StarProp join(const StarProp& x, const StarProp& y) const { return at(join_index(index(x), index(y))); }
  StarProp negate(const StarProp& x) const { return at(negate_index(index(x))); }
  bool implies(const StarProp& x, const StarProp& y) const { return le(index(x), index(y)); }

  /// Singleton model sets in model order.
  std::vector<StarProp> atoms() const {
    std::vector<StarProp> out;
    for (std::size_t k = 0; k < models_.size(); ++k) out.push_back(prop(std::uint64_t{1} << k));
    return out;
  }

  /// Models where elementary proposition `atom` holds.
  std::uint64_t atom_mask(std::size_t atom) const { return atom_masks_[atom]; }

  std::uint64_t denote_mask(const Formula& f) const {
    switch (f.kind()) {
      case FormulaKind::Atom: {
        auto i = spec_.atom_index(f.name());
        if (!i) throw UndeclaredAtomError(f.name(), 0, 0);
        return atom_masks_[*i];
      }
      case FormulaKind::True: return full_;
      case FormulaKind::False: return 0;
      case FormulaKind::Not: return ~denote_mask(f.child()) & full_;
      case FormulaKind::And: return denote_mask(f.left()) & denote_mask(f.right());
      case FormulaKind::Or: return denote_mask(f.left()) | denote_mask(f.right());
      case FormulaKind::Implies: return (~denote_mask(f.left()) & full_) | denote_mask(f.right());
    }
    return 0;
  }
  StarProp denote(const Formula& f) const { return prop(denote_mask(f)); }

  /// Name of model k: its true atoms when that conjunction singles it out,
  /// otherwise the full literal conjunction.
  const std::string& model_name(std::size_t k) const { return names_[k]; }

  /// Canonical text: `*`, `false`, `true`, or model names joined by ` | `.
  std::string format_index(std::uint64_t x) const {
    if (is_star(x)) return "*";
    if (x == 0) return "false";
    if (x == full_) return "true";
    std::string out;
    for (std::size_t k = 0; k < models_.size(); ++k) {
      if ((x >> k) & 1U) {
        if (!out.empty()) out += " | ";
        out += names_[k];
      }
    }
    return out;
  }
  std::string format(const StarProp& x) const { return format_index(index(x)); }

 private:
  void check_origin(const StarProp& x) const {
    if (x.origin != origin_) {
      throw AlgebraMismatchError("proposition does not belong to the algebra of '" + name() + "'");
    }
    if (!x.star && (x.bits & ~full_) != 0) {
      throw InvalidArgumentError("mask outside the model range of '" + name() + "'");
    }
  }

  std::string compute_model_name(std::size_t k) const {
    const Model& m = models_[k];
    std::string positive;
    std::uint64_t mask = full_;
    for (std::size_t i = 0; i < spec_.elementary.size(); ++i) {
      if (!m.value(i)) continue;
      if (!positive.empty()) positive += " & ";
      positive += spec_.elementary[i];
      mask &= atom_masks_[i];
    }
    if (!positive.empty() && mask == (std::uint64_t{1} << k)) return positive;
    std::string literal;
    for (std::size_t i = 0; i < spec_.elementary.size(); ++i) {
      if (!literal.empty()) literal += " & ";
      if (!m.value(i)) literal += "!";
      literal += spec_.elementary[i];
    }
    return literal;
  }

  LanguageSpec spec_;
  std::vector<Model> models_;
  std::uint64_t origin_;
  std::uint64_t full_ = 0;
  std::vector<std::uint64_t> atom_masks_;
  std::vector<std::string> names_;
};

inline StarProp denote(const Formula& f, const Algebra& a) { return a.denote(f); }
inline std::vector<StarProp> atoms(const Algebra& a) { return a.atoms(); }

}  // namespace xlang

#endif  // XLANG_ALGEBRA_HPP
