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

#ifndef XLANG_FORMULA_HPP
#define XLANG_FORMULA_HPP

#include <cctype>
#include <cstddef>
#include <functional>
#include <memory>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "xlang/error.hpp"

namespace xlang {

enum class FormulaKind { Atom, Not, And, Or, Implies, True, False };

/// Immutable propositional syntax tree. Copies share structure.
class Formula {
 public:
  static Formula atom(std::string name) { return Formula(make(FormulaKind::Atom, std::move(name))); }
  static Formula truth() { return Formula(make(FormulaKind::True)); }
  static Formula falsity() { return Formula(make(FormulaKind::False)); }
  static Formula negation(Formula child) {
    return Formula(make(FormulaKind::Not, {}, std::move(child.node_)));
  }
  static Formula conjunction(Formula l, Formula r) {
    return Formula(make(FormulaKind::And, {}, std::move(l.node_), std::move(r.node_)));
  }
  static Formula disjunction(Formula l, Formula r) {
    return Formula(make(FormulaKind::Or, {}, std::move(l.node_), std::move(r.node_)));
  }
  static Formula implication(Formula l, Formula r) {
    return Formula(make(FormulaKind::Implies, {}, std::move(l.node_), std::move(r.node_)));
  }

  FormulaKind kind() const { return node_->kind; }
  /// Atom name; empty for other kinds.
  const std::string& name() const { return node_->name; }
  /// Operand of a negation, left operand of a binary connective.
  Formula left() const { return Formula(node_->left); }
  Formula child() const { return left(); }
  Formula right() const { return Formula(node_->right); }

  friend bool operator==(const Formula& a, const Formula& b) { return equal(a.node_.get(), b.node_.get()); }

 private:
  struct Node {
    FormulaKind kind;
    std::string name;
    std::shared_ptr<const Node> left;
    std::shared_ptr<const Node> right;
  };

  explicit Formula(std::shared_ptr<const Node> n) : node_(std::move(n)) {}

  static std::shared_ptr<const Node> make(FormulaKind k, std::string name = {},
                                          std::shared_ptr<const Node> l = nullptr,
                                          std::shared_ptr<const Node> r = nullptr) {
    return std::make_shared<const Node>(Node{k, std::move(name), std::move(l), std::move(r)});
  }

  static bool equal(const Node* a, const Node* b) {
    if (a == b) return true;
    if (a == nullptr || b == nullptr) return false;
    return a->kind == b->kind && a->name == b->name && equal(a->left.get(), b->left.get()) &&
           equal(a->right.get(), b->right.get());
  }

  std::shared_ptr<const Node> node_;
};

namespace detail {

inline bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) || c == '_'; }
inline bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

/// Recursive-descent parser for
///   imp   := or ('->' imp)?
///   or    := and ('|' and)*
///   and   := unary ('&' unary)*
///   unary := '!' unary | primary
///   primary := ident | 'true' | 'false' | '(' imp ')'
class FormulaParser {
 public:
  using Validator = std::function<bool(std::string_view)>;

  FormulaParser(std::string_view text, std::size_t line, std::size_t column_offset,
                const Validator* declared)
      : text_(text), line_(line), offset_(column_offset), declared_(declared) {}

  Formula parse_all() {
    Formula f = parse_imp();
    skip_ws();
    if (pos_ < text_.size()) fail("unexpected input '" + std::string(1, text_[pos_]) + "'", "end of formula");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& msg, const std::string& expected) const {
    throw ParseError(msg, line_, offset_ + pos_ + 1, expected);
  }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  Formula parse_imp() {
    Formula lhs = parse_or();
    if (accept("->")) return Formula::implication(std::move(lhs), parse_imp());
    return lhs;
  }
  Formula parse_or() {
    Formula lhs = parse_and();
    while (accept("|")) lhs = Formula::disjunction(std::move(lhs), parse_and());
    return lhs;
  }
  Formula parse_and() {
    Formula lhs = parse_unary();
    while (accept("&")) lhs = Formula::conjunction(std::move(lhs), parse_unary());
    return lhs;
  }
  Formula parse_unary() {
    if (accept("!")) return Formula::negation(parse_unary());
    return parse_primary();
  }
  Formula parse_primary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of formula", "identifier, 'true', 'false', '!' or '('");
    if (accept("(")) {
      Formula inner = parse_imp();
      if (!accept(")")) fail("unbalanced parenthesis", "')'");
      return inner;
    }
    if (!is_ident_start(text_[pos_])) {
      fail("unexpected '" + std::string(1, text_[pos_]) + "'", "identifier, 'true', 'false', '!' or '('");
    }
    const std::size_t start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    const std::string_view word = text_.substr(start, pos_ - start);
    if (word == "true") return Formula::truth();
    if (word == "false") return Formula::falsity();
    if (declared_ != nullptr && !(*declared_)(word)) {
      throw UndeclaredAtomError(std::string(word), line_, offset_ + start + 1);
    }
    return Formula::atom(std::string(word));
  }

  std::string_view text_;
  std::size_t line_;
  std::size_t offset_;
  const Validator* declared_;
  std::size_t pos_ = 0;
};

inline int precedence(FormulaKind k) {
  switch (k) {
    case FormulaKind::Implies: return 1;
    case FormulaKind::Or: return 2;
    case FormulaKind::And: return 3;
    case FormulaKind::Not: return 4;
    default: return 5;
  }
}

inline void print(const Formula& f, std::string& out) {
  auto operand = [&out](const Formula& g, bool parens) {
    if (parens) out += '(';
    print(g, out);
    if (parens) out += ')';
  };
  const int p = precedence(f.kind());
  switch (f.kind()) {
    case FormulaKind::Atom: out += f.name(); return;
    case FormulaKind::True: out += "true"; return;
    case FormulaKind::False: out += "false"; return;
    case FormulaKind::Not:
      out += '!';
      operand(f.child(), precedence(f.child().kind()) < p);
      return;
    case FormulaKind::And:
    case FormulaKind::Or:
      // Left-associative: a right operand at the same level keeps its parentheses.
      operand(f.left(), precedence(f.left().kind()) < p);
      out += f.kind() == FormulaKind::And ? " & " : " | ";
      operand(f.right(), precedence(f.right().kind()) <= p);
      return;
    case FormulaKind::Implies:
      // Right-associative.
      operand(f.left(), precedence(f.left().kind()) <= p);
      out += " -> ";
      operand(f.right(), precedence(f.right().kind()) < p);
      return;
  }
}

}  // namespace detail

/// Parses a formula without checking atom names against a language.
inline Formula parse_formula(std::string_view text) {
  return detail::FormulaParser(text, 0, 0, nullptr).parse_all();
}

/// Canonical text with minimal parentheses; parses back to the same tree.
inline std::string to_string(const Formula& f) {
  std::string out;
  detail::print(f, out);
  return out;
}

/// Rewrites `a -> b` as `!a | b` throughout.
inline Formula desugar(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Atom:
    case FormulaKind::True:
    case FormulaKind::False: return f;
    case FormulaKind::Not: return Formula::negation(desugar(f.child()));
    case FormulaKind::And: return Formula::conjunction(desugar(f.left()), desugar(f.right()));
    case FormulaKind::Or: return Formula::disjunction(desugar(f.left()), desugar(f.right()));
    case FormulaKind::Implies:
      return Formula::disjunction(Formula::negation(desugar(f.left())), desugar(f.right()));
  }
  return f;
}

inline bool is_desugared(const Formula& f) {
  switch (f.kind()) {
    case FormulaKind::Implies: return false;
    case FormulaKind::Not: return is_desugared(f.child());
    case FormulaKind::And:
    case FormulaKind::Or: return is_desugared(f.left()) && is_desugared(f.right());
    default: return true;
  }
}

inline void collect_atoms(const Formula& f, std::vector<std::string>& out) {
  switch (f.kind()) {
    case FormulaKind::Atom: out.push_back(f.name()); return;
    case FormulaKind::Not: collect_atoms(f.child(), out); return;
    case FormulaKind::And:
    case FormulaKind::Or:
    case FormulaKind::Implies:
      collect_atoms(f.left(), out);
      collect_atoms(f.right(), out);
      return;
    default: return;
  }
}

}  // namespace xlang

#endif  // XLANG_FORMULA_HPP
