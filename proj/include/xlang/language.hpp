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

#ifndef XLANG_LANGUAGE_HPP
#define XLANG_LANGUAGE_HPP

#include <algorithm>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "xlang/error.hpp"
#include "xlang/formula.hpp"

namespace xlang {

/// A finitely generated language: elementary propositions plus the formulas
/// its speaker believes.
struct LanguageSpec {
  std::string name;
  std::vector<std::string> elementary;
  std::vector<Formula> beliefs;

  std::optional<std::size_t> atom_index(std::string_view atom) const {
    auto it = std::find(elementary.begin(), elementary.end(), atom);
    if (it == elementary.end()) return std::nullopt;
    return static_cast<std::size_t>(it - elementary.begin());
  }
  bool declares(std::string_view atom) const { return atom_index(atom).has_value(); }

  friend bool operator==(const LanguageSpec&, const LanguageSpec&) = default;
};

namespace detail {

inline std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

/// Parses `text` as a formula whose first character sits at 0-based `column`
/// of line `line`.
inline Formula parse_formula_at(std::string_view text, std::size_t line, std::size_t column,
                                const LanguageSpec& spec) {
  const FormulaParser::Validator declared = [&spec](std::string_view a) { return spec.declares(a); };
  return FormulaParser(text, line, column, &declared).parse_all();
}

}  // namespace detail

/// Parses a formula, rejecting atoms the language does not declare.
inline Formula parse_formula(std::string_view text, const LanguageSpec& spec) {
  return detail::parse_formula_at(text, 0, 0, spec);
}

/// Parses a language document:
///
///     language <name>
///     atoms: <id> <id> ...
///     believe: <formula>      (any number of times)
///
/// `#` starts a comment that runs to the end of the line.
inline LanguageSpec parse_language(std::string_view text) {
  LanguageSpec spec;
  bool have_name = false;
  bool have_atoms = false;
  std::size_t line_no = 0;

  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    const std::size_t line_start = start;
    start = end + 1;
    ++line_no;

    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string_view body = detail::trim(line);
    if (body.empty()) continue;
    const auto col = [&](std::string_view piece) {
      return static_cast<std::size_t>(piece.data() - (text.data() + line_start));
    };

    auto keyword_end = body.find_first_of(": \t");
    const std::string_view keyword = body.substr(0, keyword_end);

    if (keyword == "language") {
      if (have_name) throw ParseError("repeated language declaration", line_no, col(body) + 1);
      const std::string_view name = detail::trim(body.substr(keyword.size()));
      if (name.empty() || !detail::is_ident_start(name.front()) ||
          !std::all_of(name.begin(), name.end(), detail::is_ident_char)) {
        throw ParseError("invalid language name", line_no, col(body) + keyword.size() + 2, "identifier");
      }
      spec.name = std::string(name);
      have_name = true;
      continue;
    }
    if (keyword != "atoms" && keyword != "believe") {
      throw ParseError("unknown directive '" + std::string(keyword) + "'", line_no, col(body) + 1,
                       "'language', 'atoms:' or 'believe:'");
    }
    std::string_view rest = body.substr(keyword.size());
    const std::size_t colon_col = col(rest);
    rest = detail::trim(rest);
    if (rest.empty() || rest.front() != ':') throw ParseError("missing ':'", line_no, colon_col + 1, "':'");
    rest = detail::trim(rest.substr(1));

    if (keyword == "atoms") {
      if (have_atoms) throw ParseError("repeated atoms declaration", line_no, col(body) + 1);
      have_atoms = true;
      std::size_t p = 0;
      while (p < rest.size()) {
        while (p < rest.size() && std::isspace(static_cast<unsigned char>(rest[p]))) ++p;
        if (p >= rest.size()) break;
        const std::size_t s = p;
        while (p < rest.size() && !std::isspace(static_cast<unsigned char>(rest[p]))) ++p;
        const std::string_view id = rest.substr(s, p - s);
        const std::size_t id_col = col(id) + 1;
        if (!detail::is_ident_start(id.front()) || !std::all_of(id.begin(), id.end(), detail::is_ident_char) ||
            id == "true" || id == "false") {
          throw ParseError("invalid atom name '" + std::string(id) + "'", line_no, id_col, "identifier");
        }
        if (spec.declares(id)) throw DuplicateAtomError(std::string(id), line_no, id_col);
        spec.elementary.emplace_back(id);
      }
      if (spec.elementary.empty()) throw ParseError("empty atom list", line_no, col(body) + 1, "identifier");
      continue;
    }

    // believe:
    if (!have_atoms) throw ParseError("belief before atoms declaration", line_no, col(body) + 1, "'atoms:'");
    if (rest.empty()) throw ParseError("empty belief", line_no, col(body) + 1, "formula");
    spec.beliefs.push_back(detail::parse_formula_at(rest, line_no, col(rest), spec));
  }

  if (!have_name) throw ParseError("missing language declaration", line_no, 1, "'language <name>'");
  if (!have_atoms) throw ParseError("missing atoms declaration", line_no, 1, "'atoms:'");
  return spec;
}

/// Canonical document text for `spec`.
inline std::string to_string(const LanguageSpec& spec) {
  std::string out = "language " + spec.name + "\natoms:";
  for (const auto& a : spec.elementary) out += " " + a;
  out += "\n";
  for (const auto& b : spec.beliefs) out += "believe: " + to_string(b) + "\n";
  return out;
}

}  // namespace xlang

#endif  // XLANG_LANGUAGE_HPP
