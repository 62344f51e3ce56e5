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


#ifndef XLANG_IO_HPP
#define XLANG_IO_HPP

#include <filesystem>
#include <fstream>
#include <memory>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "xlang/algebra.hpp"
#include "xlang/error.hpp"
#include "xlang/implication.hpp"
#include "xlang/language.hpp"
#include "xlang/translation.hpp"

namespace xlang {

inline std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw FileError("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline LanguageSpec load_language(const std::filesystem::path& path) { return parse_language(read_file(path)); }

namespace detail {

/// A non-blank line with comments stripped, and the offset of `body` within
/// the original line.
struct SourceLine {
  std::size_t number = 0;
  std::string_view body;
  std::size_t column = 0;  // 0-based column of body[0]
};

inline std::vector<SourceLine> source_lines(std::string_view text) {
  std::vector<SourceLine> out;
  std::size_t start = 0;
  std::size_t no = 0;
  while (start <= text.size()) {
    std::size_t end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    ++no;
    if (auto h = line.find('#'); h != std::string_view::npos) line = line.substr(0, h);
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    const std::string_view body = trim(line);
    if (!body.empty()) out.push_back({no, body, static_cast<std::size_t>(body.data() - line.data())});
    start = end + 1;
  }
  return out;
}

inline std::size_t col_of(const SourceLine& l, std::string_view piece) {
  return l.column + static_cast<std::size_t>(piece.data() - l.body.data());
}

/// Parses a star-lattice element: `*` or a formula of `a`.
inline std::uint64_t parse_element(const SourceLine& l, std::string_view text, const Algebra& a) {
  const std::string_view t = trim(text);
  if (t.empty()) throw ParseError("missing formula", l.number, col_of(l, text) + 1, "formula or '*'");
  if (t == "*") return a.star_index();
  return a.denote_mask(parse_formula_at(t, l.number, col_of(l, t), a.spec()));
}

inline int parse_side_digit(const SourceLine& l, std::string_view s) {
  if (s == "1") return 1;
  if (s == "2") return 2;
  throw ParseError("expected a language number", l.number, col_of(l, s) + 1, "'1' or '2'");
}

}  // namespace detail

/// Parsed translation document: atom-level outer images plus optional
/// single-entry inner overrides.
struct TranslationSpec {
  std::vector<std::uint64_t> outer_atoms12;
  std::vector<std::uint64_t> outer_atoms21;
  struct Override {
    Direction direction;
    std::uint64_t source = 0;
    std::uint64_t value = 0;
  };
  std::vector<Override> inner_overrides;
};

/// Reads lines of the forms
///
///     outer 1>2: <atom formula of 1> => <formula of 2 | *>
///     outer 2>1: <atom formula of 2> => <formula of 1 | *>
///     inner 1>2: <formula of 1> => <formula of 2 | *>
///
/// Every atom of each language needs exactly one outer line. An inner line
/// replaces one entry of the derived inner table.
inline TranslationSpec parse_translation(std::string_view text, const Algebra& a1, const Algebra& a2) {
  TranslationSpec spec;
  std::vector<std::optional<std::uint64_t>> got[2] = {
      std::vector<std::optional<std::uint64_t>>(a1.model_count()),
      std::vector<std::optional<std::uint64_t>>(a2.model_count())};
  const Algebra* alg[2] = {&a1, &a2};
  std::size_t last_line = 0;
  for (const auto& l : detail::source_lines(text)) {
    last_line = l.number;
    std::string_view body = l.body;
    const auto sp = body.find_first_of(" \t");
    const std::string_view kw = body.substr(0, sp);
    if (kw != "outer" && kw != "inner") {
      throw ParseError("unknown directive '" + std::string(kw) + "'", l.number, l.column + 1, "'outer' or 'inner'");
    }
    if (sp == std::string_view::npos) throw ParseError("missing direction", l.number, l.column + 1, "'1>2' or '2>1'");
    std::string_view rest = detail::trim(body.substr(sp));
    const auto colon = rest.find(':');
    if (colon == std::string_view::npos) throw ParseError("missing ':'", l.number, detail::col_of(l, rest) + 1, "':'");
    const std::string_view dir = detail::trim(rest.substr(0, colon));
    const auto gt = dir.find('>');
    if (gt == std::string_view::npos) {
      throw ParseError("malformed direction", l.number, detail::col_of(l, rest) + 1, "'1>2' or '2>1'");
    }
    const int from = detail::parse_side_digit(l, detail::trim(dir.substr(0, gt)));
    const int to = detail::parse_side_digit(l, detail::trim(dir.substr(gt + 1)));
    if (from == to) throw ParseError("direction must name both languages", l.number, detail::col_of(l, dir) + 1);
    std::string_view map = rest.substr(colon + 1);
    const auto arrow = map.find("=>");
    if (arrow == std::string_view::npos) throw ParseError("missing '=>'", l.number, detail::col_of(l, map) + 1, "'=>'");
    const Algebra& src = *alg[from - 1];
    const Algebra& dst = *alg[to - 1];
    const std::string_view lhs = map.substr(0, arrow);
    const std::uint64_t x = detail::parse_element(l, lhs, src);
    const std::uint64_t y = detail::parse_element(l, map.substr(arrow + 2), dst);
    const Direction d{from == 1 ? Side::one : Side::two, to == 1 ? Side::one : Side::two};
    if (kw == "inner") {
      spec.inner_overrides.push_back({d, x, y});
      continue;
    }
    if (src.is_star(x) || std::popcount(x) != 1) {
      throw ParseError("left side does not denote an atom of language " + std::to_string(from), l.number,
                       detail::col_of(l, detail::trim(lhs)) + 1, "atom formula");
    }
    auto& slot = got[from - 1][static_cast<std::size_t>(std::countr_zero(x))];
    if (slot) {
      throw ParseError("atom already has an outer image", l.number, detail::col_of(l, detail::trim(lhs)) + 1);
    }
    slot = y;
  }
  for (int s = 0; s < 2; ++s) {
    auto& dst = s == 0 ? spec.outer_atoms12 : spec.outer_atoms21;
    for (std::size_t k = 0; k < got[s].size(); ++k) {
      if (!got[s][k]) {
        throw ParseError("no outer " + std::string(s == 0 ? "1>2" : "2>1") + " image for atom '" +
                             alg[s]->model_name(k) + "'",
                         last_line, 1, "an outer line for every atom");
      }
      dst.push_back(*got[s][k]);
    }
  }
  return spec;
}

inline Translation build_translation(const TranslationSpec& spec, AlgebraPtr a1, AlgebraPtr a2) {
  Translation t = translation_from_atom_outer_indices(std::move(a1), std::move(a2), spec.outer_atoms12,
                                                      spec.outer_atoms21);
  for (const auto& o : spec.inner_overrides) t = t.with_entry(o.direction, Mode::inner, o.source, o.value);
  return t;
}

/// Reads lines `imp: <lang>.<formula> => <lang>.<formula>`, where <lang> is
/// a language name or its number and a formula may be `*`. `<=>` adds both
/// directions.
inline std::vector<Seed> parse_implication(std::string_view text, const Algebra& a1, const Algebra& a2) {
  std::vector<Seed> seeds;
  auto endpoint = [&](const detail::SourceLine& l, std::string_view piece) -> Located {
    const std::string_view t = detail::trim(piece);
    const auto dot = t.find('.');
    if (dot == std::string_view::npos) {
      throw ParseError("missing language prefix", l.number, detail::col_of(l, t) + 1, "<lang>.<formula>");
    }
    const std::string_view lang = t.substr(0, dot);
    Side s;
    if (lang == "1" || (lang == a1.name() && lang != a2.name())) {
      s = Side::one;
    } else if (lang == "2" || lang == a2.name()) {
      s = Side::two;
    } else {
      throw ParseError("unknown language '" + std::string(lang) + "'", l.number, detail::col_of(l, t) + 1,
                       "'" + a1.name() + "', '" + a2.name() + "', '1' or '2'");
    }
    const Algebra& a = s == Side::one ? a1 : a2;
    return {s, detail::parse_element(l, t.substr(dot + 1), a)};
  };
  for (const auto& l : detail::source_lines(text)) {
    std::string_view body = l.body;
    if (body.substr(0, 4) != "imp:") throw ParseError("unknown directive", l.number, l.column + 1, "'imp:'");
    std::string_view rest = body.substr(4);
    bool both = false;
    auto arrow = rest.find("<=>");
    std::size_t width = 3;
    if (arrow != std::string_view::npos) {
      both = true;
    } else {
      arrow = rest.find("=>");
      width = 2;
    }
    if (arrow == std::string_view::npos) throw ParseError("missing '=>'", l.number, detail::col_of(l, rest) + 1, "'=>'");
    const Located x = endpoint(l, rest.substr(0, arrow));
    const Located y = endpoint(l, rest.substr(arrow + width));
    seeds.push_back({x, y});
    if (both) seeds.push_back({y, x});
  }
  return seeds;
}

/// A corpus directory: lang1.lang, lang2.lang, translation.tr and optionally
/// implication.imp.
struct Corpus {
  std::filesystem::path directory;
  LanguageSpec spec1;
  LanguageSpec spec2;
  AlgebraPtr algebra1;
  AlgebraPtr algebra2;
  std::optional<Translation> translation;
  std::optional<std::vector<Seed>> seeds;
  /// Raw file contents in load order, for digests.
  std::vector<std::pair<std::string, std::string>> files;
};

inline Corpus load_corpus(const std::filesystem::path& dir, std::size_t max_atoms = kDefaultMaxAtoms) {
  Corpus c;
  c.directory = dir;
  auto slurp = [&](const std::string& name) {
    std::string text = read_file(dir / name);
    c.files.emplace_back(name, text);
    return text;
  };
  auto wrap = [&](const std::string& name, auto&& fn) {
    try {
      return fn();
    } catch (const ParseError& e) {
      throw ParseError(name + ": " + e.detail(), e.line(), e.column(), e.expected());
    }
  };
  c.spec1 = wrap("lang1.lang", [&] { return parse_language(slurp("lang1.lang")); });
  c.spec2 = wrap("lang2.lang", [&] { return parse_language(slurp("lang2.lang")); });
  c.algebra1 = std::make_shared<const Algebra>(c.spec1, max_atoms);
  c.algebra2 = std::make_shared<const Algebra>(c.spec2, max_atoms);
  if (std::filesystem::exists(dir / "translation.tr")) {
    const std::string text = slurp("translation.tr");
    auto ts = wrap("translation.tr", [&] { return parse_translation(text, *c.algebra1, *c.algebra2); });
    c.translation = build_translation(ts, c.algebra1, c.algebra2);
  }
  if (std::filesystem::exists(dir / "implication.imp")) {
    const std::string text = slurp("implication.imp");
    c.seeds = wrap("implication.imp", [&] { return parse_implication(text, *c.algebra1, *c.algebra2); });
  }
  return c;
}

}  // namespace xlang

#endif  // XLANG_IO_HPP
