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


#ifndef XLANG_EXPORT_HPP
#define XLANG_EXPORT_HPP

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <vector>

#include <nlohmann/json.hpp>

#include "xlang/axiom_report.hpp"
#include "xlang/bitset.hpp"
#include "xlang/commonality.hpp"
#include "xlang/implication.hpp"
#include "xlang/semantics.hpp"

namespace xlang {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

inline Json to_json(const WitnessItem& w) {
  return Json{{"role", w.role}, {"language", number(w.side)}, {"proposition", w.text}};
}

inline Json to_json(const AxiomReport& r) {
  Json out = Json::array();
  for (const auto& v : r.verdicts) {
    Json j{{"axiom", v.axiom}, {"description", v.description}, {"verdict", v.passed ? "pass" : "fail"}};
    if (v.witness) {
      Json items = Json::array();
      for (const auto& it : v.witness->items) items.push_back(to_json(it));
      j["witness"] = Json{{"items", items}, {"note", v.witness->note}};
    }
    out.push_back(std::move(j));
  }
  return out;
}

inline Json state_json(const JointStateSpace& js, std::size_t k) {
  const JointState& s = js.states()[k];
  Json j{{"index", k}};
  j["atom1"] = s.atom1 ? Json(js.algebra(Side::one).model_name(*s.atom1)) : Json(nullptr);
  j["atom2"] = s.atom2 ? Json(js.algebra(Side::two).model_name(*s.atom2)) : Json(nullptr);
  return j;
}

/// Above this many models only atom events are listed.
inline constexpr std::size_t kFullValuationModels = 8;

inline Json to_json(const JointStateSpace& js) {
  Json out;
  Json states = Json::array();
  for (std::size_t k = 0; k < js.size(); ++k) states.push_back(state_json(js, k));
  out["state_count"] = js.size();
  out["minimal"] = js.minimal();
  out["states"] = states;
  for (Side s : {Side::one, Side::two}) {
    const Algebra& a = js.algebra(s);
    const bool all = a.model_count() <= kFullValuationModels;
    Json table;
    if (all) {
      for (std::uint64_t x = 0; x <= a.full(); ++x) table[a.format_index(x)] = js.valuation(s, x).indices();
    } else {
      for (std::size_t k = 0; k < a.model_count(); ++k) table[a.model_name(k)] = js.atom_event(s, k).indices();
    }
    const std::string key = "valuation" + std::to_string(number(s));
    out[key] = Json{{"scope", all ? "all propositions" : "atoms"}, {"events", table}};
  }
  return out;
}

inline Json to_json(const CommonLanguage& c, const Algebra& host, const Algebra& partner) {
  Json members = Json::array();
  for (std::size_t k = 0; k < c.members.size(); ++k) {
    members.push_back(Json{{"proposition", host.format_index(c.members[k])},
                           {"partner", partner.format_index(c.partners[k])}});
  }
  Json atoms = Json::array();
  for (auto a : c.atoms()) atoms.push_back(host.format_index(a));
  return Json{{"host", number(c.host)},
              {"size", c.members.size()},
              {"atoms", atoms},
              {"members", members},
              {"checks", to_json(c.audit)}};
}

inline Json to_json(const AwarenessVerdict& v) {
  Json cond = Json::array();
  for (int k = 0; k < 2; ++k) {
    const std::string label = std::string(k == 0 ? "1 vs 2" : "2 vs 1");
    cond.push_back(Json{{"pair", label},
                        {"less_aware", v.less_aware[k]},
                        {"pure_coarsening", v.pure_coarsening[k]},
                        {"pure_restriction", v.pure_restriction[k]},
                        {"sigma_inclusion", v.conditions[k][0]},
                        {"minimal_joint_language", v.conditions[k][1]},
                        {"common_language", v.conditions[k][2]},
                        {"sigma_inclusion_on_space", v.conditions[k][3]},
                        {"inner_equals_outer", v.conditions[k][4]}});
  }
  return Json{{"classification", v.classification},
              {"summary", v.summary},
              {"conditions_agree", v.conditions_agree},
              {"pairs", cond},
              {"evidence", v.evidence}};
}

namespace detail {

inline std::string dot_escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out;
}

inline std::string node_id(Side s, std::uint64_t x) { return "n" + std::to_string(number(s)) + "_" + std::to_string(x); }

inline void dot_algebra(const Algebra& a, Side s, std::string& out, const std::string& indent) {
  for (std::uint64_t x = 0; x <= a.full(); ++x) {
    out += indent + node_id(s, x) + " [label=\"" + dot_escape(a.format_index(x)) + "\"];\n";
  }
  for (std::uint64_t x = 0; x <= a.full(); ++x) {
    for (std::size_t k = 0; k < a.model_count(); ++k) {
      const std::uint64_t bit = std::uint64_t{1} << k;
      if ((x & bit) == 0) out += indent + node_id(s, x) + " -> " + node_id(s, x | bit) + ";\n";
    }
  }
}

}  // namespace detail

/// Hasse diagram of one algebra without the star.
inline std::string algebra_dot(const Algebra& a, Side s) {
  std::string out = "digraph algebra" + std::to_string(number(s)) + " {\n  rankdir=BT;\n  node [shape=box];\n";
  detail::dot_algebra(a, s, out, "  ");
  out += "}\n";
  return out;
}

/// Both Hasse diagrams plus cross-language implication edges. By default the
/// cross edges are those of the transitive reduction of the relation on
/// classes of equivalent propositions, and equivalent cross pairs are drawn
/// as one double-headed edge. With `full`, every cross pair is drawn.
inline std::string cross_dot(const CrossImplication& r, bool full = false) {
  const Algebra& a1 = r.algebra1();
  const Algebra& a2 = r.algebra2();
  std::string out = "digraph cross {\n  rankdir=BT;\n  node [shape=box];\n";
  for (Side s : {Side::one, Side::two}) {
    out += "  subgraph cluster_" + std::to_string(number(s)) + " {\n    label=\"" +
           detail::dot_escape(r.algebra(s).name()) + "\";\n";
    detail::dot_algebra(r.algebra(s), s, out, "    ");
    out += "  }\n";
  }
  const std::string style = " [style=dashed, color=blue]";
  const std::string both = " [style=dashed, color=blue, dir=both]";

  // Nodes: side one masks first, then side two; the star is left out.
  const std::size_t n1 = a1.full() + 1;
  const std::size_t n = n1 + a2.full() + 1;
  auto loc = [&](std::size_t v) { return v < n1 ? Located{Side::one, v} : Located{Side::two, v - n1}; };
  auto implies = [&](std::size_t x, std::size_t y) { return r.implies(loc(x), loc(y)); };
  auto id = [&](std::size_t v) {
    const Located l = loc(v);
    return detail::node_id(l.side, l.index);
  };

  if (full) {
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = 0; y < n; ++y) {
        if (loc(x).side != loc(y).side && implies(x, y)) out += "  " + id(x) + " -> " + id(y) + style + ";\n";
      }
    }
    out += "}\n";
    return out;
  }

  // Class representative: the smallest equivalent node.
  std::vector<Bitset> up(n, Bitset(n));
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = 0; y < n; ++y) {
      if (implies(x, y)) up[x].set(y);
    }
  }
  std::vector<std::size_t> rep(n);
  std::vector<std::vector<std::size_t>> members(n);
  Bitset is_rep(n);
  for (std::size_t x = 0; x < n; ++x) {
    rep[x] = x;
    for (std::size_t y = 0; y < x; ++y) {
      if (up[x].test(y) && up[y].test(x)) {
        rep[x] = rep[y];
        break;
      }
    }
    members[rep[x]].push_back(x);
    if (rep[x] == x) is_rep.set(x);
  }
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_rep.test(c)) continue;
    const auto& m = members[c];
    for (std::size_t a = 0; a < m.size(); ++a) {
      for (std::size_t b = a + 1; b < m.size(); ++b) {
        if (loc(m[a]).side != loc(m[b]).side) out += "  " + id(m[a]) + " -> " + id(m[b]) + both + ";\n";
      }
    }
  }
  // Strict successors of each class, then drop those reachable in two steps.
  for (std::size_t c = 0; c < n; ++c) {
    if (!is_rep.test(c)) continue;
    Bitset succ = up[c] & is_rep;
    succ.reset(c);
    Bitset indirect(n);
    succ.for_each([&](std::size_t e) {
      Bitset further = up[e] & is_rep;
      further.reset(e);
      indirect |= further;
    });
    (succ - indirect).for_each([&](std::size_t d) {
      for (auto x : members[c]) {
        for (auto y : members[d]) {
          if (loc(x).side == loc(y).side) return;  // already a Hasse edge
        }
      }
      out += "  " + id(members[c].front()) + " -> " + id(members[d].front()) + style + ";\n";
    });
  }
  out += "}\n";
  return out;
}

}  // namespace xlang

#endif  // XLANG_EXPORT_HPP
