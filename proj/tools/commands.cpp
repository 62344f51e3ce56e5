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


#include "commands.hpp"

#include <openssl/evp.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#if __has_include(<CLI/CLI.hpp>)
#include <CLI/CLI.hpp>
#else
#include "CLI11.hpp"
#endif
#include "xlang/export.hpp"
#include "xlang/xlang.hpp"

namespace xlang::cli {
namespace {

struct Globals {
  bool oracle = false;
  unsigned jobs = 1;
  std::size_t max_atoms = kDefaultMaxAtoms;
  std::string output;
  std::string format;
  bool timing = false;
};

/// Thrown for problems with the command line or inputs; maps to exit 2.
struct UsageError : Error {
  using Error::Error;
};

struct Loaded {
  Corpus corpus;
  Json inputs = Json::array();
};

Json digest_entries(const std::vector<std::pair<std::string, std::string>>& files) {
  Json out = Json::array();
  for (const auto& [name, text] : files) out.push_back(Json{{"file", name}, {"sha256", sha256_hex(text)}});
  return out;
}

Json header(const std::string& command, const Json& inputs) {
  return Json{{"schema_version", kSchemaVersion}, {"command", command}, {"inputs", inputs}};
}

std::string short_number(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.4f", v);
  std::string s = buf;
  while (s.size() > 1 && s.back() == '0' && s[s.size() - 2] != '.') s.pop_back();
  return s;
}

std::string witness_text(const Witness& w) {
  std::string s;
  for (const auto& it : w.items) {
    if (!s.empty()) s += ", ";
    s += it.role + " = " + std::to_string(number(it.side)) + "." + it.text;
  }
  if (!w.note.empty()) s += " (" + w.note + ")";
  return s;
}

std::string report_text(const AxiomReport& r) {
  std::string s;
  for (const auto& v : r.verdicts) {
    s += v.axiom + (v.passed ? " pass" : " fail");
    if (v.witness) s += ": " + witness_text(*v.witness);
    s += "\n";
  }
  return s;
}

Side parse_side(int n) { return n == 1 ? Side::one : Side::two; }

Direction parse_direction(const std::string& d) {
  if (d == "1>2") return Direction::one_to_two();
  if (d == "2>1") return Direction::two_to_one();
  throw UsageError("direction must be 1>2 or 2>1");
}

Mode parse_mode(const std::string& m) {
  if (m == "inner") return Mode::inner;
  if (m == "outer") return Mode::outer;
  throw UsageError("mode must be inner or outer");
}

const Translation& require_translation(const Corpus& c) {
  if (!c.translation) throw UsageError("corpus '" + c.directory.string() + "' has no translation.tr");
  return *c.translation;
}

/// Fails with exit 1 unless C1 to C3 hold.
struct Inconsistent : Error {
  using Error::Error;
};

void require_consistent(const Translation& t, const CheckOptions& opt) {
  const AxiomReport r = check_consistency(t, opt);
  if (const auto* bad = r.first_failure()) {
    throw Inconsistent("translation is inconsistent: " + bad->axiom + " fails at " + witness_text(*bad->witness));
  }
}

std::vector<double> load_probabilities(const std::string& path, std::size_t states) {
  Json j;
  try {
    j = Json::parse(read_file(path));
  } catch (const Json::parse_error& e) {
    throw UsageError(std::string("probability file: ") + e.what());
  }
  if (!j.is_object()) throw UsageError("probability file must map state indices to weights");
  std::vector<double> p(states, 0.0);
  for (const auto& [key, value] : j.items()) {
    std::size_t k = 0;
    try {
      std::size_t used = 0;
      k = std::stoul(key, &used);
      if (used != key.size()) throw std::invalid_argument(key);
    } catch (const std::exception&) {
      throw UsageError("probability key '" + key + "' is not a state index");
    }
    if (k >= states) throw UsageError("probability key '" + key + "' is not a state index");
    if (!value.is_number()) throw UsageError("probability of state " + key + " is not a number");
    p[k] = value.get<double>();
  }
  return p;
}

/// Oracle comparison of the fast state construction with brute force.
Json oracle_states(const CrossImplication& r, const JointStateSpace& js, bool& diverged) {
  try {
    const auto brute = brute_state_pairs(r);
    const bool same = brute == js.states();
    if (!same) diverged = true;
    return Json{{"check", "states"}, {"status", same ? "agree" : "diverge"}, {"brute_count", brute.size()},
                {"fast_count", js.size()}};
  } catch (const BudgetExceededError& e) {
    return Json{{"check", "states"}, {"status", "skipped"}, {"reason", e.what()}};
  }
}

Json oracle_adjoints(const Translation& t, bool& diverged) {
  Json out = Json::array();
  for (Direction d : {Direction::one_to_two(), Direction::two_to_one()}) {
    try {
      const auto inner = brute_adjoint(t.table({d.to, d.from}, Mode::outer), t.algebra(d.to), t.algebra(d.from));
      const bool same = inner == t.table(d, Mode::inner);
      if (!same) diverged = true;
      out.push_back(Json{{"check", "inner " + to_string(d)}, {"status", same ? "agree" : "diverge"}});
    } catch (const BudgetExceededError& e) {
      out.push_back(Json{{"check", "inner " + to_string(d)}, {"status", "skipped"}, {"reason", e.what()}});
    }
  }
  return out;
}

class Runner {
 public:
  Runner(std::ostream& out, std::ostream& err) : out_(out), err_(err), start_(std::chrono::steady_clock::now()) {}

  int run(const std::vector<std::string>& args);

 private:
  CheckOptions opts() const { return CheckOptions{g_.jobs}; }

  Loaded load(const std::string& dir) {
    Loaded l{load_corpus(dir, g_.max_atoms)};
    l.inputs = digest_entries(l.corpus.files);
    return l;
  }

  int emit(Json report, const std::string& text, bool text_default, int code) {
    const std::string fmt = g_.format.empty() ? (text_default ? "text" : "json") : g_.format;
    if (g_.timing) {
      const auto ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start_).count();
      report["timing"] = Json{{"elapsed_ms", ms}};
    }
    std::string body = fmt == "json" ? report.dump(2) + "\n" : text;
    if (fmt == "text" && g_.timing) body += "elapsed_ms: " + short_number(report["timing"]["elapsed_ms"]) + "\n";
    if (g_.output.empty()) {
      out_ << body;
    } else {
      std::ofstream f(g_.output, std::ios::binary);
      if (!f) throw UsageError("cannot write '" + g_.output + "'");
      f << body;
    }
    return code;
  }

  int cmd_check(const std::string& l1, const std::string& l2, const std::string& spec, const std::string& mode);
  int cmd_translate(const std::string& dir, const std::string& direction, const std::string& mode,
                    const std::string& formula);
  int cmd_joint(const std::string& dir);
  int cmd_common(const std::string& dir, int host);
  int cmd_classify(const std::string& dir);
  int cmd_bounds(const std::string& dir, const std::string& prob, bool uniform, int side, const std::string& formula);
  int cmd_export(const std::string& dir, const std::string& what, bool full);

  std::ostream& out_;
  std::ostream& err_;
  std::chrono::steady_clock::time_point start_;
  Globals g_;
};

int Runner::cmd_check(const std::string& l1, const std::string& l2, const std::string& spec_path,
                      const std::string& mode) {
  std::vector<std::pair<std::string, std::string>> files;
  auto slurp = [&](const std::string& p) {
    files.emplace_back(p, read_file(p));
    return files.back().second;
  };
  auto named = [](const std::string& p, auto&& fn) {
    try {
      return fn();
    } catch (const ParseError& e) {
      throw ParseError(p + ": " + e.detail(), e.line(), e.column(), e.expected());
    }
  };
  auto s1 = named(l1, [&] { return parse_language(slurp(l1)); });
  auto s2 = named(l2, [&] { return parse_language(slurp(l2)); });
  auto a1 = std::make_shared<const Algebra>(s1, g_.max_atoms);
  auto a2 = std::make_shared<const Algebra>(s2, g_.max_atoms);
  const std::string text = slurp(spec_path);

  Json report = header("check", digest_entries(files));
  report["mode"] = mode;
  std::string out;
  bool ok = true;
  bool diverged = false;
  if (mode == "translation") {
    const auto ts = named(spec_path, [&] { return parse_translation(text, *a1, *a2); });
    const Translation t = build_translation(ts, a1, a2);
    const AxiomReport axioms = check_consistency(t, opts());
    const AxiomReport derived = check_derived_properties(t, opts());
    ok = axioms.passed() && (!axioms.passed("C1") || derived.passed());
    report["axioms"] = to_json(axioms);
    report["derived"] = to_json(derived);
    out = report_text(axioms) + report_text(derived);
    if (g_.oracle) {
      Json o = oracle_adjoints(t, diverged);
      if (axioms.passed()) o.push_back(oracle_states(implication_from_translation(t, opts()),
                                                     build_joint_state_space(t, opts()), diverged));
      report["oracle"] = o;
    }
  } else {
    const auto seeds = named(spec_path, [&] { return parse_implication(text, *a1, *a2); });
    const CrossImplication r = close_relation(a1, a2, seeds);
    const AxiomReport axioms = check_implication_axioms(r, opts());
    ok = axioms.passed();
    report["axioms"] = to_json(axioms);
    report["cross_pairs"] = r.cross_pair_count();
    out = report_text(axioms);
    if (g_.oracle && ok) report["oracle"] = Json::array({oracle_states(r, build_joint_state_space(r, opts()), diverged)});
  }
  ok = ok && !diverged;
  report["passed"] = ok;
  out += std::string("result: ") + (ok ? "pass" : "fail") + "\n";
  return emit(report, out, false, ok ? kOk : kFailed);
}

int Runner::cmd_translate(const std::string& dir, const std::string& direction, const std::string& mode,
                          const std::string& formula) {
  const Direction d = parse_direction(direction);
  const Mode m = parse_mode(mode);
  Loaded l = load(dir);
  const Translation& t = require_translation(l.corpus);
  require_consistent(t, opts());
  const Algebra& src = t.algebra(d.from);
  const std::string f = detail::trim(formula) == "*" ? "*" : formula;
  const std::uint64_t x = f == "*" ? src.star_index() : src.denote_mask(parse_formula(formula, src.spec()));
  const std::uint64_t y = t.apply(d, m, x);
  const std::string result = t.algebra(d.to).format_index(y);
  Json report = header("translate", l.inputs);
  report["direction"] = to_string(d);
  report["mode"] = to_string(m);
  report["input"] = src.format_index(x);
  report["result"] = result;
  if (g_.oracle) {
    bool diverged = false;
    report["oracle"] = oracle_adjoints(t, diverged);
    if (diverged) return emit(report, result + "\n", true, kFailed);
  }
  return emit(report, result + "\n", true, kOk);
}

int Runner::cmd_joint(const std::string& dir) {
  Loaded l = load(dir);
  const Translation& t = require_translation(l.corpus);
  require_consistent(t, opts());
  const JointStateSpace js = build_joint_state_space(t, opts());
  const AxiomReport rep = verify_representation(t, js, opts());
  Json report = header("joint", l.inputs);
  report["joint_state_space"] = to_json(js);
  report["representation"] = to_json(rep);
  std::string text;
  for (std::size_t k = 0; k < js.size(); ++k) {
    const auto& s = js.states()[k];
    text += std::to_string(k) + ": (" + (s.atom1 ? t.algebra1().model_name(*s.atom1) : "-") + ", " +
            (s.atom2 ? t.algebra2().model_name(*s.atom2) : "-") + ")\n";
  }
  text += report_text(rep);
  bool ok = rep.passed();
  if (g_.oracle) {
    bool diverged = false;
    report["oracle"] = Json::array({oracle_states(implication_from_translation(t, opts()), js, diverged)});
    ok = ok && !diverged;
  }
  return emit(report, text, false, ok ? kOk : kFailed);
}

int Runner::cmd_common(const std::string& dir, int host) {
  Loaded l = load(dir);
  const Translation& t = require_translation(l.corpus);
  require_consistent(t, opts());
  const Side h = parse_side(host);
  Json report = header("common", l.inputs);
  std::string text;
  for (Side s : {Side::one, Side::two}) {
    Json perfect = Json::array(), fixed = Json::array();
    for (auto x : perfect_translations(t, s, opts())) perfect.push_back(t.algebra(s).format_index(x));
    for (auto x : fixed_points(t, s)) fixed.push_back(t.algebra(s).format_index(x));
    const std::string k = std::to_string(number(s));
    report["perfect" + k] = perfect;
    report["fixed_points" + k] = fixed;
  }
  const CommonLanguage c = common_language(t, h, opts());
  report["common_language"] = to_json(c, t.algebra(h), t.algebra(other(h)));
  for (std::size_t k = 0; k < c.members.size(); ++k) {
    text += t.algebra(h).format_index(c.members[k]) + " <=> " + t.algebra(other(h)).format_index(c.partners[k]) + "\n";
  }
  const JointStateSpace js = build_joint_state_space(t, opts());
  const EmbeddingReport emb = joint_embeddings(t, js, opts());
  report["embeddings"] = to_json(emb.checks);
  text += report_text(c.audit) + report_text(emb.checks);
  const bool ok = c.audit.passed() && emb.checks.passed();
  return emit(report, text, false, ok ? kOk : kFailed);
}

int Runner::cmd_classify(const std::string& dir) {
  Loaded l = load(dir);
  const Translation& t = require_translation(l.corpus);
  require_consistent(t, opts());
  const JointStateSpace js = build_joint_state_space(t, opts());
  const AwarenessVerdict v = classify_awareness(t, js, opts());
  Json report = header("classify", l.inputs);
  report["awareness"] = to_json(v);
  return emit(report, v.summary + "\n", false, v.conditions_agree ? kOk : kFailed);
}

int Runner::cmd_bounds(const std::string& dir, const std::string& prob, bool uniform, int side,
                       const std::string& formula) {
  if (uniform == !prob.empty()) throw UsageError("give exactly one of --prob and --uniform");
  Loaded l = load(dir);
  const Translation& t = require_translation(l.corpus);
  require_consistent(t, opts());
  const JointStateSpace js = build_joint_state_space(t, opts());
  std::vector<double> p;
  if (uniform) {
    p.assign(js.size(), 1.0 / static_cast<double>(js.size()));
  } else {
    l.inputs.push_back(Json{{"file", prob}, {"sha256", sha256_hex(read_file(prob))}});
    p = load_probabilities(prob, js.size());
  }
  const Side s = parse_side(side);
  const Algebra& a = t.algebra(s);
  const std::uint64_t x = detail::trim(formula) == "*" ? a.star_index() : a.denote_mask(parse_formula(formula, a.spec()));
  Interval iv;
  try {
    iv = probability_bounds(js, p, s, x, other(s));
  } catch (const InvalidArgumentError& e) {
    throw UsageError(e.what());
  }
  Json report = header("bounds", l.inputs);
  report["language"] = number(s);
  report["target"] = number(other(s));
  report["proposition"] = a.format_index(x);
  report["interval"] = Json::array({iv.lo, iv.hi});
  return emit(report, "[" + short_number(iv.lo) + ", " + short_number(iv.hi) + "]\n", false, kOk);
}

int Runner::cmd_export(const std::string& dir, const std::string& what, bool full) {
  Loaded l = load(dir);
  std::string dot;
  if (what == "algebra1") {
    dot = algebra_dot(*l.corpus.algebra1, Side::one);
  } else if (what == "algebra2") {
    dot = algebra_dot(*l.corpus.algebra2, Side::two);
  } else {
    std::optional<CrossImplication> r;
    if (l.corpus.translation) {
      require_consistent(*l.corpus.translation, opts());
      r.emplace(implication_from_translation(*l.corpus.translation, opts()));
    } else if (l.corpus.seeds) {
      r.emplace(close_relation(l.corpus.algebra1, l.corpus.algebra2, *l.corpus.seeds));
    } else {
      throw UsageError("corpus has neither translation.tr nor implication.imp");
    }
    dot = cross_dot(*r, full);
  }
  Json report = header("export-dot", l.inputs);
  report["what"] = what;
  report["dot"] = dot;
  return emit(report, dot, true, kOk);
}

int Runner::run(const std::vector<std::string>& args) {
  CLI::App app{"Translate propositions between two finite propositional languages.", "xlang"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_flag("--oracle", g_.oracle, "cross-validate fast paths against brute-force oracles");
  app.add_option("--jobs", g_.jobs, "worker threads for exhaustive checks")->check(CLI::Range(1U, 256U));
  app.add_option("--max-atoms", g_.max_atoms, "atom limit for model enumeration")->check(CLI::Range(1, 62));
  app.add_option("--output", g_.output, "write the report to this file");
  app.add_option("--format", g_.format, "report format")->check(CLI::IsMember({"json", "text"}));
  app.add_flag("--timing", g_.timing, "add elapsed time to the report");

  std::string l1, l2, spec, mode = "translation", dir, direction = "1>2", tmode = "inner", formula, prob, what;
  int side = 1, host = 1;
  bool uniform = false, full = false;

  auto* check = app.add_subcommand("check", "check translation or implication axioms");
  check->add_option("lang1", l1, "language 1 file")->required();
  check->add_option("lang2", l2, "language 2 file")->required();
  check->add_option("spec", spec, "translation (.tr) or implication (.imp) file")->required();
  check->add_option("--mode", mode, "what the spec file holds")->check(CLI::IsMember({"translation", "implication"}));

  auto* translate = app.add_subcommand("translate", "translate a formula");
  translate->add_option("corpus", dir, "corpus directory")->required();
  translate->add_option("formula", formula, "formula of the source language, or *")->required();
  translate->add_option("--direction", direction, "1>2 or 2>1");
  translate->add_option("--mode", tmode, "inner or outer");

  auto* joint = app.add_subcommand("joint", "build the joint state space");
  joint->add_option("corpus", dir, "corpus directory")->required();

  auto* common = app.add_subcommand("common", "extract the common language");
  common->add_option("corpus", dir, "corpus directory")->required();
  common->add_option("--host", host, "language carrying the common language")->check(CLI::Range(1, 2));

  auto* classify = app.add_subcommand("classify", "compare awareness of the two languages");
  classify->add_option("corpus", dir, "corpus directory")->required();

  auto* bounds = app.add_subcommand("bounds", "probability interval of a translated proposition");
  bounds->add_option("corpus", dir, "corpus directory")->required();
  bounds->add_option("--prob", prob, "JSON map from state index to weight");
  bounds->add_flag("--uniform", uniform, "uniform weights over states");
  bounds->add_option("--side", side, "language of the formula")->check(CLI::Range(1, 2));
  bounds->add_option("--formula", formula, "formula to bound")->required();

  auto* dot = app.add_subcommand("export-dot", "write a Graphviz diagram");
  dot->add_option("corpus", dir, "corpus directory")->required();
  dot->add_option("--what", what, "algebra1, algebra2 or cross")
      ->required()
      ->check(CLI::IsMember({"algebra1", "algebra2", "cross"}));
  dot->add_flag("--full", full, "draw every cross pair instead of the reduction");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out_, err_);
    return code == 0 ? kOk : kUsage;
  }

  try {
    if (check->parsed()) return cmd_check(l1, l2, spec, mode);
    if (translate->parsed()) return cmd_translate(dir, direction, tmode, formula);
    if (joint->parsed()) return cmd_joint(dir);
    if (common->parsed()) return cmd_common(dir, host);
    if (classify->parsed()) return cmd_classify(dir);
    if (bounds->parsed()) return cmd_bounds(dir, prob, uniform, side, formula);
    if (dot->parsed()) return cmd_export(dir, what, full);
  } catch (const ParseError& e) {
    err_ << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const UsageError& e) {
    err_ << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const FileError& e) {
    err_ << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const CapExceededError& e) {
    err_ << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const ContradictionError& e) {
    err_ << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const Error& e) {
    // Inconsistent input and failed conversions.
    err_ << "error: " << e.what() << "\n";
    return kFailed;
  }
  return kUsage;
}

}  // namespace

std::string sha256_hex(const std::string& data) {
  unsigned char md[EVP_MAX_MD_SIZE];
  unsigned int len = 0;
  EVP_Digest(data.data(), data.size(), md, &len, EVP_sha256(), nullptr);
  static const char* hex = "0123456789abcdef";
  std::string out;
  for (unsigned int i = 0; i < len; ++i) {
    out += hex[md[i] >> 4];
    out += hex[md[i] & 15];
  }
  return out;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  return Runner(out, err).run(args);
}

}  // namespace xlang::cli
