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


#ifndef XLANG_AXIOM_REPORT_HPP
#define XLANG_AXIOM_REPORT_HPP

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "xlang/side.hpp"

namespace xlang {

/// One proposition inside a witness tuple.
struct WitnessItem {
  std::string role;    // e.g. "lambda", "eta"
  Side side = Side::one;
  std::uint64_t index = 0;  // star-lattice index in the algebra of `side`
  std::string text;    // canonical rendering

  friend bool operator==(const WitnessItem&, const WitnessItem&) = default;
};

/// The first violating tuple of a failed condition.
struct Witness {
  std::vector<WitnessItem> items;
  std::string note;

  const WitnessItem* find(const std::string& role) const {
    for (const auto& it : items) {
      if (it.role == role) return &it;
    }
    return nullptr;
  }
  friend bool operator==(const Witness&, const Witness&) = default;
};

struct AxiomVerdict {
  std::string axiom;        // short id, e.g. "C1" or "I4"
  std::string description;
  bool passed = true;
  std::optional<Witness> witness;  // engaged iff !passed
};

/// Per-axiom verdicts in check order.
struct AxiomReport {
  std::vector<AxiomVerdict> verdicts;

  bool passed() const {
    for (const auto& v : verdicts) {
      if (!v.passed) return false;
    }
    return true;
  }
  const AxiomVerdict* find(const std::string& axiom) const {
    for (const auto& v : verdicts) {
      if (v.axiom == axiom) return &v;
    }
    return nullptr;
  }
  bool passed(const std::string& axiom) const {
    const AxiomVerdict* v = find(axiom);
    return v != nullptr && v->passed;
  }
  const AxiomVerdict* first_failure() const {
    for (const auto& v : verdicts) {
      if (!v.passed) return &v;
    }
    return nullptr;
  }
  void add(std::string axiom, std::string description, std::optional<Witness> witness) {
    const bool ok = !witness.has_value();
    verdicts.push_back({std::move(axiom), std::move(description), ok, std::move(witness)});
  }
  AxiomReport& merge(const AxiomReport& other) {
    verdicts.insert(verdicts.end(), other.verdicts.begin(), other.verdicts.end());
    return *this;
  }
};

/// Knobs shared by the exhaustive checkers.
struct CheckOptions {
  unsigned jobs = 1;
};

}  // namespace xlang

#endif  // XLANG_AXIOM_REPORT_HPP
