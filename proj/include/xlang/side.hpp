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


#ifndef XLANG_SIDE_HPP
#define XLANG_SIDE_HPP

#include <string>

namespace xlang {

/// Which of the two languages a value belongs to.
enum class Side { one = 0, two = 1 };

inline constexpr Side other(Side s) { return s == Side::one ? Side::two : Side::one; }
inline constexpr int number(Side s) { return s == Side::one ? 1 : 2; }

/// Source and target of a translation map.
struct Direction {
  Side from = Side::one;
  Side to = Side::two;

  static constexpr Direction one_to_two() { return {Side::one, Side::two}; }
  static constexpr Direction two_to_one() { return {Side::two, Side::one}; }
  static constexpr Direction from_side(Side s) { return {s, other(s)}; }

  friend bool operator==(const Direction&, const Direction&) = default;
};

/// Renders as `1>2` or `2>1`.
inline std::string to_string(Direction d) {
  return std::to_string(number(d.from)) + ">" + std::to_string(number(d.to));
}

enum class Mode { inner, outer };

inline std::string to_string(Mode m) { return m == Mode::inner ? "inner" : "outer"; }

}  // namespace xlang

#endif  // XLANG_SIDE_HPP
