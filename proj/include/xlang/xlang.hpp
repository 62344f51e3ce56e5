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


#ifndef XLANG_XLANG_HPP
#define XLANG_XLANG_HPP

#include "xlang/algebra.hpp"
#include "xlang/axiom_report.hpp"
#include "xlang/bitset.hpp"
#include "xlang/commonality.hpp"
#include "xlang/error.hpp"
#include "xlang/formula.hpp"
#include "xlang/implication.hpp"
#include "xlang/io.hpp"
#include "xlang/language.hpp"
#include "xlang/oracle.hpp"
#include "xlang/semantics.hpp"
#include "xlang/side.hpp"
#include "xlang/translation.hpp"

#endif  // XLANG_XLANG_HPP
