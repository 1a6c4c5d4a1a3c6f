// Copyright 2026 The logdiff Authors
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

#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "logdiff/arrangement.hpp"

namespace logdiff {

// A named arrangement with a candidate basis of Der(A). For free fixtures the
// basis passes saito_check; for non-free ones it is a deliberately failing
// candidate.
struct Fixture {
  std::string name;
  Arrangement arrangement;
  std::vector<Derivation> basis;
  bool free;
};

// Known names: boolean1, boolean2, boolean3, triple2, quad2, generic3.
// Accepts an optional "builtin:" prefix. Throws std::invalid_argument for
// unknown names.
Fixture builtin_fixture(std::string_view name);
std::vector<std::string> builtin_fixture_names();

}  // namespace logdiff
