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

#include "logdiff/fixtures.hpp"

#include <stdexcept>

namespace logdiff {

namespace {

LinearForm form(std::vector<Rational> c) { return LinearForm(std::move(c)); }

Fixture boolean(std::size_t l) {
  std::vector<LinearForm> forms;
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<Rational> c(l, 0);
    c[i] = 1;
    forms.push_back(form(std::move(c)));
  }
  return {"boolean" + std::to_string(l), Arrangement(std::move(forms)), boolean_basis(l),
          true};
}

}  // namespace

std::vector<std::string> builtin_fixture_names() {
  return {"boolean1", "boolean2", "boolean3", "triple2", "quad2", "generic3"};
}

Fixture builtin_fixture(std::string_view name) {
  if (name.starts_with("builtin:")) name.remove_prefix(8);

  if (name == "boolean1") return boolean(1);
  if (name == "boolean2") return boolean(2);
  if (name == "boolean3") return boolean(3);

  if (name == "triple2") {
    // xy(x+y) with (theta_E, x^2 dx - y^2 dy); lambda = -1.
    Arrangement a({form({1, 0}), form({0, 1}), form({1, 1})});
    const Poly x = Poly::variable(2, 0);
    const Poly y = Poly::variable(2, 1);
    std::vector<Derivation> basis{euler_derivation(2), Derivation({x * x, -(y * y)})};
    return {"triple2", std::move(a), std::move(basis), true};
  }
  if (name == "quad2") {
    Arrangement a({form({1, 0}), form({0, 1}), form({1, 1}), form({1, -1})});
    auto basis = planar_basis(a);
    return {"quad2", std::move(a), std::move(basis), true};
  }
  if (name == "generic3") {
    // xyz(x+y+z): not free. Der(A) has only the Euler derivation in degree 1,
    // so every degree-(1,1,2) candidate has a vanishing determinant.
    Arrangement a({form({1, 0, 0}), form({0, 1, 0}), form({0, 0, 1}), form({1, 1, 1})});
    const Poly x = Poly::variable(3, 0);
    const Poly y = Poly::variable(3, 1);
    const Poly zero(3);
    Derivation euler = euler_derivation(3);
    Derivation twice(std::vector<Poly>{x * Rational(2), y * Rational(2),
                                       Poly::variable(3, 2) * Rational(2)});
    Derivation quadratic({x * y, -(x * y), zero});
    return {"generic3", std::move(a), {euler, twice, quadratic}, false};
  }
  throw std::invalid_argument("unknown builtin arrangement '" + std::string(name) + "'");
}

}  // namespace logdiff
