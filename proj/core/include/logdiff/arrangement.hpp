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

// Central hyperplane arrangements, tangent derivations, and Saito's
// criterion for a candidate basis of Der(A).

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "logdiff/polyring.hpp"
#include "logdiff/weyl.hpp"

namespace logdiff {

class Arrangement {
 public:
  // Validates: non-empty, equal dimensions, pairwise non-proportional.
  // Throws std::invalid_argument otherwise.
  explicit Arrangement(std::vector<LinearForm> forms);

  std::size_t dim() const noexcept { return dim_; }
  std::size_t size() const noexcept { return forms_.size(); }
  const std::vector<LinearForm>& forms() const noexcept { return forms_; }
  // alpha_i as polynomials.
  const std::vector<Poly>& form_polys() const noexcept { return form_polys_; }
  // Q = alpha_1 ... alpha_r
  const Poly& defining_polynomial() const noexcept { return q_; }
  // beta_i = Q / alpha_i
  const std::vector<Poly>& cofactors() const noexcept { return cofactors_; }

 private:
  std::size_t dim_;
  std::vector<LinearForm> forms_;
  std::vector<Poly> form_polys_;
  Poly q_;
  std::vector<Poly> cofactors_;
};

Arrangement make_arrangement(std::vector<LinearForm> forms);

// delta(alpha_i) in alpha_i S for every form.
bool in_der_a(const Derivation& delta, const Arrangement& a);
// delta(Q) in Q S; equivalent to in_der_a.
bool in_der_q(const Derivation& delta, const Arrangement& a);

// sum_i x_i d_i
Derivation euler_derivation(std::size_t l);

// det(theta_i(x_j)), the coefficient matrix determinant.
Poly coefficient_determinant(std::span<const Derivation> thetas);

struct SaitoBasis {
  std::vector<Derivation> thetas;
  Rational lambda;
  std::vector<unsigned> degrees;
};

enum class SaitoFailureKind {
  kWrongCount,
  kDimensionMismatch,
  kNotTangent,
  kNotHomogeneous,
  kDeterminantMismatch,
};

struct SaitoIssue {
  SaitoFailureKind kind;
  // 0-based candidate index for per-derivation issues.
  std::optional<std::size_t> index;
  std::string message;
};

// Outcome of saito_check: either a verified basis or the list of failed
// conditions. The coefficient determinant is reported whenever it could be
// formed.
class SaitoReport {
 public:
  bool is_free() const noexcept { return basis_.has_value(); }
  const SaitoBasis& basis() const { return basis_.value(); }
  const std::vector<SaitoIssue>& issues() const noexcept { return issues_; }
  const std::optional<Poly>& determinant() const noexcept { return determinant_; }

 private:
  friend SaitoReport saito_check(const Arrangement&, std::span<const Derivation>);

  std::optional<SaitoBasis> basis_;
  std::vector<SaitoIssue> issues_;
  std::optional<Poly> determinant_;
};

SaitoReport saito_check(const Arrangement& a, std::span<const Derivation> thetas);

// For l = 2 every central arrangement is free with basis
// (theta_E, Q_y d_x - Q_x d_y) of degrees (1, r - 1) and lambda = -r.
std::vector<Derivation> planar_basis(const Arrangement& a);

// (x_1 d_1, ..., x_l d_l), the basis for Boolean arrangements.
std::vector<Derivation> boolean_basis(std::size_t l);

}  // namespace logdiff
