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

#include "logdiff/arrangement.hpp"

#include <numeric>
#include <stdexcept>

#include "logdiff/linalg.hpp"

namespace logdiff {

namespace {

bool proportional(const LinearForm& a, const LinearForm& b) {
  for (std::size_t i = 0; i < a.nvars(); ++i) {
    for (std::size_t j = i + 1; j < a.nvars(); ++j) {
      if (a.coeffs()[i] * b.coeffs()[j] != a.coeffs()[j] * b.coeffs()[i]) return false;
    }
  }
  // All 2x2 minors vanish; nonzero forms are then proportional.
  return true;
}

}  // namespace

Arrangement::Arrangement(std::vector<LinearForm> forms) : forms_(std::move(forms)) {
  if (forms_.empty()) throw std::invalid_argument("arrangement needs at least one hyperplane");
  dim_ = forms_.front().nvars();
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    if (forms_[i].nvars() != dim_) throw DimensionMismatch(dim_, forms_[i].nvars());
    for (std::size_t j = 0; j < i; ++j) {
      if (proportional(forms_[i], forms_[j])) {
        throw std::invalid_argument("forms " + std::to_string(j + 1) + " and " +
                                    std::to_string(i + 1) +
                                    " are proportional (Q would not be reduced)");
      }
    }
  }
  q_ = Poly::constant(dim_, 1);
  for (const LinearForm& f : forms_) {
    form_polys_.push_back(f.to_poly());
    q_ *= form_polys_.back();
  }
  for (std::size_t i = 0; i < forms_.size(); ++i) {
    Poly beta = Poly::constant(dim_, 1);
    for (std::size_t j = 0; j < forms_.size(); ++j) {
      if (j != i) beta *= form_polys_[j];
    }
    cofactors_.push_back(std::move(beta));
  }
}

Arrangement make_arrangement(std::vector<LinearForm> forms) {
  return Arrangement(std::move(forms));
}

bool in_der_a(const Derivation& delta, const Arrangement& a) {
  if (delta.nvars() != a.dim()) throw DimensionMismatch(a.dim(), delta.nvars());
  for (const Poly& alpha : a.form_polys()) {
    if (!exact_divide(delta(alpha), alpha)) return false;
  }
  return true;
}

bool in_der_q(const Derivation& delta, const Arrangement& a) {
  if (delta.nvars() != a.dim()) throw DimensionMismatch(a.dim(), delta.nvars());
  const Poly& q = a.defining_polynomial();
  return exact_divide(delta(q), q).has_value();
}

Derivation euler_derivation(std::size_t l) {
  if (l == 0) throw std::invalid_argument("euler_derivation: dimension must be positive");
  return Derivation(coordinates(l));
}

Poly coefficient_determinant(std::span<const Derivation> thetas) {
  const std::size_t l = thetas.size();
  if (l == 0) throw std::invalid_argument("coefficient_determinant: no derivations");
  Matrix<Poly> m(l, l, Poly(l));
  for (std::size_t i = 0; i < l; ++i) {
    if (thetas[i].nvars() != l) throw DimensionMismatch(l, thetas[i].nvars());
    for (std::size_t j = 0; j < l; ++j) m(i, j) = thetas[i][j];
  }
  return determinant(m);
}

SaitoReport saito_check(const Arrangement& a, std::span<const Derivation> thetas) {
  SaitoReport report;
  const std::size_t l = a.dim();
  if (thetas.size() != l) {
    report.issues_.push_back({SaitoFailureKind::kWrongCount, std::nullopt,
                              "expected " + std::to_string(l) + " derivations, got " +
                                  std::to_string(thetas.size())});
    return report;
  }
  for (std::size_t i = 0; i < l; ++i) {
    if (thetas[i].nvars() != l) {
      report.issues_.push_back({SaitoFailureKind::kDimensionMismatch, i,
                                "derivation " + std::to_string(i + 1) +
                                    " lives in the wrong dimension"});
    }
  }
  if (!report.issues_.empty()) return report;

  std::vector<unsigned> degrees;
  for (std::size_t i = 0; i < l; ++i) {
    if (!in_der_a(thetas[i], a)) {
      report.issues_.push_back({SaitoFailureKind::kNotTangent, i,
                                "derivation " + std::to_string(i + 1) +
                                    " is not tangent to the arrangement"});
    }
    auto deg = thetas[i].homogeneous_degree();
    if (!deg) {
      report.issues_.push_back({SaitoFailureKind::kNotHomogeneous, i,
                                "derivation " + std::to_string(i + 1) +
                                    (thetas[i].is_zero() ? " is zero"
                                                         : " is not homogeneous")});
    } else {
      degrees.push_back(*deg);
    }
  }

  Poly det = coefficient_determinant(thetas);
  report.determinant_ = det;
  const Poly& q = a.defining_polynomial();
  std::optional<Rational> lambda;
  if (!det.is_zero() && det.leading_monomial() == q.leading_monomial()) {
    Rational candidate = det.leading_coefficient() / q.leading_coefficient();
    if (det == q * candidate) lambda = candidate;
  }
  if (!lambda) {
    std::string why = "coefficient determinant is not a nonzero multiple of Q";
    if (det.is_zero()) {
      why += " (it vanishes)";
    } else if (*det.degree() != *q.degree()) {
      why += " (degree " + std::to_string(*det.degree()) + " != " +
             std::to_string(*q.degree()) + ")";
    }
    report.issues_.push_back({SaitoFailureKind::kDeterminantMismatch, std::nullopt, why});
  }

  if (report.issues_.empty()) {
    report.basis_ = SaitoBasis{{thetas.begin(), thetas.end()}, *lambda, std::move(degrees)};
  }
  return report;
}

std::vector<Derivation> planar_basis(const Arrangement& a) {
  if (a.dim() != 2) throw std::invalid_argument("planar_basis needs a 2-dimensional arrangement");
  const Poly& q = a.defining_polynomial();
  return {euler_derivation(2), Derivation({q.derivative(1), -q.derivative(0)})};
}

std::vector<Derivation> boolean_basis(std::size_t l) {
  std::vector<Derivation> out;
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<Poly> coeffs(l, Poly(l));
    coeffs[i] = Poly::variable(l, i);
    out.emplace_back(std::move(coeffs));
  }
  return out;
}

}  // namespace logdiff
