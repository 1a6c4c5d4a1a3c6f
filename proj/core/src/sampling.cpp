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

#include "logdiff/sampling.hpp"

namespace logdiff {

long Sampler::integer(long lo, long hi) {
  return std::uniform_int_distribution<long>(lo, hi)(engine_);
}

bool Sampler::coin() { return integer(0, 1) == 1; }

Poly Sampler::poly(std::size_t l, unsigned max_degree, unsigned max_terms, long bound) {
  Poly out(l);
  const long terms = integer(0, max_terms);
  for (long k = 0; k < terms; ++k) {
    Monomial m(l);
    const long deg = integer(0, max_degree);
    for (long d = 0; d < deg; ++d) ++m[static_cast<std::size_t>(integer(0, long(l) - 1))];
    out.add_term(m, integer(-bound, bound));
  }
  return out;
}

Poly Sampler::nonzero_poly(std::size_t l, unsigned max_degree, unsigned max_terms,
                           long bound) {
  while (true) {
    Poly p = poly(l, max_degree, std::max(1u, max_terms), bound);
    if (!p.is_zero()) return p;
  }
}

Matrix<Rational> Sampler::integer_matrix(std::size_t n, long lo, long hi) {
  Matrix<Rational> m(n, n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = integer(lo, hi);
  }
  return m;
}

DiffOp Sampler::diffop(std::size_t l, unsigned max_order, unsigned max_coeff_degree,
                       unsigned max_terms) {
  DiffOp out(l);
  const long terms = integer(1, std::max(1u, max_terms));
  for (long k = 0; k < terms; ++k) {
    Monomial beta(l);
    const long ord = integer(0, max_order);
    for (long d = 0; d < ord; ++d) ++beta[static_cast<std::size_t>(integer(0, long(l) - 1))];
    out.add_term(beta, poly(l, max_coeff_degree, 2));
  }
  return out;
}

DiffOp Sampler::order_one_op(std::size_t l, unsigned max_coeff_degree) {
  DiffOp out = poly(l, max_coeff_degree, 2);
  for (std::size_t i = 0; i < l; ++i) {
    out.add_term(Monomial::unit(l, i), poly(l, max_coeff_degree, 2));
  }
  return out;
}

Derivation Sampler::derivation(std::size_t l, unsigned max_degree) {
  std::vector<Poly> coeffs;
  for (std::size_t i = 0; i < l; ++i) coeffs.push_back(poly(l, max_degree, 2));
  return Derivation(std::move(coeffs));
}

std::vector<unsigned> Sampler::word(std::size_t n, unsigned max_len) {
  std::vector<unsigned> w(static_cast<std::size_t>(integer(0, max_len)));
  for (unsigned& g : w) g = static_cast<unsigned>(integer(0, long(n) - 1));
  return w;
}

DiffOp Sampler::delta_element(std::span<const Derivation> gens, unsigned max_len,
                              unsigned max_coeff_degree, unsigned max_terms) {
  const std::size_t l = gens.front().nvars();
  DiffOp out(l);
  const long terms = integer(1, std::max(1u, max_terms));
  for (long k = 0; k < terms; ++k) {
    DiffOp prod = poly(l, max_coeff_degree, 2);
    if (prod.is_zero()) continue;
    for (unsigned g : word(gens.size(), max_len)) prod = prod * gens[g].to_diffop();
    out += prod;
  }
  return out;
}

}  // namespace logdiff
