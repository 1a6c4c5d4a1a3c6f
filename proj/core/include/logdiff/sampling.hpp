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

// Seeded generators for random polynomials, matrices and operators. Output
// is a deterministic function of the seed.

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "logdiff/matrix.hpp"
#include "logdiff/polyring.hpp"
#include "logdiff/weyl.hpp"

namespace logdiff {

class Sampler {
 public:
  explicit Sampler(std::uint64_t seed) : engine_(seed) {}

  long integer(long lo, long hi);
  bool coin();

  // Up to max_terms terms of total degree <= max_degree, integer
  // coefficients in [-bound, bound]. May be zero.
  Poly poly(std::size_t l, unsigned max_degree, unsigned max_terms = 3, long bound = 3);
  Poly nonzero_poly(std::size_t l, unsigned max_degree, unsigned max_terms = 3,
                    long bound = 3);
  Matrix<Rational> integer_matrix(std::size_t n, long lo, long hi);

  DiffOp diffop(std::size_t l, unsigned max_order, unsigned max_coeff_degree,
                unsigned max_terms = 3);
  // sum_i c_i d_i plus a polynomial part, i.e. an operator of order <= 1.
  DiffOp order_one_op(std::size_t l, unsigned max_coeff_degree);
  Derivation derivation(std::size_t l, unsigned max_degree);

  // Random word of length <= max_len over generator indices 0..n-1, in no
  // particular order.
  std::vector<unsigned> word(std::size_t n, unsigned max_len);

  // A random element of the algebra generated by S and the given derivations:
  // up to max_terms summands coeff * g_{w1} ... g_{wq} with q <= max_len.
  DiffOp delta_element(std::span<const Derivation> gens, unsigned max_len,
                       unsigned max_coeff_degree, unsigned max_terms = 3);

 private:
  std::mt19937_64 engine_;
};

}  // namespace logdiff
