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

// Higher Jacobians: for f in S^l and a family u indexed by W_p,
//   d^p f / d^p u = det([u_i, f_{j1}, ..., f_{jp}](1))_{i, j in W_p}.

#include <cstddef>
#include <span>
#include <vector>

#include "logdiff/linalg.hpp"
#include "logdiff/weyl.hpp"

namespace logdiff {

// One operator per element of W_p, stored in enumerate_wp order.
class OpFamily {
 public:
  OpFamily(std::size_t l, unsigned p, std::vector<DiffOp> entries);

  std::size_t dim() const noexcept { return dim_; }
  unsigned p() const noexcept { return p_; }
  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<WpIndex>& indices() const noexcept { return indices_; }
  const std::vector<DiffOp>& entries() const noexcept { return entries_; }

  // Position of idx in W_p; throws std::out_of_range if idx is not in W_p.
  std::size_t position(const WpIndex& idx) const;
  const DiffOp& at(const WpIndex& idx) const { return entries_[position(idx)]; }

  friend bool operator==(const OpFamily&, const OpFamily&) = default;

 private:
  std::size_t dim_;
  unsigned p_;
  std::vector<WpIndex> indices_;
  std::vector<DiffOp> entries_;
};

// theta^(p): entry i is theta_{i1} ... theta_{ip}; p = 0 gives the single
// entry 1.
OpFamily theta_power_family(std::span<const DiffOp> theta, unsigned p);
OpFamily theta_power_family(std::span<const Derivation> theta, unsigned p);

// Copy of u with entry j replaced by w.
OpFamily substitute_entry(const OpFamily& u, const DiffOp& w, const WpIndex& j);

// Row of the Jacobian matrix contributed by a single operator w:
// ([w, f_{j1}, ..., f_{jp}](1)) over j in W_p.
std::vector<Poly> jacobian_row(std::span<const Poly> f, const DiffOp& w, unsigned p);

Matrix<Poly> jacobian_matrix(std::span<const Poly> f, const OpFamily& u);

Poly higher_jacobian(std::span<const Poly> f, const OpFamily& u);

// Checks d^p f / d^p theta^(p) == gamma_{l,p} (d^1 f / d^1 theta)^C(p+l-1, l).
// Every theta_i must have order at most 1.
bool jacobian_power_identity_check(std::span<const Poly> f,
                                   std::span<const DiffOp> theta, unsigned p);

// Permanent of the matrix ([theta_a, f_b](1)) for a word theta_1 ... theta_p
// of derivations; equals [theta_1 ... theta_p, f_1, ..., f_p](1). Cross-check
// only; the Jacobian itself always goes through iterated commutators.
Poly derivation_word_permanent(std::span<const DiffOp> word, std::span<const Poly> fs);

}  // namespace logdiff
