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

#include "logdiff/jacobian.hpp"

#include <algorithm>
#include <stdexcept>

namespace logdiff {

OpFamily::OpFamily(std::size_t l, unsigned p, std::vector<DiffOp> entries)
    : dim_(l), p_(p), indices_(enumerate_wp(l, p)), entries_(std::move(entries)) {
  if (entries_.size() != indices_.size()) {
    throw std::invalid_argument("OpFamily: expected " + std::to_string(indices_.size()) +
                                " entries, got " + std::to_string(entries_.size()));
  }
  for (const DiffOp& e : entries_) {
    if (e.nvars() != l) throw DimensionMismatch(l, e.nvars());
  }
}

std::size_t OpFamily::position(const WpIndex& idx) const {
  auto it = std::lower_bound(indices_.begin(), indices_.end(), idx);
  if (it == indices_.end() || *it != idx) {
    throw std::out_of_range("index is not an element of W_p");
  }
  return static_cast<std::size_t>(it - indices_.begin());
}

OpFamily theta_power_family(std::span<const DiffOp> theta, unsigned p) {
  const std::size_t l = theta.size();
  if (l == 0) throw std::invalid_argument("theta_power_family: empty tuple");
  std::vector<DiffOp> entries;
  for (const WpIndex& idx : enumerate_wp(l, p)) {
    DiffOp prod = Poly::constant(l, 1);
    for (unsigned i : idx.entries()) prod = prod * theta[i - 1];
    entries.push_back(std::move(prod));
  }
  return OpFamily(l, p, std::move(entries));
}

OpFamily theta_power_family(std::span<const Derivation> theta, unsigned p) {
  std::vector<DiffOp> ops;
  ops.reserve(theta.size());
  for (const Derivation& d : theta) ops.push_back(d.to_diffop());
  return theta_power_family(std::span<const DiffOp>(ops), p);
}

OpFamily substitute_entry(const OpFamily& u, const DiffOp& w, const WpIndex& j) {
  std::vector<DiffOp> entries = u.entries();
  entries[u.position(j)] = w;
  return OpFamily(u.dim(), u.p(), std::move(entries));
}

namespace {

// Walks W_p in lex order while sharing commutator prefixes between tuples
// with a common head.
void fill_row(std::span<const Poly> f, const DiffOp& partial, unsigned start,
              unsigned remaining, std::vector<Poly>& out) {
  if (remaining == 0) {
    out.push_back(value_at_one(partial));
    return;
  }
  for (unsigned j = start; j < f.size(); ++j) {
    fill_row(f, bracket(partial, f[j]), j, remaining - 1, out);
  }
}

}  // namespace

std::vector<Poly> jacobian_row(std::span<const Poly> f, const DiffOp& w, unsigned p) {
  if (f.size() != w.nvars()) throw DimensionMismatch(w.nvars(), f.size());
  std::vector<Poly> row;
  fill_row(f, w, 0, p, row);
  return row;
}

Matrix<Poly> jacobian_matrix(std::span<const Poly> f, const OpFamily& u) {
  if (f.size() != u.dim()) throw DimensionMismatch(u.dim(), f.size());
  Matrix<Poly> m(u.size(), u.size(), Poly(u.dim()));
  for (std::size_t i = 0; i < u.size(); ++i) {
    std::vector<Poly> row = jacobian_row(f, u.entries()[i], u.p());
    std::move(row.begin(), row.end(), m.row(i).begin());
  }
  return m;
}

Poly higher_jacobian(std::span<const Poly> f, const OpFamily& u) {
  return determinant(jacobian_matrix(f, u));
}

bool jacobian_power_identity_check(std::span<const Poly> f,
                                   std::span<const DiffOp> theta, unsigned p) {
  for (const DiffOp& t : theta) {
    if (t.order().value_or(0) > 1) {
      throw std::invalid_argument("jacobian_power_identity_check: theta must have order <= 1");
    }
  }
  const std::size_t l = theta.size();
  const Poly lhs = higher_jacobian(f, theta_power_family(theta, p));
  const Poly first = higher_jacobian(f, theta_power_family(theta, 1));
  Poly rhs = pow(first, sym_power_exponent(l, p));
  rhs *= Rational(gamma(l, p));
  return lhs == rhs;
}

Poly derivation_word_permanent(std::span<const DiffOp> word, std::span<const Poly> fs) {
  if (word.size() != fs.size()) {
    throw std::invalid_argument("derivation_word_permanent: word and tuple sizes differ");
  }
  const std::size_t n = word.size();
  const std::size_t l = n == 0 ? (fs.empty() ? 0 : fs[0].nvars()) : word[0].nvars();
  Matrix<Poly> m(n, n, Poly(l));
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = 0; b < n; ++b) m(a, b) = value_at_one(bracket(word[a], fs[b]));
  }
  return permanent(m);
}

}  // namespace logdiff
