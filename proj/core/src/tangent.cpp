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

#include "logdiff/tangent.hpp"

#include <algorithm>
#include <stdexcept>

namespace logdiff {

namespace {

bool word_less(const DeltaWord& a, const DeltaWord& b) {
  if (a.word.size() != b.word.size()) return a.word.size() < b.word.size();
  return a.word < b.word;
}

DiffOp word_product(const std::vector<Derivation>& gens, const std::vector<unsigned>& word,
                    std::size_t l) {
  DiffOp prod = Poly::constant(l, 1);
  for (unsigned g : word) {
    if (g == 0 || g > gens.size()) throw std::out_of_range("word refers to a missing generator");
    prod = prod * gens[g - 1].to_diffop();
  }
  return prod;
}

std::vector<unsigned> to_word(const Monomial& beta) {
  std::vector<unsigned> word;
  for (std::size_t i = 0; i < beta.nvars(); ++i) word.insert(word.end(), beta[i], unsigned(i + 1));
  return word;
}

std::string describe(const WpIndex& idx) {
  std::string s = "(";
  for (std::size_t a = 0; a < idx.size(); ++a) {
    if (a) s += ",";
    s += std::to_string(idx[a]);
  }
  return s + ")";
}

}  // namespace

void canonicalize(DeltaRepr& repr) {
  std::sort(repr.words.begin(), repr.words.end(), word_less);
  std::vector<DeltaWord> merged;
  for (DeltaWord& w : repr.words) {
    if (!merged.empty() && merged.back().word == w.word) {
      merged.back().coeff += w.coeff;
    } else {
      merged.push_back(std::move(w));
    }
  }
  std::erase_if(merged, [](const DeltaWord& w) { return w.coeff.is_zero(); });
  repr.words = std::move(merged);
}

DiffOp reassemble(const DeltaRepr& repr) {
  std::size_t l = 0;
  if (!repr.generators.empty()) {
    l = repr.generators.front().nvars();
  } else if (!repr.words.empty()) {
    l = repr.words.front().coeff.nvars();
  }
  DiffOp out(l);
  for (const DeltaWord& w : repr.words) {
    out += w.coeff * word_product(repr.generators, w.word, l);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Tangency

namespace {

TangencyCheck check_one(const DiffOp& u, const Poly& alpha, std::size_t form, unsigned t) {
  const Poly alpha_t = pow(alpha, t);
  const DiffOp moved = u * DiffOp(alpha_t);
  TangencyCheck row{form, t, true, std::nullopt, std::nullopt};
  for (const auto& [beta, coeff] : moved.terms()) {
    if (!exact_divide(coeff, alpha_t)) {
      row.pass = false;
      row.witness_beta = beta;
      row.witness_coeff = coeff;
      break;
    }
  }
  return row;
}

}  // namespace

std::vector<TangencyCheck> tangency_table(const DiffOp& u, const Arrangement& a,
                                          unsigned t_max) {
  if (t_max == 0) throw std::invalid_argument("tangency check needs t_max >= 1");
  if (u.nvars() != a.dim()) throw DimensionMismatch(a.dim(), u.nvars());
  std::vector<TangencyCheck> rows;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (unsigned t = 1; t <= t_max; ++t) rows.push_back(check_one(u, a.form_polys()[i], i, t));
  }
  return rows;
}

bool is_tangent(const DiffOp& u, const Arrangement& a, unsigned t_max) {
  if (t_max == 0) throw std::invalid_argument("tangency check needs t_max >= 1");
  if (u.nvars() != a.dim()) throw DimensionMismatch(a.dim(), u.nvars());
  for (const Poly& alpha : a.form_polys()) {
    for (unsigned t = 1; t <= t_max; ++t) {
      if (!in_right_ideal(u * DiffOp(pow(alpha, t)), alpha, t)) return false;
    }
  }
  return true;
}

bool is_tangent_q(const DiffOp& u, const Arrangement& a, unsigned t_max) {
  if (t_max == 0) throw std::invalid_argument("tangency check needs t_max >= 1");
  if (u.nvars() != a.dim()) throw DimensionMismatch(a.dim(), u.nvars());
  const Poly& q = a.defining_polynomial();
  for (unsigned t = 1; t <= t_max; ++t) {
    if (!in_right_ideal(u * DiffOp(pow(q, t)), q, t)) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// Transport

std::vector<Derivation> q_partials(const Arrangement& a) {
  const std::size_t l = a.dim();
  std::vector<Derivation> gens;
  for (std::size_t i = 0; i < l; ++i) {
    std::vector<Poly> c(l, Poly(l));
    c[i] = a.defining_polynomial();
    gens.emplace_back(std::move(c));
  }
  return gens;
}

namespace {

// Appends words representing Q^C(p+1,2) u, p = order(u), to out.
void transport_into(const DiffOp& u, const Arrangement& a,
                    const std::vector<Derivation>& gens, std::vector<DeltaWord>& out) {
  if (u.is_zero()) return;
  const unsigned p = *u.order();
  const std::size_t l = a.dim();
  const Poly& q = a.defining_polynomial();
  if (p == 0) {
    out.push_back({u.polynomial_part(), {}});
    return;
  }

  // Q^p u = sum_beta f_beta (Q d)^beta + v' with order(v') < p.
  DiffOp residual = pow(q, p) * u;
  std::vector<DeltaWord> top;
  for (const auto& [beta, coeff] : u.terms()) {
    if (beta.degree() != p) continue;
    DeltaWord w{coeff, to_word(beta)};
    residual -= coeff * word_product(gens, w.word, l);
    top.push_back(std::move(w));
  }
  const Poly lift = pow(q, static_cast<unsigned>(binomial(p, 2).get_ui()));
  for (DeltaWord& w : top) {
    w.coeff = lift * w.coeff;
    out.push_back(std::move(w));
  }
  if (residual.is_zero()) return;
  const unsigned lower = *residual.order();
  if (lower >= p) throw std::logic_error("transport: order failed to drop");

  // Q^C(p,2) v' = Q^(C(p,2) - C(lower+1,2)) * Q^C(lower+1,2) v'.
  std::vector<DeltaWord> inner;
  transport_into(residual, a, gens, inner);
  const auto gap = binomial(p, 2).get_ui() - binomial(lower + 1, 2).get_ui();
  const Poly scale = pow(q, static_cast<unsigned>(gap));
  for (DeltaWord& w : inner) {
    w.coeff = scale * w.coeff;
    out.push_back(std::move(w));
  }
}

}  // namespace

DeltaRepr transport(const DiffOp& u, const Arrangement& a) {
  if (u.is_zero()) throw std::invalid_argument("transport: operator must be nonzero");
  if (u.nvars() != a.dim()) throw DimensionMismatch(a.dim(), u.nvars());
  DeltaRepr repr{q_partials(a), {}};
  transport_into(u, a, repr.generators, repr.words);
  canonicalize(repr);
  return repr;
}

// ---------------------------------------------------------------------------
// Decomposition

Decomposer::Decomposer(Arrangement a, const SaitoBasis& basis)
    : Decomposer(a, basis, coordinates(a.dim())) {}

Decomposer::Decomposer(Arrangement a, const SaitoBasis& basis, std::vector<Poly> f)
    : arrangement_(std::move(a)), thetas_(basis.thetas), f_(std::move(f)) {
  const std::size_t l = arrangement_.dim();
  if (thetas_.size() != l || f_.size() != l) {
    throw std::invalid_argument("Decomposer: basis and coordinates must have l entries");
  }
  Matrix<Poly> m(l, l, Poly(l));
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = 0; j < l; ++j) m(i, j) = thetas_[i](f_[j]);
  }
  const auto ratio = exact_divide(determinant(m), arrangement_.defining_polynomial());
  const auto scalar = ratio ? ratio->constant_value() : std::nullopt;
  if (!scalar || sgn(*scalar) == 0) {
    throw std::invalid_argument(
        "Decomposer: det(theta_i(f_j)) is not a nonzero scalar multiple of Q");
  }
  lambda_ = *scalar;
}

const Decomposer::Level& Decomposer::level(unsigned p) {
  auto it = levels_.find(p);
  if (it != levels_.end()) return it->second;
  const std::size_t l = arrangement_.dim();
  OpFamily family = theta_power_family(std::span<const Derivation>(thetas_), p);
  Matrix<Poly> rows = jacobian_matrix(f_, family);
  const unsigned e = sym_power_exponent(l, p);
  Poly divisor = pow(arrangement_.defining_polynomial() * lambda_, e);
  divisor *= Rational(gamma(l, p));
  return levels_
      .emplace(p, Level{std::move(family), std::move(rows), std::move(divisor)})
      .first->second;
}

DecomposeResult Decomposer::run(const DiffOp& u, const DecomposeOptions& options) {
  const std::size_t l = arrangement_.dim();
  if (u.nvars() != l) throw DimensionMismatch(l, u.nvars());

  if (!options.skip_tangency_check && !u.is_zero()) {
    const unsigned t_max = options.t_max.value_or(std::max(1u, *u.order()));
    for (const TangencyCheck& row : tangency_table(u, arrangement_, t_max)) {
      if (row.pass) continue;
      return DecomposeFailure{DecomposeFailureKind::kNotTangent,
                              *u.order(),
                              std::nullopt,
                              row.form,
                              row.t,
                              "operator fails the tangency test for form " +
                                  std::to_string(row.form + 1) + " at t = " +
                                  std::to_string(row.t)};
    }
  }

  DeltaRepr repr{thetas_, {}};
  DiffOp residual = u;
  while (!residual.is_zero() && *residual.order() >= 1) {
    const unsigned p = *residual.order();
    const Level& lv = level(p);
    const std::vector<Poly> u_row = jacobian_row(f_, residual, p);

    DiffOp peeled(l);
    for (std::size_t k = 0; k < lv.family.size(); ++k) {
      // d^p f / d^p theta^(p)[k := residual] = ubar_k * gamma (lambda Q)^E.
      Matrix<Poly> m = lv.rows;
      std::copy(u_row.begin(), u_row.end(), m.row(k).begin());
      const Poly jac = determinant(m);
      auto ubar = exact_divide(jac, lv.divisor);
      const WpIndex& idx = lv.family.indices()[k];
      if (!ubar) {
        return DecomposeFailure{DecomposeFailureKind::kNonDivisible, p, idx,
                                std::nullopt, std::nullopt,
                                "level " + std::to_string(p) + ", index " + describe(idx) +
                                    ": Jacobian is not divisible by gamma lambda^E Q^E; "
                                    "the operator is not in Delta(A)"};
      }
      if (ubar->is_zero()) continue;
      peeled += *ubar * lv.family.entries()[k];
      repr.words.push_back({*std::move(ubar), idx.entries()});
    }
    residual -= peeled;
    if (!residual.is_zero() && *residual.order() >= p) {
      return DecomposeFailure{DecomposeFailureKind::kOrderDidNotDrop, p, std::nullopt,
                              std::nullopt, std::nullopt,
                              "level " + std::to_string(p) +
                                  ": residual order did not drop; the operator is not in "
                                  "Delta(A)"};
    }
  }
  if (!residual.is_zero()) repr.words.push_back({residual.polynomial_part(), {}});
  canonicalize(repr);

  if (reassemble(repr) != u) throw std::logic_error("decompose: reassembly mismatch");
  return repr;
}

DecomposeResult decompose(const DiffOp& u, const Arrangement& a, const SaitoBasis& basis,
                          const DecomposeOptions& options) {
  Decomposer d(a, basis);
  return d.run(u, options);
}

}  // namespace logdiff
