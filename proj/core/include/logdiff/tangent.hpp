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

// Operators tangent to an arrangement: truncated idealizer tests, the
// Q-power transport into Delta(A), and the constructive decomposition of a
// tangent operator into words in a Saito basis.

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "logdiff/arrangement.hpp"
#include "logdiff/jacobian.hpp"

namespace logdiff {

// coeff * g_{i1} ... g_{iq} with 1-based generator indices; an empty word is
// the pure polynomial term.
struct DeltaWord {
  Poly coeff;
  std::vector<unsigned> word;

  friend bool operator==(const DeltaWord&, const DeltaWord&) = default;
};

struct DeltaRepr {
  std::vector<Derivation> generators;
  std::vector<DeltaWord> words;
};

// Merges repeated words, drops zero coefficients, and sorts by word length
// then lexicographically.
void canonicalize(DeltaRepr& repr);

// sum coeff * g_{i1} ... g_{iq} in normal form. An empty representation
// reassembles to 0 in the generators' dimension.
DiffOp reassemble(const DeltaRepr& repr);

struct TangencyCheck {
  std::size_t form;  // 0-based
  unsigned t;
  bool pass;
  // First normal-form term of u * alpha^t whose coefficient escapes alpha^t S.
  std::optional<Monomial> witness_beta;
  std::optional<Poly> witness_coeff;
};

// One row per (form, t) with t in 1..t_max.
std::vector<TangencyCheck> tangency_table(const DiffOp& u, const Arrangement& a,
                                          unsigned t_max);

// u alpha_i^t in alpha_i^t Diff(S) for every form and every t <= t_max. This
// truncates the infinite idealizer condition.
bool is_tangent(const DiffOp& u, const Arrangement& a, unsigned t_max);

// u Q^t in Q^t Diff(S) for t <= t_max.
bool is_tangent_q(const DiffOp& u, const Arrangement& a, unsigned t_max);

// Q^C(p+1,2) u as a combination of words in (Q d_1, ..., Q d_l), p = order(u).
// Throws std::invalid_argument for u = 0.
DeltaRepr transport(const DiffOp& u, const Arrangement& a);

// d_i multiplied by Q, the generators used by transport.
std::vector<Derivation> q_partials(const Arrangement& a);

enum class DecomposeFailureKind {
  kNotTangent,       // truncated tangency pre-check failed
  kNonDivisible,     // Jacobian not divisible by gamma lambda^E Q^E
  kOrderDidNotDrop,  // residual kept its order after a level
};

struct DecomposeFailure {
  DecomposeFailureKind kind;
  unsigned level = 0;
  std::optional<WpIndex> index;
  std::optional<std::size_t> form;  // 0-based, for kNotTangent
  std::optional<unsigned> t;        // for kNotTangent
  std::string message;
};

class DecomposeResult {
 public:
  DecomposeResult(DeltaRepr repr) : value_(std::move(repr)) {}  // NOLINT
  DecomposeResult(DecomposeFailure failure) : value_(std::move(failure)) {}  // NOLINT

  bool ok() const noexcept { return std::holds_alternative<DeltaRepr>(value_); }
  const DeltaRepr& repr() const { return std::get<DeltaRepr>(value_); }
  const DecomposeFailure& failure() const { return std::get<DecomposeFailure>(value_); }

 private:
  std::variant<DeltaRepr, DecomposeFailure> value_;
};

struct DecomposeOptions {
  // Truncation for the tangency pre-check; defaults to max(1, order(u)).
  std::optional<unsigned> t_max;
  bool skip_tangency_check = false;
};

// Rewrites tangent operators as S-combinations of words in a Saito basis.
// Level data (theta^(p), the Jacobian rows of theta^(p), and the divisor
// gamma lambda^E Q^E) is cached per order, so one instance amortizes work
// over many operators. Not thread-safe because of that cache.
class Decomposer {
 public:
  // Uses the coordinate functions x1..xl as the ordered basis f of V*.
  Decomposer(Arrangement a, const SaitoBasis& basis);
  // f must be an ordered basis of V*; lambda is recomputed for it. Throws
  // std::invalid_argument if det(theta_i(f_j)) is not a nonzero multiple of Q.
  Decomposer(Arrangement a, const SaitoBasis& basis, std::vector<Poly> f);

  const Rational& lambda() const noexcept { return lambda_; }
  const Arrangement& arrangement() const noexcept { return arrangement_; }

  DecomposeResult run(const DiffOp& u, const DecomposeOptions& options = {});

 private:
  struct Level {
    OpFamily family;
    Matrix<Poly> rows;
    Poly divisor;
  };
  const Level& level(unsigned p);

  Arrangement arrangement_;
  std::vector<Derivation> thetas_;
  std::vector<Poly> f_;
  Rational lambda_;
  std::map<unsigned, Level> levels_;
};

DecomposeResult decompose(const DiffOp& u, const Arrangement& a, const SaitoBasis& basis,
                          const DecomposeOptions& options = {});

}  // namespace logdiff
