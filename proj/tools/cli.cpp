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

#include "cli.hpp"

#include <fstream>
#include <optional>
#include <sstream>
#include <stdexcept>

#include "CLI11.hpp"
#include "json.hpp"
#include "logdiff/arrangement.hpp"
#include "logdiff/exprparse.hpp"
#include "logdiff/fixtures.hpp"
#include "logdiff/jacobian.hpp"
#include "logdiff/linalg.hpp"
#include "logdiff/sampling.hpp"
#include "logdiff/tangent.hpp"

namespace logdiff::cli {

namespace {

using json = nlohmann::json;

// Raised for I/O, parse and validation problems; maps to exit code 2.
class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Loaded {
  Arrangement arrangement;
  std::vector<Derivation> basis;  // empty if none was supplied
};

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot open '" + path + "'");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw UsageError("'" + path + "': " + e.what());
  }
}

Rational coefficient_from_json(const json& v) {
  if (v.is_number_integer()) return Rational(v.get<long>());
  if (v.is_string()) return parse_rational(v.get<std::string>());
  throw UsageError("form coefficients must be integers or rational strings");
}

std::vector<Derivation> basis_from_json(const json& list, std::size_t l) {
  if (!list.is_array()) throw UsageError("\"basis\" must be an array of operator strings");
  std::vector<Derivation> out;
  for (const json& item : list) {
    if (!item.is_string()) throw UsageError("basis entries must be operator strings");
    const std::string text = item.get<std::string>();
    auto d = Derivation::from_diffop(parse_diffop(text, l));
    if (!d) throw UsageError("basis entry '" + text + "' is not a derivation");
    out.push_back(*std::move(d));
  }
  return out;
}

Loaded load_arrangement(const std::string& source) {
  if (source.starts_with("builtin:")) {
    Fixture fx = builtin_fixture(source);
    return {std::move(fx.arrangement), std::move(fx.basis)};
  }
  const json doc = read_json_file(source);
  if (!doc.is_object() || !doc.contains("dim") || !doc.contains("forms")) {
    throw UsageError("arrangement file needs \"dim\" and \"forms\"");
  }
  const auto l = doc.at("dim").get<std::size_t>();
  std::vector<LinearForm> forms;
  for (const json& row : doc.at("forms")) {
    if (!row.is_array() || row.size() != l) {
      throw UsageError("each form needs exactly " + std::to_string(l) + " coefficients");
    }
    std::vector<Rational> coeffs;
    for (const json& c : row) coeffs.push_back(coefficient_from_json(c));
    forms.emplace_back(std::move(coeffs));
  }
  Loaded loaded{Arrangement(std::move(forms)), {}};
  if (doc.contains("basis")) loaded.basis = basis_from_json(doc.at("basis"), l);
  return loaded;
}

std::vector<Derivation> resolve_basis(const Loaded& loaded, const std::string& basis_path) {
  if (basis_path.empty()) {
    if (loaded.basis.empty()) throw UsageError("no basis given; pass --basis FILE");
    return loaded.basis;
  }
  const json doc = read_json_file(basis_path);
  const json& list = doc.is_object() ? doc.at("basis") : doc;
  return basis_from_json(list, loaded.arrangement.dim());
}

std::string join_degrees(const std::vector<unsigned>& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + std::to_string(v[i]);
  return s + "]";
}

std::string word_text(const std::vector<unsigned>& w) {
  std::string s = "[";
  for (std::size_t i = 0; i < w.size(); ++i) s += (i ? ", " : "") + std::to_string(w[i]);
  return s + "]";
}

json repr_to_json(const DeltaRepr& repr, const RenderOptions& ro) {
  json words = json::array();
  for (const DeltaWord& w : repr.words) {
    words.push_back({{"coeff", render(w.coeff, ro)}, {"word", w.word}});
  }
  return words;
}

// ---------------------------------------------------------------------------

int check_free(const std::string& arrangement, const std::string& basis_path, bool aliases,
               std::ostream& out) {
  const Loaded loaded = load_arrangement(arrangement);
  const std::vector<Derivation> thetas = resolve_basis(loaded, basis_path);
  const RenderOptions ro{aliases};
  const SaitoReport report = saito_check(loaded.arrangement, thetas);
  if (report.is_free()) {
    out << "free, lambda = " << render(report.basis().lambda)
        << ", degrees = " << join_degrees(report.basis().degrees) << "\n";
    out << "Q = " << render(loaded.arrangement.defining_polynomial(), ro) << "\n";
    return kExitOk;
  }
  out << "not free under this candidate\n";
  for (const SaitoIssue& issue : report.issues()) out << "  - " << issue.message << "\n";
  if (report.determinant()) out << "determinant = " << render(*report.determinant(), ro) << "\n";
  out << "Q = " << render(loaded.arrangement.defining_polynomial(), ro) << "\n";
  return kExitNegative;
}

int decompose_cmd(const std::string& arrangement, const std::string& basis_path,
                  const std::string& op_text, std::optional<unsigned> t_max, bool as_json,
                  bool aliases, std::ostream& out) {
  const Loaded loaded = load_arrangement(arrangement);
  const std::vector<Derivation> thetas = resolve_basis(loaded, basis_path);
  const RenderOptions ro{aliases};
  const SaitoReport report = saito_check(loaded.arrangement, thetas);
  if (!report.is_free()) {
    std::string why = "basis fails Saito's criterion";
    for (const SaitoIssue& issue : report.issues()) why += "; " + issue.message;
    throw UsageError(why);
  }
  const DiffOp u = parse_diffop(op_text, loaded.arrangement.dim());
  if (t_max && *t_max == 0) throw UsageError("--tmax must be at least 1");

  DecomposeOptions options;
  options.t_max = t_max;
  const DecomposeResult result = decompose(u, loaded.arrangement, report.basis(), options);
  if (!result.ok()) {
    out << "not decomposable: " << result.failure().message << "\n";
    return kExitNegative;
  }
  const DeltaRepr& repr = result.repr();
  if (reassemble(repr) != u) throw std::logic_error("reassembly mismatch");

  if (as_json) {
    out << repr_to_json(repr, ro).dump() << "\n";
    return kExitOk;
  }
  for (std::size_t i = 0; i < thetas.size(); ++i) {
    out << "theta" << i + 1 << " = " << render(thetas[i], ro) << "\n";
  }
  out << "words:\n";
  for (const DeltaWord& w : repr.words) {
    out << "  " << word_text(w.word) << "  coeff " << render(w.coeff, ro) << "\n";
  }
  out << "reassembly verified\n";
  return kExitOk;
}

int tangent_cmd(const std::string& arrangement, const std::string& op_text, unsigned t_max,
                bool aliases, std::ostream& out) {
  if (t_max == 0) throw UsageError("--tmax must be at least 1");
  const Loaded loaded = load_arrangement(arrangement);
  const RenderOptions ro{aliases};
  const DiffOp u = parse_diffop(op_text, loaded.arrangement.dim());
  const auto table = tangency_table(u, loaded.arrangement, t_max);
  bool all = true;
  out << "form  t  result  witness\n";
  for (const TangencyCheck& row : table) {
    all = all && row.pass;
    out << row.form + 1 << "     " << row.t << "  " << (row.pass ? "pass" : "FAIL");
    if (!row.pass) {
      out << "    in u*alpha^" << row.t << " the coefficient of "
          << render(DiffOp::term(Poly::constant(u.nvars(), 1), *row.witness_beta), ro) << " is "
          << render(*row.witness_coeff, ro) << ", not divisible by alpha^" << row.t;
    }
    out << "\n";
  }
  out << "verdict: " << (all ? "tangent" : "not tangent") << " (t_max = " << t_max << ")\n";
  return all ? kExitOk : kExitNegative;
}

std::string matrix_text(const Matrix<Rational>& m) {
  std::string s = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    s += i ? ", [" : "[";
    for (std::size_t j = 0; j < m.cols(); ++j) s += (j ? ", " : "") + render(m(i, j));
    s += "]";
  }
  return s + "]";
}

std::string poly_list(const std::vector<Poly>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + render(v[i]);
  return s + ")";
}

std::string op_list(const std::vector<DiffOp>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? ", " : "") + render(v[i]);
  return s + ")";
}

int verify_cmd(const std::string& lemma, std::size_t l, unsigned p, unsigned trials,
               std::uint64_t seed, const std::string& arrangement, std::ostream& out) {
  if (l == 0) throw UsageError("--l must be positive");
  Sampler rng(seed);
  unsigned passed = 0;
  std::vector<std::string> failures;

  if (lemma == "sym-power") {
    for (unsigned trial = 0; trial < trials; ++trial) {
      const Matrix<Rational> m = rng.integer_matrix(l, -5, 5);
      if (check_sym_power_det(m, p)) {
        ++passed;
      } else {
        failures.push_back("trial " + std::to_string(trial) + ": M = " + matrix_text(m));
      }
    }
  } else if (lemma == "jacobian-power") {
    std::optional<Loaded> loaded;
    if (!arrangement.empty()) {
      loaded = load_arrangement(arrangement);
      if (loaded->arrangement.dim() != l) throw UsageError("--l differs from the arrangement");
      if (loaded->basis.empty()) throw UsageError("arrangement has no basis");
    }
    for (unsigned trial = 0; trial < trials; ++trial) {
      std::vector<DiffOp> theta;
      std::vector<Poly> f;
      if (loaded) {
        for (const Derivation& d : loaded->basis) theta.push_back(d.to_diffop());
      } else {
        for (std::size_t i = 0; i < l; ++i) theta.push_back(rng.order_one_op(l, 1));
      }
      if (trial == 0 && loaded) {
        f = coordinates(l);
      } else {
        for (std::size_t i = 0; i < l; ++i) f.push_back(rng.poly(l, 2, 2));
      }
      if (jacobian_power_identity_check(f, theta, p)) {
        ++passed;
      } else {
        failures.push_back("trial " + std::to_string(trial) + ": theta = " + op_list(theta) +
                           ", f = " + poly_list(f));
      }
    }
  } else if (lemma == "divisibility") {
    const std::string name =
        !arrangement.empty() ? arrangement
                             : (l == 2 ? "builtin:triple2" : "builtin:boolean" + std::to_string(l));
    const Loaded loaded = load_arrangement(name);
    if (loaded.arrangement.dim() != l) throw UsageError("--l differs from the arrangement");
    if (loaded.basis.empty()) throw UsageError("arrangement has no basis");
    const Poly& q = loaded.arrangement.defining_polynomial();
    const Poly divisor = pow(q, sym_power_exponent(l, p));
    const std::vector<Poly> f = coordinates(l);
    const std::size_t width = enumerate_wp(l, p).size();
    for (unsigned trial = 0; trial < trials; ++trial) {
      std::vector<DiffOp> entries;
      for (std::size_t k = 0; k < width; ++k) {
        entries.push_back(rng.delta_element(loaded.basis, p, 2));
      }
      const Poly jac = higher_jacobian(f, OpFamily(l, p, entries));
      if (exact_divide(jac, divisor)) {
        ++passed;
      } else {
        failures.push_back("trial " + std::to_string(trial) + ": family = " + op_list(entries));
      }
    }
  } else {
    throw UsageError("unknown lemma '" + lemma + "' (sym-power, jacobian-power, divisibility)");
  }

  out << lemma << " l=" << l << " p=" << p << " seed=" << seed << ": " << passed << "/"
      << trials << " passed\n";
  for (const std::string& f : failures) out << "FAIL " << f << "\n";
  return failures.empty() ? kExitOk : kExitNegative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Differential operators tangent to hyperplane arrangements"};
  app.require_subcommand(1);

  std::string arrangement;
  std::string basis;
  std::string op;
  std::optional<unsigned> decompose_tmax;
  unsigned tmax = 1;
  bool as_json = false;
  bool aliases = false;

  auto* free_cmd = app.add_subcommand("check-free", "Saito's criterion for a candidate basis");
  free_cmd->add_option("--arrangement", arrangement, "JSON file or builtin:NAME")->required();
  free_cmd->add_option("--basis", basis, "JSON file with a \"basis\" array");
  free_cmd->add_flag("--alias", aliases, "print x, y, z instead of x1, x2, x3");

  auto* dec_cmd = app.add_subcommand("decompose", "Rewrite a tangent operator in a Saito basis");
  dec_cmd->add_option("--arrangement", arrangement, "JSON file or builtin:NAME")->required();
  dec_cmd->add_option("--basis", basis, "JSON file with a \"basis\" array");
  dec_cmd->add_option("--op", op, "operator text")->required();
  dec_cmd->add_option("--tmax", decompose_tmax, "tangency pre-check truncation");
  dec_cmd->add_flag("--json", as_json, "emit the word list as JSON");
  dec_cmd->add_flag("--alias", aliases, "print x, y, z instead of x1, x2, x3");

  auto* tan_cmd = app.add_subcommand("tangent", "Truncated tangency test");
  tan_cmd->add_option("--arrangement", arrangement, "JSON file or builtin:NAME")->required();
  tan_cmd->add_option("--op", op, "operator text")->required();
  tan_cmd->add_option("--tmax", tmax, "largest power t to test")->required();
  tan_cmd->add_flag("--alias", aliases, "print x, y, z instead of x1, x2, x3");

  std::string lemma;
  std::size_t l = 2;
  unsigned p = 2;
  unsigned trials = 100;
  std::uint64_t seed = 1;
  auto* ver_cmd = app.add_subcommand("verify", "Randomized exact identity checks");
  ver_cmd->add_option("--lemma", lemma, "sym-power | jacobian-power | divisibility")
      ->required();
  ver_cmd->add_option("--l", l, "dimension");
  ver_cmd->add_option("--p", p, "power / operator order");
  ver_cmd->add_option("--trials", trials, "number of random instances");
  ver_cmd->add_option("--seed", seed, "RNG seed");
  ver_cmd->add_option("--arrangement", arrangement, "fixture for jacobian-power/divisibility");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (free_cmd->parsed()) return check_free(arrangement, basis, aliases, out);
    if (dec_cmd->parsed()) {
      return decompose_cmd(arrangement, basis, op, decompose_tmax, as_json, aliases, out);
    }
    if (tan_cmd->parsed()) return tangent_cmd(arrangement, op, tmax, aliases, out);
    if (ver_cmd->parsed()) return verify_cmd(lemma, l, p, trials, seed, arrangement, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "invalid input: " << e.what() << "\n";
    return kExitUsage;
  } catch (const nlohmann::json::exception& e) {
    err << "bad JSON: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace logdiff::cli
