/*
 * Copyright 2026 The folab Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FOLAB_BOUNDS_BOUND_CALC_HPP_
#define FOLAB_BOUNDS_BOUND_CALC_HPP_

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "folab/bounds/exactreal.hpp"
#include "folab/bounds/log2real.hpp"

namespace folab {

/// An assumed adversary advantage: a concrete probability, or symbolic
/// "unknown", in which case dependent terms are reported as formulas in
/// the unknown.
struct Advantage {
  std::optional<double> value;

  static Advantage unknown() { return {}; }
  static Advantage of(double v) { return {v}; }
  bool known() const { return value.has_value(); }
};

enum class BoundModel { kRom, kQrom };

/// Inputs to the end-to-end bound assemblies. Query counts are carried in
/// extended precision so budgets up to 2^64 stay exact; space sizes enter
/// as base-2 logarithms.
struct BoundInputs {
  long double q_g = 0;
  long double q_h = 0;
  long double q_d = 0;
  long double depth = 0;   // query depth d (classical harness: total queries)
  long double width = 1;   // query width w (classical harness: 1)
  long double log2_m = 0;  // log2 |M|
  long double log2_r = 0;  // log2 |R|
  long double gamma = 0;   // spreadness, in bits
  double delta_ik = 0;
  double sigma = 0;
  std::optional<double> beta;
  Advantage adv_ow = Advantage::unknown();
  Advantage adv_ind = Advantage::unknown();
  Advantage adv_ffp_cpa = Advantage::unknown();
  Advantage adv_ffp_ng = Advantage::unknown();
  BoundModel model = BoundModel::kRom;
};

/// A term value: numeric (log-domain) or a rendered formula in an unknown
/// advantage.
struct TermValue {
  Log2Real value = Log2Real::zero();
  bool symbolic = false;
  std::string expr;

  double to_probability() const { return symbolic ? 1.0 : value.to_probability(); }
};

struct BoundTerm {
  std::string formula_id;
  TermValue v;
  std::vector<std::pair<std::string, std::string>> inputs;  // hexfloat values
  std::string provenance;
};

struct BoundRoute {
  std::string name;  // "ow" or "ind"
  TermValue total;
  std::vector<std::string> term_ids;
};

struct BoundReport {
  std::string title;
  std::vector<BoundTerm> terms;
  std::vector<BoundRoute> routes;
  std::optional<std::string> best_route;  // minimal numeric route
  std::vector<std::string> diagnostics;

  const BoundTerm* find_term(const std::string& id) const;
  const BoundRoute* find_route(const std::string& name) const;
};

/// ROM composition: passive security route (one-wayness or
/// indistinguishability) plus the failing-plaintext term and the
/// spreadness term 2 q_D 2^-gamma.
BoundReport rom_main_bound(const BoundInputs& inputs);

/// QROM passive-security terms with the d -> d + q_D and q -> q + q_D
/// substitutions: 4 sqrt((d+q_D) Adv_IND) + 8(q+q_D)/sqrt(|M|), and
/// 8 (d+q_D) sqrt(w Adv_OW).
std::pair<BoundTerm, BoundTerm> qrom_passive_terms(const BoundInputs& inputs);

/// QROM composition against an assumed FFP-CPA advantage, with
/// eps_gamma = 24 q_D (q_G + 4 q_D) 2^(-gamma/2).
BoundReport qrom_bound_ffpcpa(const BoundInputs& inputs);

/// QROM composition against the one-query failure-distinguishing
/// advantage, Chebyshev failure term
/// eps_delta = delta + (3 + 2 delta) sqrt(C) q_G sigma (requires
/// sqrt(C) q_G sigma <= 1/2, else the bound is reported trivial) and
/// eps_gamma = 24 q_D (q_G + 2 q_D) 2^(-gamma/2) + 4 q_D 2^(-gamma).
BoundReport qrom_main_bound(const BoundInputs& inputs);

/// Same assembly with the Gaussian-tail failure term
/// eps_delta = delta + 2 beta^(-1/2) sqrt(ln(2 C sqrt(beta) q_G^2)).
BoundReport qrom_main_bound_gaussian(const BoundInputs& inputs);

/// Re-evaluates a term from its recorded inputs; reproduces the stored
/// value bit-for-bit.
TermValue recompute_term(const BoundTerm& term);

/// Independent high-precision evaluation of a term (exact rationals where
/// the formula is rational, 768-bit floats for roots). Symbolic terms have
/// no exact value.
std::optional<ExactReal> exact_term(const BoundTerm& term);

/// Formatting helpers shared with the report writers.
std::string format_log2(const Log2Real& v);
std::string hexfloat(long double v);
long double parse_hexfloat(const std::string& text);

}  // namespace folab

#endif  // FOLAB_BOUNDS_BOUND_CALC_HPP_
