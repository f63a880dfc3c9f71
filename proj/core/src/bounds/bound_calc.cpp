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

#include "folab/bounds/bound_calc.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <map>

#include "folab/errors.hpp"
#include "folab/stats/search_bounds.hpp"

namespace folab {

namespace {

constexpr const char* kUnknown = "unknown";

std::string format_exponent(long double e) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.6Lg", e);
  return buf;
}

std::string pow2_str(const Log2Real& v) {
  if (v.is_zero()) {
    return "0";
  }
  return "2^{" + format_exponent(v.log2()) + "}";
}

using InputMap = std::map<std::string, std::string>;

InputMap to_map(const BoundTerm& term) {
  InputMap m;
  for (const auto& [k, v] : term.inputs) {
    m[k] = v;
  }
  return m;
}

long double in_ld(const InputMap& m, const std::string& key) {
  auto it = m.find(key);
  if (it == m.end()) {
    throw DomainError("bound term: missing input " + key);
  }
  return parse_hexfloat(it->second);
}

bool in_known(const InputMap& m, const std::string& key) {
  auto it = m.find(key);
  if (it == m.end()) {
    throw DomainError("bound term: missing input " + key);
  }
  return it->second != kUnknown;
}

// --- numeric (log-domain) term evaluation -----------------------------------

TermValue symbolic_value(std::string expr) {
  TermValue t;
  t.symbolic = true;
  t.expr = std::move(expr);
  return t;
}

TermValue numeric_value(Log2Real v) {
  TermValue t;
  t.value = v;
  return t;
}

TermValue eval_term(const std::string& id, const InputMap& in) {
  if (id == "rom.passive.ow") {
    const long double coeff = in_ld(in, "q_ro") + in_ld(in, "q_d") + 1.0L;
    if (!in_known(in, "adv_ow")) {
      return symbolic_value(pow2_str(Log2Real::from_value(coeff)) +
                            " * Adv_OW");
    }
    return numeric_value(Log2Real::from_value(coeff) *
                         Log2Real::from_value(in_ld(in, "adv_ow")));
  }
  if (id == "rom.passive.ind") {
    const long double coeff =
        2.0L * (in_ld(in, "q_ro") + in_ld(in, "q_d")) + 1.0L;
    Log2Real guess_term = Log2Real::from_value(coeff) *
                          Log2Real::from_log2(-in_ld(in, "log2_m"));
    if (!in_known(in, "adv_ind")) {
      return symbolic_value("3 * Adv_IND + " + pow2_str(guess_term));
    }
    return numeric_value(Log2Real::from_value(3.0L) *
                             Log2Real::from_value(in_ld(in, "adv_ind")) +
                         guess_term);
  }
  if (id == "rom.ffp_cpa" || id == "qrom.ffp_cpa") {
    const long double coeff = in_ld(in, "q_d") + 1.0L;
    if (!in_known(in, "adv_ffp_cpa")) {
      return symbolic_value(pow2_str(Log2Real::from_value(coeff)) +
                            " * Adv_FFP-CPA");
    }
    return numeric_value(Log2Real::from_value(coeff) *
                         Log2Real::from_value(in_ld(in, "adv_ffp_cpa")));
  }
  if (id == "rom.spread") {
    return numeric_value(Log2Real::from_value(2.0L * in_ld(in, "q_d")) *
                         Log2Real::from_log2(-in_ld(in, "gamma")));
  }
  if (id == "qrom.passive.ind") {
    const long double dq = in_ld(in, "d") + in_ld(in, "q_d");
    Log2Real additive =
        Log2Real::from_value(8.0L * (in_ld(in, "q") + in_ld(in, "q_d"))) *
        Log2Real::from_log2(-in_ld(in, "log2_m") / 2.0L);
    if (!in_known(in, "adv_ind")) {
      return symbolic_value(
          "4 * sqrt(" + pow2_str(Log2Real::from_value(dq)) +
          " * Adv_IND) + " + pow2_str(additive));
    }
    Log2Real root = (Log2Real::from_value(dq) *
                     Log2Real::from_value(in_ld(in, "adv_ind")))
                        .sqrt();
    return numeric_value(Log2Real::from_value(4.0L) * root + additive);
  }
  if (id == "qrom.passive.ow") {
    const long double coeff = 8.0L * (in_ld(in, "d") + in_ld(in, "q_d"));
    if (!in_known(in, "adv_ow")) {
      Log2Real c = Log2Real::from_value(coeff) *
                   Log2Real::from_value(in_ld(in, "w")).sqrt();
      return symbolic_value(pow2_str(c) + " * sqrt(Adv_OW)");
    }
    Log2Real root = (Log2Real::from_value(in_ld(in, "w")) *
                     Log2Real::from_value(in_ld(in, "adv_ow")))
                        .sqrt();
    return numeric_value(Log2Real::from_value(coeff) * root);
  }
  if (id == "qrom.eps_gamma.ffpcpa") {
    const long double q_d = in_ld(in, "q_d");
    const long double coeff = 24.0L * q_d * (in_ld(in, "q_g") + 4.0L * q_d);
    return numeric_value(Log2Real::from_value(coeff) *
                         Log2Real::from_log2(-in_ld(in, "gamma") / 2.0L));
  }
  if (id == "qrom.eps_gamma.main") {
    const long double q_d = in_ld(in, "q_d");
    const long double gamma = in_ld(in, "gamma");
    Log2Real half = Log2Real::from_value(24.0L * q_d *
                                         (in_ld(in, "q_g") + 2.0L * q_d)) *
                    Log2Real::from_log2(-gamma / 2.0L);
    Log2Real full = Log2Real::from_value(4.0L * q_d) *
                    Log2Real::from_log2(-gamma);
    return numeric_value(half + full);
  }
  if (id == "qrom.ffp_ng.scaled") {
    const long double coeff = 2.0L * (in_ld(in, "q_d") + 1.0L);
    if (!in_known(in, "adv_ffp_ng")) {
      return symbolic_value(pow2_str(Log2Real::from_value(coeff)) +
                            " * Adv_FFP-NG");
    }
    return numeric_value(Log2Real::from_value(coeff) *
                         Log2Real::from_value(in_ld(in, "adv_ffp_ng")));
  }
  if (id == "qrom.eps_delta.chebyshev.scaled") {
    const long double delta = in_ld(in, "delta");
    const long double sigma = in_ld(in, "sigma");
    const long double q_g = in_ld(in, "q_g");
    const long double scale = in_ld(in, "q_d") + 1.0L;
    Log2Real eps =
        Log2Real::from_value(delta) +
        Log2Real::from_value(3.0L + 2.0L * delta) *
            Log2Real::from_value(std::sqrt(kSearchConstant)) *
            Log2Real::from_value(q_g) * Log2Real::from_value(sigma);
    return numeric_value(Log2Real::from_value(scale) * eps);
  }
  if (id == "qrom.eps_delta.gaussian.scaled") {
    const long double delta = in_ld(in, "delta");
    const long double beta = in_ld(in, "beta");
    const long double q_g = in_ld(in, "q_g");
    const long double scale = in_ld(in, "q_d") + 1.0L;
    Log2Real eps = Log2Real::from_value(delta);
    if (q_g >= 1.0L) {
      // ln(2 C sqrt(beta) q_g^2), shared with the exact path.
      const long double log_term =
          std::log(2.0L * kSearchConstant * std::sqrt(beta)) +
          2.0L * std::log(q_g);
      eps = eps + Log2Real::from_value(2.0L / std::sqrt(beta)) *
                      Log2Real::from_value(std::sqrt(log_term));
    }
    return numeric_value(Log2Real::from_value(scale) * eps);
  }
  throw DomainError("bound term: unknown formula id " + id);
}

// --- exact (rational / high-precision) term evaluation ----------------------

std::optional<ExactReal> eval_term_exact(const std::string& id,
                                         const InputMap& in) {
  auto ex = [&](const std::string& key) {
    return ExactReal::from_long_double(in_ld(in, key));
  };
  auto known = [&](const std::string& key) { return in_known(in, key); };

  if (id == "rom.passive.ow") {
    if (!known("adv_ow")) return std::nullopt;
    return (ex("q_ro") + ex("q_d") + ExactReal::from_uint(1)) * ex("adv_ow");
  }
  if (id == "rom.passive.ind") {
    if (!known("adv_ind")) return std::nullopt;
    ExactReal coeff = ExactReal::from_uint(2) * (ex("q_ro") + ex("q_d")) +
                      ExactReal::from_uint(1);
    return ExactReal::from_uint(3) * ex("adv_ind") +
           coeff * ExactReal::pow2(-in_ld(in, "log2_m"));
  }
  if (id == "rom.ffp_cpa" || id == "qrom.ffp_cpa") {
    if (!known("adv_ffp_cpa")) return std::nullopt;
    return (ex("q_d") + ExactReal::from_uint(1)) * ex("adv_ffp_cpa");
  }
  if (id == "rom.spread") {
    return ExactReal::from_uint(2) * ex("q_d") *
           ExactReal::pow2(-in_ld(in, "gamma"));
  }
  if (id == "qrom.passive.ind") {
    if (!known("adv_ind")) return std::nullopt;
    ExactReal root = ((ex("d") + ex("q_d")) * ex("adv_ind")).sqrt();
    ExactReal additive = ExactReal::from_uint(8) * (ex("q") + ex("q_d")) *
                         ExactReal::pow2(-in_ld(in, "log2_m") / 2.0L);
    return ExactReal::from_uint(4) * root + additive;
  }
  if (id == "qrom.passive.ow") {
    if (!known("adv_ow")) return std::nullopt;
    ExactReal root = (ex("w") * ex("adv_ow")).sqrt();
    return ExactReal::from_uint(8) * (ex("d") + ex("q_d")) * root;
  }
  if (id == "qrom.eps_gamma.ffpcpa") {
    return ExactReal::from_uint(24) * ex("q_d") *
           (ex("q_g") + ExactReal::from_uint(4) * ex("q_d")) *
           ExactReal::pow2(-in_ld(in, "gamma") / 2.0L);
  }
  if (id == "qrom.eps_gamma.main") {
    ExactReal half = ExactReal::from_uint(24) * ex("q_d") *
                     (ex("q_g") + ExactReal::from_uint(2) * ex("q_d")) *
                     ExactReal::pow2(-in_ld(in, "gamma") / 2.0L);
    ExactReal full = ExactReal::from_uint(4) * ex("q_d") *
                     ExactReal::pow2(-in_ld(in, "gamma"));
    return half + full;
  }
  if (id == "qrom.ffp_ng.scaled") {
    if (!known("adv_ffp_ng")) return std::nullopt;
    return ExactReal::from_uint(2) * (ex("q_d") + ExactReal::from_uint(1)) *
           ex("adv_ffp_ng");
  }
  if (id == "qrom.eps_delta.chebyshev.scaled") {
    ExactReal delta = ex("delta");
    ExactReal eps = delta + (ExactReal::from_uint(3) +
                             ExactReal::from_uint(2) * delta) *
                                ExactReal::from_uint(304).sqrt() *
                                ex("q_g") * ex("sigma");
    return (ex("q_d") + ExactReal::from_uint(1)) * eps;
  }
  if (id == "qrom.eps_delta.gaussian.scaled") {
    ExactReal eps = ex("delta");
    const long double q_g = in_ld(in, "q_g");
    if (q_g >= 1.0L) {
      const long double beta = in_ld(in, "beta");
      const long double log_term =
          std::log(2.0L * kSearchConstant * std::sqrt(beta)) +
          2.0L * std::log(q_g);
      ExactReal sqrt_log = ExactReal::from_long_double(log_term).sqrt();
      eps = eps + ExactReal::from_uint(2) / ex("beta").sqrt() * sqrt_log;
    }
    return (ex("q_d") + ExactReal::from_uint(1)) * eps;
  }
  throw DomainError("bound term: unknown formula id " + id);
}

// --- report assembly ---------------------------------------------------------

BoundTerm make_term(const std::string& id, const std::string& provenance,
                    std::vector<std::pair<std::string, std::string>> inputs) {
  BoundTerm term;
  term.formula_id = id;
  term.provenance = provenance;
  term.inputs = std::move(inputs);
  term.v = eval_term(id, to_map(term));
  return term;
}

std::string adv_input(const Advantage& adv) {
  return adv.known() ? hexfloat(static_cast<long double>(*adv.value))
                     : kUnknown;
}

TermValue sum_terms(const BoundReport& report,
                    const std::vector<std::string>& ids) {
  bool symbolic = false;
  Log2Real numeric = Log2Real::zero();
  std::string expr;
  for (const std::string& id : ids) {
    const BoundTerm* term = report.find_term(id);
    if (term == nullptr) {
      throw DomainError("bound route: missing term " + id);
    }
    if (term->v.symbolic) {
      symbolic = true;
      if (!expr.empty()) {
        expr += " + ";
      }
      expr += term->v.expr;
    } else {
      numeric = numeric + term->v.value;
    }
  }
  if (!symbolic) {
    return numeric_value(numeric);
  }
  std::string numeric_part = pow2_str(numeric);
  if (numeric_part != "0") {
    expr += " + " + numeric_part;
  }
  return symbolic_value(expr);
}

void finish_routes(BoundReport& report) {
  const BoundRoute* best = nullptr;
  for (auto& route : report.routes) {
    route.total = sum_terms(report, route.term_ids);
    if (!route.total.symbolic &&
        (best == nullptr || route.total.value < best->total.value)) {
      best = &route;
    }
  }
  if (best != nullptr) {
    report.best_route = best->name;
  }
}

}  // namespace

const BoundTerm* BoundReport::find_term(const std::string& id) const {
  for (const auto& term : terms) {
    if (term.formula_id == id) {
      return &term;
    }
  }
  return nullptr;
}

const BoundRoute* BoundReport::find_route(const std::string& name) const {
  for (const auto& route : routes) {
    if (route.name == name) {
      return &route;
    }
  }
  return nullptr;
}

std::string hexfloat(long double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%La", v);
  return buf;
}

long double parse_hexfloat(const std::string& text) {
  return std::strtold(text.c_str(), nullptr);
}

std::string format_log2(const Log2Real& v) {
  if (v.is_zero()) {
    return "-inf";
  }
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.10Lg", v.log2());
  return buf;
}

BoundReport rom_main_bound(const BoundInputs& inputs) {
  if (inputs.model != BoundModel::kRom) {
    throw DomainError("rom_main_bound: model must be ROM");
  }
  if (inputs.gamma <= 0.0L) {
    throw DomainError("rom_main_bound: gamma must be positive");
  }
  const long double q_ro = inputs.q_g + inputs.q_h;

  BoundReport report;
  report.title = "rom-main";
  report.terms.push_back(make_term("rom.passive.ow", "rom-main",
                                   {{"q_ro", hexfloat(q_ro)},
                                    {"q_d", hexfloat(inputs.q_d)},
                                    {"adv_ow", adv_input(inputs.adv_ow)}}));
  report.terms.push_back(make_term("rom.passive.ind", "rom-main",
                                   {{"q_ro", hexfloat(q_ro)},
                                    {"q_d", hexfloat(inputs.q_d)},
                                    {"log2_m", hexfloat(inputs.log2_m)},
                                    {"adv_ind", adv_input(inputs.adv_ind)}}));
  report.terms.push_back(
      make_term("rom.ffp_cpa", "rom-main",
                {{"q_d", hexfloat(inputs.q_d)},
                 {"adv_ffp_cpa", adv_input(inputs.adv_ffp_cpa)}}));
  report.terms.push_back(make_term("rom.spread", "rom-main",
                                   {{"q_d", hexfloat(inputs.q_d)},
                                    {"gamma", hexfloat(inputs.gamma)}}));

  report.routes.push_back(
      {"ow", {}, {"rom.passive.ow", "rom.ffp_cpa", "rom.spread"}});
  report.routes.push_back(
      {"ind", {}, {"rom.passive.ind", "rom.ffp_cpa", "rom.spread"}});
  finish_routes(report);
  return report;
}

std::pair<BoundTerm, BoundTerm> qrom_passive_terms(const BoundInputs& inputs) {
  const long double q = inputs.q_g + inputs.q_h;
  BoundTerm ind = make_term("qrom.passive.ind", "qrom-passive",
                            {{"d", hexfloat(inputs.depth)},
                             {"q", hexfloat(q)},
                             {"q_d", hexfloat(inputs.q_d)},
                             {"log2_m", hexfloat(inputs.log2_m)},
                             {"adv_ind", adv_input(inputs.adv_ind)}});
  BoundTerm ow = make_term("qrom.passive.ow", "qrom-passive",
                           {{"d", hexfloat(inputs.depth)},
                            {"q_d", hexfloat(inputs.q_d)},
                            {"w", hexfloat(inputs.width)},
                            {"adv_ow", adv_input(inputs.adv_ow)}});
  return {std::move(ind), std::move(ow)};
}

BoundReport qrom_bound_ffpcpa(const BoundInputs& inputs) {
  if (inputs.model != BoundModel::kQrom) {
    throw DomainError("qrom_bound_ffpcpa: model must be QROM");
  }
  if (inputs.gamma <= 0.0L) {
    throw DomainError("qrom_bound_ffpcpa: gamma must be positive");
  }
  BoundReport report;
  report.title = "qrom-ffpcpa";
  auto [ind, ow] = qrom_passive_terms(inputs);
  ind.provenance = report.title;
  ow.provenance = report.title;
  report.terms.push_back(std::move(ind));
  report.terms.push_back(std::move(ow));
  report.terms.push_back(
      make_term("qrom.ffp_cpa", report.title,
                {{"q_d", hexfloat(inputs.q_d)},
                 {"adv_ffp_cpa", adv_input(inputs.adv_ffp_cpa)}}));
  report.terms.push_back(make_term("qrom.eps_gamma.ffpcpa", report.title,
                                   {{"q_d", hexfloat(inputs.q_d)},
                                    {"q_g", hexfloat(inputs.q_g)},
                                    {"gamma", hexfloat(inputs.gamma)}}));
  report.routes.push_back(
      {"ind",
       {},
       {"qrom.passive.ind", "qrom.ffp_cpa", "qrom.eps_gamma.ffpcpa"}});
  report.routes.push_back(
      {"ow",
       {},
       {"qrom.passive.ow", "qrom.ffp_cpa", "qrom.eps_gamma.ffpcpa"}});
  finish_routes(report);
  return report;
}

namespace {

BoundReport qrom_main_common(const BoundInputs& inputs, bool gaussian) {
  if (inputs.model != BoundModel::kQrom) {
    throw DomainError("qrom_main_bound: model must be QROM");
  }
  if (inputs.gamma <= 0.0L) {
    throw DomainError("qrom_main_bound: gamma must be positive");
  }
  BoundReport report;
  report.title = gaussian ? "qrom-main-gaussian" : "qrom-main-chebyshev";

  auto [ind, ow] = qrom_passive_terms(inputs);
  ind.provenance = report.title;
  ow.provenance = report.title;
  report.terms.push_back(std::move(ind));
  report.terms.push_back(std::move(ow));
  report.terms.push_back(
      make_term("qrom.ffp_ng.scaled", report.title,
                {{"q_d", hexfloat(inputs.q_d)},
                 {"adv_ffp_ng", adv_input(inputs.adv_ffp_ng)}}));

  std::string eps_delta_id;
  if (gaussian) {
    if (!inputs.beta) {
      throw DomainError("qrom_main_bound_gaussian: beta is required");
    }
    if (static_cast<long double>(*inputs.beta) < gaussian_beta_threshold()) {
      throw DomainError("qrom_main_bound_gaussian: beta below e/(2C)");
    }
    eps_delta_id = "qrom.eps_delta.gaussian.scaled";
    report.terms.push_back(make_term(
        eps_delta_id, report.title,
        {{"q_d", hexfloat(inputs.q_d)},
         {"q_g", hexfloat(inputs.q_g)},
         {"delta", hexfloat(static_cast<long double>(inputs.delta_ik))},
         {"beta", hexfloat(static_cast<long double>(*inputs.beta))}}));
  } else {
    eps_delta_id = "qrom.eps_delta.chebyshev.scaled";
    report.terms.push_back(make_term(
        eps_delta_id, report.title,
        {{"q_d", hexfloat(inputs.q_d)},
         {"q_g", hexfloat(inputs.q_g)},
         {"delta", hexfloat(static_cast<long double>(inputs.delta_ik))},
         {"sigma", hexfloat(static_cast<long double>(inputs.sigma))}}));
  }
  report.terms.push_back(make_term("qrom.eps_gamma.main", report.title,
                                   {{"q_d", hexfloat(inputs.q_d)},
                                    {"q_g", hexfloat(inputs.q_g)},
                                    {"gamma", hexfloat(inputs.gamma)}}));

  report.routes.push_back(
      {"ind",
       {},
       {"qrom.passive.ind", "qrom.ffp_ng.scaled", eps_delta_id,
        "qrom.eps_gamma.main"}});
  report.routes.push_back(
      {"ow",
       {},
       {"qrom.passive.ow", "qrom.ffp_ng.scaled", eps_delta_id,
        "qrom.eps_gamma.main"}});
  finish_routes(report);

  if (!gaussian) {
    const long double precondition = std::sqrt(kSearchConstant) * inputs.q_g *
                                     static_cast<long double>(inputs.sigma);
    if (precondition > 0.5L) {
      // The variance term only certifies a trivial bound here.
      report.diagnostics.push_back("chebyshev-precondition-failed");
      for (auto& route : report.routes) {
        route.total = numeric_value(Log2Real::one());
      }
      report.best_route.reset();
    }
  }
  return report;
}

}  // namespace

BoundReport qrom_main_bound(const BoundInputs& inputs) {
  return qrom_main_common(inputs, /*gaussian=*/false);
}

BoundReport qrom_main_bound_gaussian(const BoundInputs& inputs) {
  return qrom_main_common(inputs, /*gaussian=*/true);
}

TermValue recompute_term(const BoundTerm& term) {
  return eval_term(term.formula_id, to_map(term));
}

std::optional<ExactReal> exact_term(const BoundTerm& term) {
  return eval_term_exact(term.formula_id, to_map(term));
}

}  // namespace folab
