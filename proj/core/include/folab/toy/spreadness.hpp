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

#ifndef FOLAB_TOY_SPREADNESS_HPP_
#define FOLAB_TOY_SPREADNESS_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "folab/pke.hpp"

namespace folab {

/// Frodo-shaped spreadness parameters: the ciphertext's B' part collides
/// only when the m_bar x n error matrix is zero, so
/// gamma = m_bar * n * floor(-log2 p0) with p0 = Pr[chi = 0] given as an
/// exact rational.
struct FrodoSpreadParams {
  unsigned m_bar = 8;
  unsigned n = 0;
  std::uint64_t p0_num = 0;
  std::uint64_t p0_den = 0;
};

/// HQC-shaped parameters: two independent fixed-weight vectors of length
/// block_length and weight w give gamma = 2 * log2 C(block_length, w).
struct HqcSpreadParams {
  std::uint64_t block_length = 0;  // n1 * n2
  std::uint64_t weight = 0;        // w_r = w_e
};

/// Per-coordinate conservative floor, matching the appendix rounding.
unsigned gamma_frodo(const FrodoSpreadParams& params);

struct HqcGamma {
  long double gamma_exact = 0;      // 2 * log2 C(n, w)
  std::uint64_t gamma_floor = 0;    // 2 * floor(log2 C(n, w))
  std::uint64_t log2_binom_floor = 0;
};

/// Exact big-integer binomials; overflow-free by construction.
HqcGamma gamma_hqc(const HqcSpreadParams& params);

/// Exact spreadness of an enumerable toy scheme:
/// -log2 max_{m,c} Pr_r[Enc(pk, m; r) = c] by exhaustive enumeration.
/// Refuses spaces with more than 2^20 (m, r) pairs.
double gamma_exact_toy(const PkeScheme& scheme, const KeyPair& keys);

/// Exponent of the q_G budget bound q_G * 2^(65 - gamma/2), which
/// simplifies the decapsulation spreadness term when q_D <= 2^64.
long double spreadness_budget_exponent(long double gamma);

struct SpreadnessPreset {
  std::string name;
  std::variant<FrodoSpreadParams, HqcSpreadParams> params;
  std::uint64_t gamma() const;
  long long budget_exponent() const;
};

/// Built-in parameter sets: frodo-640/976/1344 and hqc-128/192/256.
const std::vector<SpreadnessPreset>& spreadness_presets();
std::optional<SpreadnessPreset> find_spreadness_preset(const std::string& name);

}  // namespace folab

#endif  // FOLAB_TOY_SPREADNESS_HPP_
