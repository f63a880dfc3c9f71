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

#include "folab/toy/spreadness.hpp"

#include <cmath>
#include <map>
#include <unordered_map>

#include <gmpxx.h>

#include "folab/errors.hpp"

namespace folab {

unsigned gamma_frodo(const FrodoSpreadParams& params) {
  if (params.p0_num == 0 || params.p0_den == 0 ||
      params.p0_num >= params.p0_den) {
    throw DomainError("gamma_frodo: p0 must be a rational in (0, 1)");
  }
  if (params.m_bar == 0 || params.n == 0) {
    throw DomainError("gamma_frodo: empty matrix");
  }
  // floor(-log2 p0) = largest f with num * 2^f <= den, exactly in integers.
  mpz_class num(static_cast<unsigned long>(params.p0_num));
  mpz_class den(static_cast<unsigned long>(params.p0_den));
  unsigned f = 0;
  while (num * 2 <= den) {
    num *= 2;
    ++f;
  }
  return params.m_bar * params.n * f;
}

namespace {

long double log2_mpz(const mpz_class& value) {
  // value = d * 2^exp with d in [0.5, 1).
  signed long exp = 0;
  double d = mpz_get_d_2exp(&exp, value.get_mpz_t());
  return static_cast<long double>(exp) +
         std::log2(static_cast<long double>(d));
}

}  // namespace

HqcGamma gamma_hqc(const HqcSpreadParams& params) {
  if (params.weight == 0 || params.weight > params.block_length) {
    throw DomainError("gamma_hqc: weight must be in (0, block_length]");
  }
  mpz_class binom;
  mpz_bin_uiui(binom.get_mpz_t(),
               static_cast<unsigned long>(params.block_length),
               static_cast<unsigned long>(params.weight));

  HqcGamma out;
  // floor(log2 x) = bit length - 1, exact.
  out.log2_binom_floor = mpz_sizeinbase(binom.get_mpz_t(), 2) - 1;
  out.gamma_floor = 2 * out.log2_binom_floor;
  out.gamma_exact = 2.0L * log2_mpz(binom);
  return out;
}

double gamma_exact_toy(const PkeScheme& scheme, const KeyPair& keys) {
  const ByteSpace& msgs = scheme.message_space();
  const ByteSpace& rand = scheme.randomness_space();
  if (!msgs.enumerable() || !rand.enumerable()) {
    throw DomainError("gamma_exact_toy: spaces are not enumerable");
  }
  const std::uint64_t pair_count = msgs.size() * rand.size();
  if (pair_count > (std::uint64_t{1} << 20)) {
    throw DomainError("gamma_exact_toy: refusing " +
                      std::to_string(msgs.size()) + " x " +
                      std::to_string(rand.size()) + " = " +
                      std::to_string(pair_count) + " pairs (limit 2^20)");
  }

  std::uint64_t max_count = 0;
  for (std::uint64_t mi = 0; mi < msgs.size(); ++mi) {
    Bytes m = msgs.element(mi);
    std::map<Bytes, std::uint64_t> counts;
    for (std::uint64_t ri = 0; ri < rand.size(); ++ri) {
      std::uint64_t c = ++counts[scheme.encrypt(keys.pk, m, rand.element(ri))];
      max_count = std::max(max_count, c);
    }
  }
  return -std::log2(static_cast<double>(max_count) /
                    static_cast<double>(rand.size()));
}

long double spreadness_budget_exponent(long double gamma) {
  return 65.0L - gamma / 2.0L;
}

std::uint64_t SpreadnessPreset::gamma() const {
  if (const auto* frodo = std::get_if<FrodoSpreadParams>(&params)) {
    return gamma_frodo(*frodo);
  }
  return gamma_hqc(std::get<HqcSpreadParams>(params)).gamma_floor;
}

long long SpreadnessPreset::budget_exponent() const {
  return 65 - static_cast<long long>(gamma() / 2);
}

const std::vector<SpreadnessPreset>& spreadness_presets() {
  static const std::vector<SpreadnessPreset> presets = {
      {"frodo-640", FrodoSpreadParams{8, 640, 9288, 65536}},
      {"frodo-976", FrodoSpreadParams{8, 976, 11278, 65536}},
      {"frodo-1344", FrodoSpreadParams{8, 1344, 18286, 65536}},
      {"hqc-128", HqcSpreadParams{17664, 75}},
      {"hqc-192", HqcSpreadParams{35840, 114}},
      {"hqc-256", HqcSpreadParams{57600, 149}},
  };
  return presets;
}

std::optional<SpreadnessPreset> find_spreadness_preset(
    const std::string& name) {
  for (const auto& preset : spreadness_presets()) {
    if (preset.name == name) {
      return preset;
    }
  }
  return std::nullopt;
}

}  // namespace folab
