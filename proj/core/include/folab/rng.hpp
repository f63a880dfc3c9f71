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

#ifndef FOLAB_RNG_HPP_
#define FOLAB_RNG_HPP_

#include <cstdint>
#include <random>

#include "folab/bytes.hpp"

namespace folab {

/// Deterministic seeded generator. All game-mode randomness flows through
/// one of these so that a run is a pure function of its seed.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }

  /// Uniform draw from [0, n). Unbiased via rejection; n == 0 is a domain
  /// error. Power-of-two sizes consume exactly one engine output.
  std::uint64_t uniform_below(std::uint64_t n);

  bool coin() { return (next() & 1u) != 0; }

  Bytes bytes(std::size_t n);

  /// Uniform double in [0, 1) with 53 random bits.
  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::mt19937_64 engine_;
};

/// Per-worker seed derivation: seed_i = XOF(master || i), truncated to 64
/// bits. Derived streams are independent for distinct indices.
std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index);

}  // namespace folab

#endif  // FOLAB_RNG_HPP_
