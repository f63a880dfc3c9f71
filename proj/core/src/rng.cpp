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

#include "folab/rng.hpp"

#include "folab/errors.hpp"
#include "folab/xof.hpp"

namespace folab {

std::uint64_t Rng::uniform_below(std::uint64_t n) {
  if (n == 0) {
    throw DomainError("uniform_below: empty range");
  }
  if ((n & (n - 1)) == 0) {
    return next() & (n - 1);
  }
  // Reject the low 2^64 mod n values so the remainder is unbiased.
  const std::uint64_t reject_below = (-n) % n;
  std::uint64_t x = next();
  while (x < reject_below) {
    x = next();
  }
  return x % n;
}

Bytes Rng::bytes(std::size_t n) {
  Bytes out;
  out.reserve(n);
  while (out.size() < n) {
    std::uint64_t word = next();
    for (int i = 0; i < 8 && out.size() < n; ++i) {
      out.push_back(static_cast<std::uint8_t>(word >> (8 * i)));
    }
  }
  return out;
}

std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
  Bytes input;
  append_le64(input, master);
  append_le64(input, index);
  Bytes digest = shake256(input, 8);
  std::uint64_t seed = 0;
  for (int i = 7; i >= 0; --i) {
    seed = (seed << 8) | digest[static_cast<std::size_t>(i)];
  }
  return seed;
}

}  // namespace folab
