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

#ifndef FOLAB_GAMES_ADVERSARY_HPP_
#define FOLAB_GAMES_ADVERSARY_HPP_

#include <functional>
#include <optional>
#include <utility>

#include "folab/bytes.hpp"
#include "folab/errors.hpp"
#include "folab/rng.hpp"

namespace folab {

/// Oracle handles granted to an adversary for one game run. Handles a game
/// does not grant throw OracleScopeError when touched, so misuse is a
/// runtime violation rather than silent behavior.
struct OracleHandles {
  std::function<Bytes(const Bytes&)> g = denied_ro("G");
  std::function<Bytes(const Bytes&)> h = denied_ro("H");
  std::function<std::optional<Bytes>(const Bytes&)> decaps =
      denied_dec("oDecaps");
  std::function<std::optional<Bytes>(const Bytes&)> decrypt =
      denied_dec("oDecrypt");
  std::function<bool(const Bytes& m, const Bytes& r)> fco = denied_fco();

  static std::function<Bytes(const Bytes&)> denied_ro(const char* name) {
    return [name](const Bytes&) -> Bytes {
      throw OracleScopeError(std::string(name) +
                             " is not granted in this game");
    };
  }
  static std::function<std::optional<Bytes>(const Bytes&)> denied_dec(
      const char* name) {
    return [name](const Bytes&) -> std::optional<Bytes> {
      throw OracleScopeError(std::string(name) +
                             " is not granted in this game");
    };
  }
  static std::function<bool(const Bytes&, const Bytes&)> denied_fco() {
    return [](const Bytes&, const Bytes&) -> bool {
      throw OracleScopeError("FCO is not granted in this game");
    };
  }
};

/// Inputs handed to a KEM indistinguishability adversary.
struct IndKemInput {
  Bytes pk;
  Bytes challenge_ct;
  Bytes candidate_key;
};

/// Returns the guessed bit.
using IndKemAdversary =
    std::function<int(const IndKemInput&, OracleHandles&, Rng&)>;

struct OwInput {
  Bytes pk;
  Bytes challenge_ct;
};

/// Returns the message guess.
using OwAdversary = std::function<Bytes(const OwInput&, OracleHandles&, Rng&)>;

/// Two-phase PKE distinguisher: choose() emits the message pair, guess()
/// the bit.
struct IndPkeAdversary {
  std::function<std::pair<Bytes, Bytes>(const Bytes& pk, OracleHandles&, Rng&)>
      choose;
  std::function<int(const Bytes& pk, const Bytes& challenge_ct, OracleHandles&,
                    Rng&)>
      guess;
};

/// Find-failing-plaintext adversary; pk is empty in the no-key game.
/// Returning nullopt concedes the run.
using FfpAdversary = std::function<std::optional<Bytes>(
    const Bytes& pk, OracleHandles&, Rng&)>;

/// Distinguishes own-key vs fresh-key failure behavior through a single
/// failure-checking-oracle query; returns the guessed bit.
using FfpNgAdversary =
    std::function<int(const Bytes& pk0, OracleHandles&, Rng&)>;

/// Thrown internally to stop a wrapped adversary mid-run (reduction
/// wrappers abort the inner adversary once they have what they need).
struct AdversaryAborted {};

}  // namespace folab

#endif  // FOLAB_GAMES_ADVERSARY_HPP_
