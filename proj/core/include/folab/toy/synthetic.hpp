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

#ifndef FOLAB_TOY_SYNTHETIC_HPP_
#define FOLAB_TOY_SYNTHETIC_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "folab/pke.hpp"

namespace folab {

/// Parameterized decryption-failure predicate over (message, randomness,
/// key) indices. Every kind has marginals computable exactly by
/// enumeration; see parse() for the textual forms used in config files.
struct FailurePredicate {
  enum class Kind {
    kNever,              // never fails
    kThreshold,          // fails iff r + k >= t
    kRandomnessRate,     // fails iff r < t (key-independent)
    kBadMessage,         // fails iff m == bad_m and r < t (key-independent)
    kParity,             // fails iff (r ^ k) is odd
    kShiftedThreshold,   // fails iff ((r + m) mod |R|) + k >= t
  };

  Kind kind = Kind::kNever;
  std::uint64_t t = 0;
  std::uint64_t bad_m = 0;

  bool operator()(std::uint64_t m, std::uint64_t r, std::uint64_t key,
                  std::uint64_t rand_size) const;

  /// Accepted forms: "never", "threshold:T", "rate:T", "badmsg:M:T",
  /// "parity", "shifted:T".
  static FailurePredicate parse(const std::string& text);
  std::string to_string() const;
};

/// Controllable failure testbed. Ciphertext layout is
/// (m XOR pad(r), r): the randomness rides in the clear, so ciphertexts
/// are distinct across r and the scheme is exactly log2|R|-spread.
/// Decryption is trivially correct except where the failure predicate
/// holds, in which case decrypt returns a corrupted message.
class SyntheticFailurePke final : public PkeScheme {
 public:
  struct Params {
    unsigned msg_bits = 4;          // |M| = 2^msg_bits, at most 8
    unsigned rand_bits = 8;         // |R| = 2^rand_bits, at most 16
    std::uint64_t key_count = 16;   // enumerable key space
    FailurePredicate fail;
    bool pk_leaks_key_parity = false;
  };

  explicit SyntheticFailurePke(Params params);

  std::string name() const override { return "synthetic"; }
  const ByteSpace& message_space() const override { return msg_space_; }
  const ByteSpace& randomness_space() const override { return rand_space_; }

  KeyPair keygen(Rng& rng) const override;
  Bytes encrypt(const Bytes& pk, const Bytes& m,
                const Bytes& r) const override;
  std::optional<Bytes> decrypt(const Bytes& sk, const Bytes& c) const override;

  const Params& params() const { return params_; }
  std::uint64_t key_of(const Bytes& sk) const;
  /// Deterministic key pair for a given key index (enumeration helper).
  KeyPair key_pair_for(std::uint64_t key_index) const;

  bool fails(std::uint64_t m, std::uint64_t r, std::uint64_t key) const;
  /// Exact Pr_key[fail | m, r] as a count over the enumerated key space.
  std::uint64_t failing_key_count(std::uint64_t m, std::uint64_t r) const;

 private:
  std::uint64_t pad(std::uint64_t r) const;

  Params params_;
  ByteSpace msg_space_;
  ByteSpace rand_space_;
};

/// Exact per-message failure statistics obtained by enumerating the
/// (key, randomness) spaces: mean and variance over r of the key-averaged
/// failure probability, and the tail function tau(t) = Pr_r[p(r) >= t].
struct ExactFailureCurve {
  double mean = 0.0;
  double variance = 0.0;
  // Exact rational mean = fail_pairs / total_pairs.
  std::uint64_t fail_pairs = 0;
  std::uint64_t total_pairs = 0;
  // Distinct values of p(r) = Pr_key[fail | m, r], descending, with the
  // probability mass of {r : p(r) >= value}.
  std::vector<std::pair<double, double>> tail_steps;

  double tail_at(double t) const;
};

ExactFailureCurve analytic_failure_prob(const SyntheticFailurePke& scheme,
                                        std::uint64_t m);

/// Scheme-level exact statistics: per-statistic maxima over all messages
/// and the pointwise-max tail envelope.
struct ExactSchemeStats {
  double delta_ik = 0.0;
  double sigma = 0.0;
  std::uint64_t argmax_mean = 0;
  std::uint64_t argmax_variance = 0;
  std::vector<ExactFailureCurve> per_message;

  double tail_envelope_at(double t) const;
};

ExactSchemeStats exact_scheme_stats(const SyntheticFailurePke& scheme);

}  // namespace folab

#endif  // FOLAB_TOY_SYNTHETIC_HPP_
