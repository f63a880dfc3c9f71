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

#ifndef FOLAB_ORACLE_HPP_
#define FOLAB_ORACLE_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <utility>
#include <vector>

#include "folab/bytes.hpp"
#include "folab/pke.hpp"
#include "folab/rng.hpp"
#include "folab/xof.hpp"

namespace folab {

/// Hash oracle interface shared by the lazily sampled game-mode oracle and
/// the XOF-backed production instantiation.
class Oracle {
 public:
  virtual ~Oracle() = default;
  virtual Bytes eval(const Bytes& input) = 0;
  virtual const ByteSpace& output_space() const = 0;
};

/// Ordered list of (message, ciphertext) pairs collected by the logging
/// wrapper around G. Duplicate pairs are suppressed (set semantics);
/// insertion order is preserved.
class PreimageList {
 public:
  void record(const Bytes& m, const Bytes& c);

  /// First preimage of c: the byte-wise minimal m with (m, c) recorded,
  /// or nullopt when no pair matches.
  std::optional<Bytes> first_preimage(const Bytes& c) const;

  const std::vector<std::pair<Bytes, Bytes>>& entries() const {
    return entries_;
  }
  bool empty() const { return entries_.empty(); }
  std::size_t size() const { return entries_.size(); }
  void clear();

 private:
  std::vector<std::pair<Bytes, Bytes>> entries_;
  std::set<std::pair<Bytes, Bytes>> seen_;
};

/// Free-function form of the first-preimage lookup.
std::optional<Bytes> list_preimage(const PreimageList& list, const Bytes& c);

/// Classical random oracle realized as a lazily sampled table over a
/// declared output space, with a full query transcript and the preimage
/// bookkeeping list maintained by logged_eval. One game execution owns
/// its oracle state exclusively.
class RandomOracle final : public Oracle {
 public:
  RandomOracle(ByteSpace output_space, std::uint64_t seed);
  RandomOracle(ByteSpace input_space, ByteSpace output_space,
               std::uint64_t seed);

  /// Lazily sampled evaluation. Repeated queries return identical values.
  /// Inputs outside a declared input space raise a domain error.
  Bytes eval(const Bytes& input) override;

  /// The logging wrapper G': evaluates r := G(m), records the pair
  /// (m, Enc(pk, m; r)) in the preimage list, and returns r.
  Bytes logged_eval(const PkeScheme& scheme, const Bytes& pk, const Bytes& m);

  const ByteSpace& output_space() const override { return output_space_; }
  const std::vector<std::pair<Bytes, Bytes>>& transcript() const {
    return transcript_;
  }
  std::size_t distinct_inputs() const { return table_.size(); }
  const PreimageList& preimages() const { return preimages_; }
  PreimageList& preimages() { return preimages_; }

 private:
  std::optional<ByteSpace> input_space_;
  ByteSpace output_space_;
  std::map<Bytes, Bytes> table_;
  std::vector<std::pair<Bytes, Bytes>> transcript_;
  PreimageList preimages_;
  Rng rng_;
};

/// Production-mode oracle: output = XOF(tag || le64(|ctx|) || ctx ||
/// le64(|input|) || input), rejection-sampled into the output space.
/// Bit-exact; see the README for the framing convention.
class XofOracle final : public Oracle {
 public:
  XofOracle(ByteSpace output_space, std::uint8_t domain_tag, Bytes context);

  Bytes eval(const Bytes& input) override;
  const ByteSpace& output_space() const override { return output_space_; }

 private:
  ByteSpace output_space_;
  std::uint8_t tag_;
  Bytes context_;
};

}  // namespace folab

#endif  // FOLAB_ORACLE_HPP_
