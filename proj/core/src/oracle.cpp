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

#include "folab/oracle.hpp"

#include <utility>

#include "folab/errors.hpp"

namespace folab {

void PreimageList::record(const Bytes& m, const Bytes& c) {
  auto pair = std::make_pair(m, c);
  if (seen_.insert(pair).second) {
    entries_.push_back(std::move(pair));
  }
}

std::optional<Bytes> PreimageList::first_preimage(const Bytes& c) const {
  std::optional<Bytes> best;
  for (const auto& [m, ct] : entries_) {
    if (ct != c) {
      continue;
    }
    if (!best || m < *best) {
      best = m;
    }
  }
  return best;
}

void PreimageList::clear() {
  entries_.clear();
  seen_.clear();
}

std::optional<Bytes> list_preimage(const PreimageList& list, const Bytes& c) {
  return list.first_preimage(c);
}

RandomOracle::RandomOracle(ByteSpace output_space, std::uint64_t seed)
    : output_space_(output_space), rng_(seed) {}

RandomOracle::RandomOracle(ByteSpace input_space, ByteSpace output_space,
                           std::uint64_t seed)
    : input_space_(input_space), output_space_(output_space), rng_(seed) {}

Bytes RandomOracle::eval(const Bytes& input) {
  if (input_space_ && !input_space_->contains(input)) {
    throw DomainError("RandomOracle: input outside declared space");
  }
  auto it = table_.find(input);
  if (it == table_.end()) {
    it = table_.emplace(input, output_space_.sample(rng_)).first;
  }
  transcript_.emplace_back(input, it->second);
  return it->second;
}

Bytes RandomOracle::logged_eval(const PkeScheme& scheme, const Bytes& pk,
                                const Bytes& m) {
  Bytes r = eval(m);
  preimages_.record(m, scheme.encrypt(pk, m, r));
  return r;
}

XofOracle::XofOracle(ByteSpace output_space, std::uint8_t domain_tag,
                     Bytes context)
    : output_space_(output_space), tag_(domain_tag), context_(std::move(context)) {}

Bytes XofOracle::eval(const Bytes& input) {
  XofStream stream(xof_frame(tag_, context_, input));
  const std::size_t width = output_space_.width();
  if (output_space_.is_full()) {
    return stream.range(0, width);
  }
  const std::uint64_t size = output_space_.size();
  unsigned bits = 0;
  while ((std::uint64_t{1} << bits) < size) {
    ++bits;
  }
  const std::uint64_t mask =
      bits >= 64 ? ~std::uint64_t{0} : ((std::uint64_t{1} << bits) - 1);
  // Mask to the next power of two, then reject out-of-range draws using
  // successive blocks of the same stream.
  for (std::size_t attempt = 0;; ++attempt) {
    Bytes block = stream.range(attempt * width, width);
    std::uint64_t candidate = decode_be(block, 0, width) & mask;
    if (candidate < size) {
      return encode_be(candidate, width);
    }
  }
}

}  // namespace folab
