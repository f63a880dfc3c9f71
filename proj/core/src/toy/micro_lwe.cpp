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

#include "folab/toy/micro_lwe.hpp"

#include <cstdlib>

#include "folab/errors.hpp"

namespace folab {

namespace {

// pk layout: [n, samples, q_hi, q_lo] then samples rows of (n+1) values,
// 2 bytes big-endian each (a_1..a_n, b). sk layout: n secret values.
constexpr std::size_t kHeader = 4;

unsigned value_at(const Bytes& b, std::size_t idx) {
  return static_cast<unsigned>(decode_be(b, kHeader + 2 * idx, 2));
}

}  // namespace

MicroLwePke::MicroLwePke(Params params)
    : params_(std::move(params)),
      msg_space_(ByteSpace::indexed(2, 1)),
      rand_space_(ByteSpace::indexed(std::uint64_t{1} << params_.samples,
                                     (params_.samples + 7) / 8)) {
  if (params_.n == 0 || params_.n > 8) {
    throw DomainError("MicroLwePke: n must be in [1, 8]");
  }
  if (params_.q < 4 || params_.q > 257) {
    throw DomainError("MicroLwePke: q must be in [4, 257]");
  }
  if (params_.samples == 0 || params_.samples > 16) {
    throw DomainError("MicroLwePke: samples must be in [1, 16]");
  }
  if (params_.chi.empty()) {
    params_.chi = {-1, 0, 1};
  }
  for (int e : params_.chi) {
    if (static_cast<unsigned>(std::abs(e)) >= params_.q / 2) {
      throw DomainError("MicroLwePke: noise table too wide for q");
    }
  }
}

KeyPair MicroLwePke::keygen(Rng& rng) const {
  const unsigned q = params_.q;
  std::vector<unsigned> s(params_.n);
  for (auto& si : s) {
    si = static_cast<unsigned>(rng.uniform_below(q));
  }

  KeyPair kp;
  kp.pk = {static_cast<std::uint8_t>(params_.n),
           static_cast<std::uint8_t>(params_.samples),
           static_cast<std::uint8_t>(q >> 8), static_cast<std::uint8_t>(q)};
  for (unsigned row = 0; row < params_.samples; ++row) {
    unsigned b = 0;
    Bytes row_bytes;
    for (unsigned j = 0; j < params_.n; ++j) {
      unsigned a = static_cast<unsigned>(rng.uniform_below(q));
      b = (b + a * s[j]) % q;
      append_bytes(row_bytes, encode_be(a, 2));
    }
    int e = params_.chi[rng.uniform_below(params_.chi.size())];
    b = static_cast<unsigned>((static_cast<int>(b) + e % static_cast<int>(q) +
                               static_cast<int>(q)) %
                              static_cast<int>(q));
    append_bytes(kp.pk, row_bytes);
    append_bytes(kp.pk, encode_be(b, 2));
  }
  for (unsigned j = 0; j < params_.n; ++j) {
    append_bytes(kp.sk, encode_be(s[j], 2));
  }
  return kp;
}

std::vector<unsigned> MicroLwePke::parse_rows(const Bytes& pk) const {
  const std::size_t expect =
      kHeader + 2 * static_cast<std::size_t>(params_.samples) * (params_.n + 1);
  if (pk.size() != expect || pk[0] != params_.n || pk[1] != params_.samples) {
    throw DomainError("MicroLwePke: bad public key");
  }
  std::vector<unsigned> values(params_.samples * (params_.n + 1));
  for (std::size_t i = 0; i < values.size(); ++i) {
    values[i] = value_at(pk, i);
  }
  return values;
}

Bytes MicroLwePke::encrypt(const Bytes& pk, const Bytes& m,
                           const Bytes& r) const {
  auto m_idx = msg_space_.index_of(m);
  auto mask = rand_space_.index_of(r);
  if (!m_idx) {
    throw DomainError("MicroLwePke: message outside space");
  }
  if (!mask) {
    throw DomainError("MicroLwePke: randomness outside space");
  }
  std::vector<unsigned> rows = parse_rows(pk);
  const unsigned q = params_.q;
  const unsigned stride = params_.n + 1;

  std::vector<unsigned> u(params_.n, 0);
  unsigned v = 0;
  for (unsigned row = 0; row < params_.samples; ++row) {
    if (((*mask >> row) & 1u) == 0) {
      continue;
    }
    for (unsigned j = 0; j < params_.n; ++j) {
      u[j] = (u[j] + rows[row * stride + j]) % q;
    }
    v = (v + rows[row * stride + params_.n]) % q;
  }
  v = (v + static_cast<unsigned>(*m_idx) * (q / 2)) % q;

  Bytes c;
  for (unsigned j = 0; j < params_.n; ++j) {
    append_bytes(c, encode_be(u[j], 2));
  }
  append_bytes(c, encode_be(v, 2));
  return c;
}

std::optional<Bytes> MicroLwePke::decrypt(const Bytes& sk,
                                          const Bytes& c) const {
  if (sk.size() != 2 * static_cast<std::size_t>(params_.n) ||
      c.size() != 2 * (static_cast<std::size_t>(params_.n) + 1)) {
    return std::nullopt;
  }
  const unsigned q = params_.q;
  unsigned dot = 0;
  for (unsigned j = 0; j < params_.n; ++j) {
    unsigned sj = static_cast<unsigned>(decode_be(sk, 2 * j, 2));
    unsigned uj = static_cast<unsigned>(decode_be(c, 2 * j, 2));
    if (sj >= q || uj >= q) {
      return std::nullopt;
    }
    dot = (dot + sj * uj) % q;
  }
  unsigned v = static_cast<unsigned>(decode_be(c, 2 * params_.n, 2));
  if (v >= q) {
    return std::nullopt;
  }
  unsigned d = (v + q - dot) % q;

  unsigned dist0 = std::min(d, q - d);
  unsigned h = q / 2;
  unsigned dh_abs = d > h ? d - h : h - d;
  unsigned disth = std::min(dh_abs, q - dh_abs);
  unsigned decoded = disth < dist0 ? 1u : 0u;  // ties decode to 0
  return msg_space_.element(decoded);
}

int MicroLwePke::noise_for(const KeyPair& kp, std::uint64_t subset_mask) const {
  std::vector<unsigned> rows = parse_rows(kp.pk);
  const unsigned q = params_.q;
  const unsigned stride = params_.n + 1;
  int total = 0;
  for (unsigned row = 0; row < params_.samples; ++row) {
    if (((subset_mask >> row) & 1u) == 0) {
      continue;
    }
    unsigned dot = 0;
    for (unsigned j = 0; j < params_.n; ++j) {
      unsigned sj = static_cast<unsigned>(decode_be(kp.sk, 2 * j, 2));
      dot = (dot + rows[row * stride + j] * sj) % q;
    }
    unsigned e = (rows[row * stride + params_.n] + q - dot) % q;
    // Center into (-q/2, q/2].
    int centered = static_cast<int>(e);
    if (e > q / 2) {
      centered -= static_cast<int>(q);
    }
    total += centered;
  }
  return total;
}

bool MicroLwePke::fails_for_noise(unsigned m, int noise) const {
  const int q = static_cast<int>(params_.q);
  int d = (static_cast<int>(m) * (q / 2) + noise) % q;
  if (d < 0) {
    d += q;
  }
  unsigned du = static_cast<unsigned>(d);
  unsigned dist0 = std::min(du, params_.q - du);
  unsigned h = params_.q / 2;
  unsigned dh_abs = du > h ? du - h : h - du;
  unsigned disth = std::min(dh_abs, params_.q - dh_abs);
  unsigned decoded = disth < dist0 ? 1u : 0u;
  return decoded != m;
}

}  // namespace folab
