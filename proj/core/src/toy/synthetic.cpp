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

#include "folab/toy/synthetic.hpp"

#include <algorithm>
#include <map>

#include "folab/errors.hpp"

namespace folab {

namespace {

constexpr std::uint8_t kPkMarker = 0x5f;

std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

bool FailurePredicate::operator()(std::uint64_t m, std::uint64_t r,
                                  std::uint64_t key,
                                  std::uint64_t rand_size) const {
  switch (kind) {
    case Kind::kNever:
      return false;
    case Kind::kThreshold:
      return r + key >= t;
    case Kind::kRandomnessRate:
      return r < t;
    case Kind::kBadMessage:
      return m == bad_m && r < t;
    case Kind::kParity:
      return ((r ^ key) & 1u) != 0;
    case Kind::kShiftedThreshold:
      return ((r + m) % rand_size) + key >= t;
  }
  return false;
}

FailurePredicate FailurePredicate::parse(const std::string& text) {
  auto field = [&](std::size_t idx) -> std::uint64_t {
    std::size_t pos = 0;
    for (std::size_t i = 0; i < idx; ++i) {
      pos = text.find(':', pos);
      if (pos == std::string::npos) {
        throw ConfigError("predicate: missing parameter in '" + text + "'");
      }
      ++pos;
    }
    std::size_t end = text.find(':', pos);
    std::string token = text.substr(pos, end == std::string::npos
                                             ? std::string::npos
                                             : end - pos);
    try {
      return std::stoull(token);
    } catch (const std::exception&) {
      throw ConfigError("predicate: bad number in '" + text + "'");
    }
  };

  FailurePredicate p;
  if (text == "never" || text.empty()) {
    p.kind = Kind::kNever;
  } else if (text.rfind("threshold:", 0) == 0) {
    p.kind = Kind::kThreshold;
    p.t = field(1);
  } else if (text.rfind("rate:", 0) == 0) {
    p.kind = Kind::kRandomnessRate;
    p.t = field(1);
  } else if (text.rfind("badmsg:", 0) == 0) {
    p.kind = Kind::kBadMessage;
    p.bad_m = field(1);
    p.t = field(2);
  } else if (text == "parity") {
    p.kind = Kind::kParity;
  } else if (text.rfind("shifted:", 0) == 0) {
    p.kind = Kind::kShiftedThreshold;
    p.t = field(1);
  } else {
    throw ConfigError("predicate: unknown form '" + text + "'");
  }
  return p;
}

std::string FailurePredicate::to_string() const {
  switch (kind) {
    case Kind::kNever:
      return "never";
    case Kind::kThreshold:
      return "threshold:" + std::to_string(t);
    case Kind::kRandomnessRate:
      return "rate:" + std::to_string(t);
    case Kind::kBadMessage:
      return "badmsg:" + std::to_string(bad_m) + ":" + std::to_string(t);
    case Kind::kParity:
      return "parity";
    case Kind::kShiftedThreshold:
      return "shifted:" + std::to_string(t);
  }
  return "never";
}

SyntheticFailurePke::SyntheticFailurePke(Params params)
    : params_(params),
      msg_space_(ByteSpace::indexed(std::uint64_t{1} << params.msg_bits, 1)),
      rand_space_(ByteSpace::indexed(std::uint64_t{1} << params.rand_bits, 2)) {
  if (params_.msg_bits == 0 || params_.msg_bits > 8) {
    throw DomainError("SyntheticFailurePke: msg_bits must be in [1, 8]");
  }
  if (params_.rand_bits == 0 || params_.rand_bits > 16) {
    throw DomainError("SyntheticFailurePke: rand_bits must be in [1, 16]");
  }
  if (params_.key_count == 0 || params_.key_count > (1u << 16)) {
    throw DomainError("SyntheticFailurePke: key_count must be in [1, 2^16]");
  }
}

KeyPair SyntheticFailurePke::keygen(Rng& rng) const {
  return key_pair_for(rng.uniform_below(params_.key_count));
}

KeyPair SyntheticFailurePke::key_pair_for(std::uint64_t key_index) const {
  if (key_index >= params_.key_count) {
    throw DomainError("SyntheticFailurePke: key index out of range");
  }
  KeyPair kp;
  kp.sk = encode_be(key_index, 2);
  kp.pk = {kPkMarker,
           params_.pk_leaks_key_parity
               ? static_cast<std::uint8_t>(key_index & 1u)
               : std::uint8_t{0}};
  return kp;
}

std::uint64_t SyntheticFailurePke::key_of(const Bytes& sk) const {
  if (sk.size() != 2) {
    throw DomainError("SyntheticFailurePke: bad secret key");
  }
  return decode_be(sk, 0, 2);
}

std::uint64_t SyntheticFailurePke::pad(std::uint64_t r) const {
  return splitmix64(r) & ((std::uint64_t{1} << params_.msg_bits) - 1);
}

Bytes SyntheticFailurePke::encrypt(const Bytes& pk, const Bytes& m,
                                   const Bytes& r) const {
  if (pk.size() != 2 || pk[0] != kPkMarker) {
    throw DomainError("SyntheticFailurePke: bad public key");
  }
  auto m_idx = msg_space_.index_of(m);
  auto r_idx = rand_space_.index_of(r);
  if (!m_idx) {
    throw DomainError("SyntheticFailurePke: message outside space");
  }
  if (!r_idx) {
    throw DomainError("SyntheticFailurePke: randomness outside space");
  }
  Bytes c;
  c.reserve(3);
  c.push_back(static_cast<std::uint8_t>(*m_idx ^ pad(*r_idx)));
  append_bytes(c, r);
  return c;
}

std::optional<Bytes> SyntheticFailurePke::decrypt(const Bytes& sk,
                                                  const Bytes& c) const {
  if (c.size() != 3) {
    return std::nullopt;
  }
  Bytes r(c.begin() + 1, c.end());
  auto r_idx = rand_space_.index_of(r);
  if (!r_idx) {
    return std::nullopt;
  }
  std::uint64_t m_idx = c[0] ^ pad(*r_idx);
  if (m_idx >= msg_space_.size()) {
    return std::nullopt;
  }
  std::uint64_t key = key_of(sk);
  if (fails(m_idx, *r_idx, key)) {
    // Injected failure: return the wrong message.
    m_idx ^= 1u;
  }
  return msg_space_.element(m_idx);
}

bool SyntheticFailurePke::fails(std::uint64_t m, std::uint64_t r,
                                std::uint64_t key) const {
  return params_.fail(m, r, key, rand_space_.size());
}

std::uint64_t SyntheticFailurePke::failing_key_count(std::uint64_t m,
                                                     std::uint64_t r) const {
  std::uint64_t count = 0;
  for (std::uint64_t k = 0; k < params_.key_count; ++k) {
    if (fails(m, r, k)) {
      ++count;
    }
  }
  return count;
}

double ExactFailureCurve::tail_at(double t) const {
  // tail_steps is sorted by descending value; mass is cumulative.
  double result = 0.0;
  for (const auto& [value, mass] : tail_steps) {
    if (value >= t) {
      result = mass;
    } else {
      break;
    }
  }
  return result;
}

ExactFailureCurve analytic_failure_prob(const SyntheticFailurePke& scheme,
                                        std::uint64_t m) {
  const std::uint64_t rand_size = scheme.randomness_space().size();
  const std::uint64_t key_count = scheme.params().key_count;
  if (m >= scheme.message_space().size()) {
    throw DomainError("analytic_failure_prob: message out of range");
  }

  ExactFailureCurve curve;
  curve.total_pairs = rand_size * key_count;

  // p(r) = failing_keys(r) / |K|; accumulate exact integer sums.
  std::uint64_t sum_counts = 0;
  unsigned __int128 sum_sq = 0;
  std::map<std::uint64_t, std::uint64_t> histogram;  // failing keys -> #r
  for (std::uint64_t r = 0; r < rand_size; ++r) {
    std::uint64_t fk = scheme.failing_key_count(m, r);
    sum_counts += fk;
    sum_sq += static_cast<unsigned __int128>(fk) * fk;
    ++histogram[fk];
  }
  curve.fail_pairs = sum_counts;

  const double kc = static_cast<double>(key_count);
  const double rs = static_cast<double>(rand_size);
  curve.mean = static_cast<double>(sum_counts) / (rs * kc);
  const double mean_sq =
      static_cast<double>(static_cast<long double>(sum_sq) /
                          (static_cast<long double>(rand_size) * kc * kc));
  curve.variance = std::max(0.0, mean_sq - curve.mean * curve.mean);

  double cumulative = 0.0;
  for (auto it = histogram.rbegin(); it != histogram.rend(); ++it) {
    if (it->first == 0) {
      continue;
    }
    cumulative += static_cast<double>(it->second) / rs;
    curve.tail_steps.emplace_back(static_cast<double>(it->first) / kc,
                                  cumulative);
  }
  return curve;
}

double ExactSchemeStats::tail_envelope_at(double t) const {
  double best = 0.0;
  for (const auto& curve : per_message) {
    best = std::max(best, curve.tail_at(t));
  }
  return best;
}

ExactSchemeStats exact_scheme_stats(const SyntheticFailurePke& scheme) {
  ExactSchemeStats stats;
  const std::uint64_t msg_count = scheme.message_space().size();
  stats.per_message.reserve(msg_count);
  double max_var = 0.0;
  for (std::uint64_t m = 0; m < msg_count; ++m) {
    ExactFailureCurve curve = analytic_failure_prob(scheme, m);
    if (curve.mean > stats.delta_ik) {
      stats.delta_ik = curve.mean;
      stats.argmax_mean = m;
    }
    if (curve.variance > max_var) {
      max_var = curve.variance;
      stats.argmax_variance = m;
    }
    stats.per_message.push_back(std::move(curve));
  }
  stats.sigma = std::sqrt(max_var);
  return stats;
}

}  // namespace folab
