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

#include "folab/games/catalog.hpp"

#include "folab/errors.hpp"

namespace folab {

namespace {

void require_scheme(const CatalogContext& ctx) {
  if (ctx.scheme == nullptr) {
    throw ConfigError("adversary requires a scheme in the catalog context");
  }
}

void require_synthetic(const CatalogContext& ctx) {
  if (ctx.synthetic == nullptr) {
    throw ConfigError("adversary requires a synthetic scheme");
  }
}

void require_small_space(const PkeScheme& scheme, std::uint64_t limit) {
  if (!scheme.message_space().enumerable() ||
      scheme.message_space().size() > limit) {
    throw ConfigError("adversary needs an enumerable message space");
  }
}

// --- IND-KEM adversaries ---------------------------------------------------

IndKemAdversary make_blind_zero(const CatalogContext&) {
  return [](const IndKemInput&, OracleHandles&, Rng&) { return 0; };
}

IndKemAdversary make_blind_coin(const CatalogContext&) {
  return [](const IndKemInput&, OracleHandles&, Rng& rng) {
    return rng.coin() ? 1 : 0;
  };
}

// Queries G' on every message, re-encrypts, recovers the challenge
// plaintext and checks the candidate key against H. Wins with certainty on
// a perfectly correct scheme.
IndKemAdversary make_exhaustive_search(const CatalogContext& ctx) {
  require_scheme(ctx);
  require_small_space(*ctx.scheme, 1u << 12);
  const PkeScheme* scheme = ctx.scheme;
  return [scheme](const IndKemInput& in, OracleHandles& oracles, Rng& rng) {
    const ByteSpace& msgs = scheme->message_space();
    for (std::uint64_t i = 0; i < msgs.size(); ++i) {
      Bytes m = msgs.element(i);
      Bytes r = oracles.g(m);
      if (scheme->encrypt(in.pk, m, r) == in.challenge_ct) {
        return oracles.h(m) == in.candidate_key ? 0 : 1;
      }
    }
    return rng.coin() ? 1 : 0;
  };
}

// Submits `queries` ciphertexts of the form Enc(pk, m; r) with fresh
// adversarial coins and no G query. Every acceptance is a GUESS event.
IndKemAdversary make_ciphertext_guesser(const CatalogContext& ctx) {
  require_scheme(ctx);
  const PkeScheme* scheme = ctx.scheme;
  const std::uint64_t queries = ctx.queries;
  return [scheme, queries](const IndKemInput& in, OracleHandles& oracles,
                           Rng& rng) {
    for (std::uint64_t i = 0; i < queries; ++i) {
      Bytes m = scheme->message_space().sample(rng);
      Bytes r = scheme->randomness_space().sample(rng);
      Bytes c = scheme->encrypt(in.pk, m, r);
      if (c == in.challenge_ct) {
        continue;  // challenge queries are forbidden by policy
      }
      oracles.decaps(c);
    }
    return 0;
  };
}

// Queries G' on every message and decapsulates each derandomized
// encryption; failing messages surface as DIFF events and feed the
// fail-list extractor.
IndKemAdversary make_failure_planter(const CatalogContext& ctx) {
  require_scheme(ctx);
  require_small_space(*ctx.scheme, 1u << 12);
  const PkeScheme* scheme = ctx.scheme;
  return [scheme](const IndKemInput& in, OracleHandles& oracles, Rng&) {
    const ByteSpace& msgs = scheme->message_space();
    for (std::uint64_t i = 0; i < msgs.size(); ++i) {
      Bytes m = msgs.element(i);
      Bytes r = oracles.g(m);
      Bytes c = scheme->encrypt(in.pk, m, r);
      if (c != in.challenge_ct) {
        oracles.decaps(c);
      }
    }
    return 0;
  };
}

// --- FFP adversaries -------------------------------------------------------

// FFP-CCA brute force: tests every message against the decryption oracle.
FfpAdversary make_ffp_bruteforce(const CatalogContext& ctx) {
  require_scheme(ctx);
  require_small_space(*ctx.scheme, 1u << 12);
  const PkeScheme* scheme = ctx.scheme;
  return [scheme](const Bytes& pk, OracleHandles& oracles,
                  Rng&) -> std::optional<Bytes> {
    const ByteSpace& msgs = scheme->message_space();
    for (std::uint64_t i = 0; i < msgs.size(); ++i) {
      Bytes m = msgs.element(i);
      Bytes r = oracles.g(m);
      Bytes c = scheme->encrypt(pk, m, r);
      std::optional<Bytes> back = oracles.decrypt(c);
      if (!back || *back != m) {
        return m;
      }
    }
    return std::nullopt;
  };
}

// Best-of-q searcher: queries G on q messages and outputs the one whose
// key-averaged failure probability (a public quantity of the synthetic
// testbed) is maximal.
FfpAdversary make_ffp_argmax_score(const CatalogContext& ctx) {
  require_synthetic(ctx);
  const SyntheticFailurePke* synthetic = ctx.synthetic;
  const std::uint64_t queries = ctx.queries;
  return [synthetic, queries](const Bytes&, OracleHandles& oracles,
                              Rng&) -> std::optional<Bytes> {
    const ByteSpace& msgs = synthetic->message_space();
    const ByteSpace& rand = synthetic->randomness_space();
    const std::uint64_t probe =
        std::min<std::uint64_t>(queries, msgs.size());
    std::optional<Bytes> best;
    std::uint64_t best_score = 0;
    for (std::uint64_t i = 0; i < probe; ++i) {
      Bytes m = msgs.element(i);
      Bytes r = oracles.g(m);
      std::uint64_t r_idx = *rand.index_of(r);
      std::uint64_t score = synthetic->failing_key_count(i, r_idx);
      if (!best || score > best_score) {
        best = m;
        best_score = score;
      }
    }
    return best;
  };
}

FfpAdversary make_ffp_uniform(const CatalogContext& ctx) {
  require_scheme(ctx);
  const PkeScheme* scheme = ctx.scheme;
  return [scheme](const Bytes&, OracleHandles&, Rng& rng) {
    return std::optional<Bytes>(scheme->message_space().sample(rng));
  };
}

// Outputs the message with the largest exact key-averaged failure rate,
// querying nothing.
FfpAdversary make_ffp_fixed_worst(const CatalogContext& ctx) {
  require_synthetic(ctx);
  ExactSchemeStats stats = exact_scheme_stats(*ctx.synthetic);
  Bytes worst = ctx.synthetic->message_space().element(stats.argmax_mean);
  return [worst](const Bytes&, OracleHandles&, Rng&) {
    return std::optional<Bytes>(worst);
  };
}

// --- FFP-NG adversaries ----------------------------------------------------

FfpNgAdversary make_ng_ignore(const CatalogContext&) {
  return [](const Bytes&, OracleHandles&, Rng&) { return 0; };
}

FfpNgAdversary make_ng_coin(const CatalogContext&) {
  return [](const Bytes&, OracleHandles&, Rng& rng) {
    return rng.coin() ? 1 : 0;
  };
}

// Exploits a public key that leaks the key parity on a scheme whose
// failures depend on key-parity XOR randomness-parity: predict the FCO
// answer under the own-key hypothesis and guess accordingly.
FfpNgAdversary make_ng_parity_leak(const CatalogContext& ctx) {
  require_synthetic(ctx);
  const SyntheticFailurePke* synthetic = ctx.synthetic;
  return [synthetic](const Bytes& pk0, OracleHandles& oracles, Rng&) {
    if (pk0.size() != 2) {
      throw DomainError("parity-leak: unexpected public key layout");
    }
    const std::uint64_t leaked_parity = pk0[1] & 1u;
    Bytes m = synthetic->message_space().element(0);
    Bytes r = synthetic->randomness_space().element(0);
    bool predicted = synthetic->fails(0, 0, leaked_parity);
    bool observed = oracles.fco(m, r);
    return observed == predicted ? 0 : 1;
  };
}

// --- Passive PKE adversaries -----------------------------------------------

OwAdversary make_ow_blind(const CatalogContext& ctx) {
  require_scheme(ctx);
  const PkeScheme* scheme = ctx.scheme;
  return [scheme](const OwInput&, OracleHandles&, Rng& rng) {
    return scheme->message_space().sample(rng);
  };
}

OwAdversary make_ow_exhaustive(const CatalogContext& ctx) {
  require_scheme(ctx);
  const PkeScheme* scheme = ctx.scheme;
  if (!scheme->message_space().enumerable() ||
      !scheme->randomness_space().enumerable() ||
      scheme->message_space().size() * scheme->randomness_space().size() >
          (1u << 16)) {
    throw ConfigError("ow-exhaustive needs small message/randomness spaces");
  }
  return [scheme](const OwInput& in, OracleHandles&, Rng& rng) {
    const ByteSpace& msgs = scheme->message_space();
    const ByteSpace& rand = scheme->randomness_space();
    for (std::uint64_t mi = 0; mi < msgs.size(); ++mi) {
      Bytes m = msgs.element(mi);
      for (std::uint64_t ri = 0; ri < rand.size(); ++ri) {
        if (scheme->encrypt(in.pk, m, rand.element(ri)) == in.challenge_ct) {
          return m;
        }
      }
    }
    return msgs.sample(rng);
  };
}

IndPkeAdversary make_ind_pke_blind(const CatalogContext& ctx) {
  require_scheme(ctx);
  const PkeScheme* scheme = ctx.scheme;
  IndPkeAdversary adv;
  adv.choose = [scheme](const Bytes&, OracleHandles&, Rng&) {
    return std::make_pair(scheme->message_space().element(0),
                          scheme->message_space().element(1));
  };
  adv.guess = [](const Bytes&, const Bytes&, OracleHandles&, Rng& rng) {
    return rng.coin() ? 1 : 0;
  };
  return adv;
}

IndPkeAdversary make_ind_pke_exhaustive(const CatalogContext& ctx) {
  require_scheme(ctx);
  const PkeScheme* scheme = ctx.scheme;
  IndPkeAdversary adv;
  adv.choose = [scheme](const Bytes&, OracleHandles&, Rng&) {
    return std::make_pair(scheme->message_space().element(0),
                          scheme->message_space().element(1));
  };
  adv.guess = [scheme](const Bytes& pk, const Bytes& c_star, OracleHandles&,
                       Rng&) {
    const ByteSpace& rand = scheme->randomness_space();
    Bytes m0 = scheme->message_space().element(0);
    for (std::uint64_t ri = 0; ri < rand.size(); ++ri) {
      if (scheme->encrypt(pk, m0, rand.element(ri)) == c_star) {
        return 0;
      }
    }
    return 1;
  };
  return adv;
}

}  // namespace

const AdversaryCatalog& AdversaryCatalog::instance() {
  static const AdversaryCatalog catalog;
  return catalog;
}

IndKemAdversary AdversaryCatalog::ind_kem(const std::string& name,
                                          const CatalogContext& ctx) const {
  if (name == "blind-zero") return make_blind_zero(ctx);
  if (name == "blind-coin") return make_blind_coin(ctx);
  if (name == "exhaustive-search") return make_exhaustive_search(ctx);
  if (name == "ciphertext-guesser") return make_ciphertext_guesser(ctx);
  if (name == "failure-planter") return make_failure_planter(ctx);
  throw ConfigError("unknown IND-KEM adversary: " + name);
}

FfpAdversary AdversaryCatalog::ffp(const std::string& name,
                                   const CatalogContext& ctx) const {
  if (name == "ffp-bruteforce") return make_ffp_bruteforce(ctx);
  if (name == "ffp-argmax-score") return make_ffp_argmax_score(ctx);
  if (name == "ffp-uniform") return make_ffp_uniform(ctx);
  if (name == "ffp-fixed-worst") return make_ffp_fixed_worst(ctx);
  throw ConfigError("unknown FFP adversary: " + name);
}

FfpNgAdversary AdversaryCatalog::ffp_ng(const std::string& name,
                                        const CatalogContext& ctx) const {
  if (name == "ng-ignore") return make_ng_ignore(ctx);
  if (name == "ng-coin") return make_ng_coin(ctx);
  if (name == "ng-parity-leak") return make_ng_parity_leak(ctx);
  throw ConfigError("unknown FFP-NG adversary: " + name);
}

OwAdversary AdversaryCatalog::ow(const std::string& name,
                                 const CatalogContext& ctx) const {
  if (name == "ow-blind") return make_ow_blind(ctx);
  if (name == "ow-exhaustive") return make_ow_exhaustive(ctx);
  throw ConfigError("unknown OW adversary: " + name);
}

IndPkeAdversary AdversaryCatalog::ind_pke(const std::string& name,
                                          const CatalogContext& ctx) const {
  if (name == "indpke-blind") return make_ind_pke_blind(ctx);
  if (name == "indpke-exhaustive") return make_ind_pke_exhaustive(ctx);
  throw ConfigError("unknown IND-PKE adversary: " + name);
}

std::vector<std::string> AdversaryCatalog::ind_kem_names() const {
  return {"blind-zero", "blind-coin", "exhaustive-search", "ciphertext-guesser",
          "failure-planter"};
}
std::vector<std::string> AdversaryCatalog::ffp_names() const {
  return {"ffp-bruteforce", "ffp-argmax-score", "ffp-uniform",
          "ffp-fixed-worst"};
}
std::vector<std::string> AdversaryCatalog::ffp_ng_names() const {
  return {"ng-ignore", "ng-coin", "ng-parity-leak"};
}
std::vector<std::string> AdversaryCatalog::ow_names() const {
  return {"ow-blind", "ow-exhaustive"};
}
std::vector<std::string> AdversaryCatalog::ind_pke_names() const {
  return {"indpke-blind", "indpke-exhaustive"};
}

}  // namespace folab
