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

#ifndef FOLAB_GAMES_CATALOG_HPP_
#define FOLAB_GAMES_CATALOG_HPP_

#include <string>
#include <vector>

#include "folab/games/adversary.hpp"
#include "folab/toy/synthetic.hpp"

namespace folab {

/// Scheme handles and knobs available to adversary factories.
struct CatalogContext {
  const PkeScheme* scheme = nullptr;
  const SyntheticFailurePke* synthetic = nullptr;
  std::uint64_t queries = 16;  // searcher / guesser query count
};

/// Named registry of the built-in programmable adversaries; the CLI and
/// the test suites select them by name.
class AdversaryCatalog {
 public:
  static const AdversaryCatalog& instance();

  IndKemAdversary ind_kem(const std::string& name,
                          const CatalogContext& ctx) const;
  FfpAdversary ffp(const std::string& name, const CatalogContext& ctx) const;
  FfpNgAdversary ffp_ng(const std::string& name,
                        const CatalogContext& ctx) const;
  OwAdversary ow(const std::string& name, const CatalogContext& ctx) const;
  IndPkeAdversary ind_pke(const std::string& name,
                          const CatalogContext& ctx) const;

  std::vector<std::string> ind_kem_names() const;
  std::vector<std::string> ffp_names() const;
  std::vector<std::string> ffp_ng_names() const;
  std::vector<std::string> ow_names() const;
  std::vector<std::string> ind_pke_names() const;
};

}  // namespace folab

#endif  // FOLAB_GAMES_CATALOG_HPP_
