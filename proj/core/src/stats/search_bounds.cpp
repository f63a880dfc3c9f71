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

#include "folab/stats/search_bounds.hpp"

#include <cmath>

#include "folab/errors.hpp"

namespace folab {

namespace {

long double clamp01(long double x) {
  if (x < 0.0L) {
    return 0.0L;
  }
  return x > 1.0L ? 1.0L : x;
}

}  // namespace

long double search_success_bound(long double q, long double gamma_r,
                                 long double y_size) {
  if (q < 0.0L) {
    throw DomainError("search_success_bound: negative query count");
  }
  if (y_size <= 0.0L || gamma_r < 0.0L) {
    throw DomainError("search_success_bound: bad relation sizes");
  }
  if (gamma_r > y_size) {
    throw DomainError("search_success_bound: Gamma_R exceeds |Y|");
  }
  const long double qq = q + 1.0L;
  return clamp01(kSearchCollisionConstant * qq * qq * (gamma_r / y_size));
}

long double expectation_search_bound(const std::vector<long double>& grid,
                                     const std::vector<long double>& tail_g,
                                     long double q) {
  if (grid.empty() || grid.size() != tail_g.size()) {
    throw DomainError("expectation_search_bound: empty or mismatched grid");
  }
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (grid[i] < 0.0L || grid[i] > 1.0L ||
        (i > 0 && grid[i] <= grid[i - 1])) {
      throw DomainError(
          "expectation_search_bound: grid must be strictly increasing in "
          "[0, 1]");
    }
    if (tail_g[i] < 0.0L || (i > 0 && tail_g[i] > tail_g[i - 1])) {
      throw DomainError("expectation_search_bound: G must be non-increasing");
    }
  }
  if (q < 0.0L) {
    throw DomainError("expectation_search_bound: negative query count");
  }

  const std::size_t r = grid.size();
  const long double cq2 = kSearchConstant * q * q;

  // kappa = first index with C q^2 G(t_i) <= 1; if none, the bound is
  // trivial.
  std::size_t kappa = r;
  for (std::size_t i = 0; i < r; ++i) {
    if (cq2 * tail_g[i] <= 1.0L) {
      kappa = i;
      break;
    }
  }
  if (kappa == r) {
    return 1.0L;
  }

  long double sum = 0.0L;
  for (std::size_t i = kappa + 1; i < r; ++i) {
    const long double next = i + 1 < r ? tail_g[i + 1] : 0.0L;
    sum += grid[i] * (tail_g[i] - next);
  }
  return clamp01(grid[kappa] + cq2 * sum);
}

long double ffp_nk_bound_chebyshev(long double q, long double mu,
                                   long double sigma) {
  if (sigma < 0.0L) {
    throw DomainError("ffp_nk_bound_chebyshev: negative sigma");
  }
  if (mu < 0.0L || mu > 1.0L) {
    throw DomainError("ffp_nk_bound_chebyshev: mu outside [0, 1]");
  }
  if (q < 0.0L) {
    throw DomainError("ffp_nk_bound_chebyshev: negative query count");
  }
  const long double x = std::sqrt(kSearchConstant) * q * sigma;
  if (x == 0.0L) {
    return mu;  // both q-dependent terms vanish
  }
  if (x > 1.0L) {
    return 1.0L;  // the bound is trivial past sqrt(C) q sigma = 1
  }
  return clamp01(mu + 3.0L * x + 2.0L * x * x * mu * (-std::log(x)));
}

long double gaussian_beta_threshold() {
  return std::exp(1.0L) / (2.0L * kSearchConstant);
}

long double ffp_nk_bound_gaussian(long double q, long double mu,
                                  long double beta) {
  if (beta < gaussian_beta_threshold()) {
    throw DomainError("ffp_nk_bound_gaussian: beta below e/(2C)");
  }
  if (q < 1.0L) {
    throw DomainError("ffp_nk_bound_gaussian: q must be at least 1");
  }
  if (mu < 0.0L || mu > 1.0L) {
    throw DomainError("ffp_nk_bound_gaussian: mu outside [0, 1]");
  }
  const long double log_term =
      std::log(2.0L * kSearchConstant * std::sqrt(beta)) + 2.0L * std::log(q);
  return clamp01(mu + 2.0L / std::sqrt(beta) * std::sqrt(log_term));
}

}  // namespace folab
