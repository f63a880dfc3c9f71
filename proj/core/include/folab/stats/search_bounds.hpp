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

#ifndef FOLAB_STATS_SEARCH_BOUNDS_HPP_
#define FOLAB_STATS_SEARCH_BOUNDS_HPP_

#include <cstdint>
#include <vector>

namespace folab {

/// Constant of the oracle-search success bound.
inline constexpr long double kSearchCollisionConstant = 152.0L;
/// C = 304, fixed by the FFP-NK bounds.
inline constexpr long double kSearchConstant = 304.0L;

/// Success probability bound for finding an oracle input satisfying a
/// relation R: min(1, 152 (q+1)^2 Gamma_R / |Y|). Gamma_R > |Y| is a
/// domain error.
long double search_success_bound(long double q, long double gamma_r,
                                 long double y_size);

/// Expectation bound for finding large values of a function with tail
/// bound G on a value grid t_1 < ... < t_R:
///   t_kappa + C q^2 sum_{i > kappa} t_i (G(t_i) - G(t_{i+1})),
/// where kappa = min{ i : C q^2 G(t_i) <= 1 } and G(t_{R+1}) = 0.
/// Evaluated in extended precision; clamped to [0, 1].
long double expectation_search_bound(const std::vector<long double>& grid,
                                     const std::vector<long double>& tail_g,
                                     long double q);

/// Chebyshev-tail FFP-NK bound:
///   mu + 3 sqrt(C) q sigma + 2 C q^2 sigma^2 mu (-ln(sqrt(C) q sigma)),
/// natural logarithm. Returns 1 when sqrt(C) q sigma > 1 (the bound is
/// trivial there). q = 0 or sigma = 0 reduce to mu.
long double ffp_nk_bound_chebyshev(long double q, long double mu,
                                   long double sigma);

/// Gaussian-tail FFP-NK bound:
///   mu + 2 beta^{-1/2} sqrt(ln(2 C sqrt(beta)) + 2 ln q),
/// requiring beta >= e / (2C) and q >= 1. Clamped to [0, 1].
long double ffp_nk_bound_gaussian(long double q, long double mu,
                                  long double beta);

/// Smallest admissible beta for the Gaussian bound, e / (2C).
long double gaussian_beta_threshold();

}  // namespace folab

#endif  // FOLAB_STATS_SEARCH_BOUNDS_HPP_
