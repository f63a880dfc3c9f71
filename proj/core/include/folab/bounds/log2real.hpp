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

#ifndef FOLAB_BOUNDS_LOG2REAL_HPP_
#define FOLAB_BOUNDS_LOG2REAL_HPP_

#include <compare>

namespace folab {

/// Nonnegative real carried as its base-2 logarithm in extended precision
/// (64-bit mantissa). Exponents of magnitude ~10^4, far beyond any native
/// float range, stay exact under multiplication; addition uses base-2
/// log-sum-exp. Rounding: one ulp of the 64-bit mantissa per operation.
class Log2Real {
 public:
  static Log2Real zero();
  static Log2Real one() { return from_log2(0.0L); }
  static Log2Real from_log2(long double exponent);
  static Log2Real from_value(long double value);  // value >= 0

  bool is_zero() const { return zero_; }
  /// Base-2 logarithm; calling this on zero is a domain error.
  long double log2() const;

  /// Saturates to the long double range (underflow to 0, overflow to inf).
  long double to_long_double() const;
  /// min(1, value), as a double.
  double to_probability() const;

  Log2Real operator*(const Log2Real& other) const;
  Log2Real operator/(const Log2Real& other) const;
  Log2Real operator+(const Log2Real& other) const;
  Log2Real sqrt() const;

  std::partial_ordering operator<=>(const Log2Real& other) const;
  bool operator==(const Log2Real& other) const;

 private:
  Log2Real(bool zero, long double exponent) : zero_(zero), exp_(exponent) {}

  bool zero_ = true;
  long double exp_ = 0.0L;
};

}  // namespace folab

#endif  // FOLAB_BOUNDS_LOG2REAL_HPP_
