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

#ifndef FOLAB_BOUNDS_EXACTREAL_HPP_
#define FOLAB_BOUNDS_EXACTREAL_HPP_

#include <gmpxx.h>

namespace folab {

/// Cross-check arithmetic for the bound evaluators: exact rationals
/// wherever the formula is rational (dyadic inputs, integer powers of
/// two), escalating to 768-bit floats only for roots and non-integer
/// exponents. Exponents are unbounded either way.
class ExactReal {
 public:
  ExactReal();  // zero

  static ExactReal from_uint(unsigned long v);
  /// Exact dyadic conversion of a long double (no rounding).
  static ExactReal from_long_double(long double v);
  /// Exact 2^e for integer e.
  static ExactReal pow2_int(long e);
  /// 2^e for arbitrary e; exact when e is integral.
  static ExactReal pow2(long double e);

  bool is_rational() const { return rational_; }
  bool is_zero() const;

  ExactReal operator+(const ExactReal& other) const;
  ExactReal operator-(const ExactReal& other) const;
  ExactReal operator*(const ExactReal& other) const;
  ExactReal operator/(const ExactReal& other) const;
  ExactReal sqrt() const;

  /// Base-2 logarithm, accurate to double precision.
  long double log2() const;

  static int float_precision_bits() { return 768; }

 private:
  explicit ExactReal(mpq_class q);
  explicit ExactReal(mpf_class f);

  mpf_class as_float() const;

  bool rational_;
  mpq_class q_;
  mpf_class f_;
};

}  // namespace folab

#endif  // FOLAB_BOUNDS_EXACTREAL_HPP_
