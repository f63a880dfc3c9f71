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

#include "folab/bounds/log2real.hpp"

#include <cmath>

#include "folab/errors.hpp"

namespace folab {

Log2Real Log2Real::zero() { return Log2Real(true, 0.0L); }

Log2Real Log2Real::from_log2(long double exponent) {
  return Log2Real(false, exponent);
}

Log2Real Log2Real::from_value(long double value) {
  if (value < 0.0L) {
    throw DomainError("Log2Real: negative value");
  }
  if (value == 0.0L) {
    return zero();
  }
  return Log2Real(false, std::log2(value));
}

long double Log2Real::log2() const {
  if (zero_) {
    throw DomainError("Log2Real: log2 of zero");
  }
  return exp_;
}

long double Log2Real::to_long_double() const {
  if (zero_) {
    return 0.0L;
  }
  return std::exp2(exp_);
}

double Log2Real::to_probability() const {
  if (zero_) {
    return 0.0;
  }
  if (exp_ >= 0.0L) {
    return 1.0;
  }
  return static_cast<double>(std::exp2(exp_));
}

Log2Real Log2Real::operator*(const Log2Real& other) const {
  if (zero_ || other.zero_) {
    return zero();
  }
  return from_log2(exp_ + other.exp_);
}

Log2Real Log2Real::operator/(const Log2Real& other) const {
  if (other.zero_) {
    throw DomainError("Log2Real: division by zero");
  }
  if (zero_) {
    return zero();
  }
  return from_log2(exp_ - other.exp_);
}

Log2Real Log2Real::operator+(const Log2Real& other) const {
  if (zero_) {
    return other;
  }
  if (other.zero_) {
    return *this;
  }
  const long double hi = exp_ >= other.exp_ ? exp_ : other.exp_;
  const long double lo = exp_ >= other.exp_ ? other.exp_ : exp_;
  // log2(2^hi + 2^lo) = hi + log2(1 + 2^(lo - hi))
  return from_log2(hi + std::log1p(std::exp2(lo - hi)) / std::log(2.0L));
}

Log2Real Log2Real::sqrt() const {
  if (zero_) {
    return zero();
  }
  return from_log2(exp_ / 2.0L);
}

std::partial_ordering Log2Real::operator<=>(const Log2Real& other) const {
  if (zero_ && other.zero_) {
    return std::partial_ordering::equivalent;
  }
  if (zero_) {
    return std::partial_ordering::less;
  }
  if (other.zero_) {
    return std::partial_ordering::greater;
  }
  return exp_ <=> other.exp_;
}

bool Log2Real::operator==(const Log2Real& other) const {
  return (*this <=> other) == std::partial_ordering::equivalent;
}

}  // namespace folab
