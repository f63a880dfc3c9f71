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

#include "folab/bounds/exactreal.hpp"

#include <cmath>

#include "folab/errors.hpp"

namespace folab {

ExactReal::ExactReal() : rational_(true), q_(0), f_(0, float_precision_bits()) {}

ExactReal::ExactReal(mpq_class q)
    : rational_(true), q_(std::move(q)), f_(0, float_precision_bits()) {}

ExactReal::ExactReal(mpf_class f)
    : rational_(false), q_(0), f_(std::move(f)) {}

ExactReal ExactReal::from_uint(unsigned long v) {
  return ExactReal(mpq_class(v));
}

ExactReal ExactReal::from_long_double(long double v) {
  if (v < 0.0L) {
    throw DomainError("ExactReal: negative value");
  }
  if (v == 0.0L) {
    return ExactReal();
  }
  // v = mantissa * 2^(exp - 64) with a 64-bit integer mantissa; both parts
  // convert exactly.
  int exp = 0;
  long double mant = std::frexp(v, &exp);
  long double scaled = std::ldexp(mant, 64);
  unsigned long long mant_int = static_cast<unsigned long long>(scaled);
  if (static_cast<long double>(mant_int) != scaled) {
    throw DomainError("ExactReal: value is not a 64-bit dyadic");
  }
  mpz_class mant_z(static_cast<unsigned long>(mant_int >> 32));
  mant_z <<= 32;
  mant_z += static_cast<unsigned long>(mant_int & 0xffffffffULL);
  mpq_class q(mant_z);
  long e = exp - 64;
  mpq_class pow;
  if (e >= 0) {
    mpz_class num(1);
    num <<= static_cast<unsigned long>(e);
    pow = mpq_class(num);
  } else {
    mpz_class den(1);
    den <<= static_cast<unsigned long>(-e);
    pow = mpq_class(1) / mpq_class(den);
  }
  return ExactReal(mpq_class(q * pow));
}

ExactReal ExactReal::pow2_int(long e) {
  if (e >= 0) {
    mpz_class num(1);
    num <<= static_cast<unsigned long>(e);
    return ExactReal(mpq_class(num));
  }
  mpz_class den(1);
  den <<= static_cast<unsigned long>(-e);
  mpq_class q(1);
  q /= mpq_class(den);
  return ExactReal(q);
}

ExactReal ExactReal::pow2(long double e) {
  const long double floor_e = std::floor(e);
  if (floor_e == e && std::abs(e) < 1.0e9L) {
    return pow2_int(static_cast<long>(e));
  }
  // Split into integer and fractional parts; the fractional factor is the
  // only inexact step.
  ExactReal integral = pow2_int(static_cast<long>(floor_e));
  long double frac = e - floor_e;
  mpf_class factor(0, float_precision_bits());
  factor = static_cast<double>(std::exp2(frac));
  mpf_class result(0, float_precision_bits());
  result = integral.as_float() * factor;
  return ExactReal(result);
}

bool ExactReal::is_zero() const {
  return rational_ ? q_ == 0 : f_ == 0;
}

mpf_class ExactReal::as_float() const {
  mpf_class f(0, float_precision_bits());
  if (rational_) {
    f = q_;
  } else {
    f = f_;
  }
  return f;
}

ExactReal ExactReal::operator+(const ExactReal& other) const {
  if (rational_ && other.rational_) {
    return ExactReal(mpq_class(q_ + other.q_));
  }
  return ExactReal(mpf_class(as_float() + other.as_float()));
}

ExactReal ExactReal::operator-(const ExactReal& other) const {
  if (rational_ && other.rational_) {
    return ExactReal(mpq_class(q_ - other.q_));
  }
  return ExactReal(mpf_class(as_float() - other.as_float()));
}

ExactReal ExactReal::operator*(const ExactReal& other) const {
  if (rational_ && other.rational_) {
    return ExactReal(mpq_class(q_ * other.q_));
  }
  return ExactReal(mpf_class(as_float() * other.as_float()));
}

ExactReal ExactReal::operator/(const ExactReal& other) const {
  if (other.is_zero()) {
    throw DomainError("ExactReal: division by zero");
  }
  if (rational_ && other.rational_) {
    return ExactReal(mpq_class(q_ / other.q_));
  }
  return ExactReal(mpf_class(as_float() / other.as_float()));
}

ExactReal ExactReal::sqrt() const {
  mpf_class f(0, float_precision_bits());
  mpf_sqrt(f.get_mpf_t(), as_float().get_mpf_t());
  return ExactReal(f);
}

long double ExactReal::log2() const {
  if (is_zero()) {
    throw DomainError("ExactReal: log2 of zero");
  }
  if (rational_) {
    signed long num_exp = 0;
    signed long den_exp = 0;
    double num_d = mpz_get_d_2exp(&num_exp, q_.get_num().get_mpz_t());
    double den_d = mpz_get_d_2exp(&den_exp, q_.get_den().get_mpz_t());
    return static_cast<long double>(num_exp - den_exp) +
           std::log2(static_cast<long double>(num_d)) -
           std::log2(static_cast<long double>(den_d));
  }
  signed long exp = 0;
  double d = mpf_get_d_2exp(&exp, f_.get_mpf_t());
  return static_cast<long double>(exp) +
         std::log2(static_cast<long double>(d));
}

}  // namespace folab
