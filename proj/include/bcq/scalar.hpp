// Copyright 2026 The bcq Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef BCQ_SCALAR_HPP
#define BCQ_SCALAR_HPP

#include <cmath>
#include <complex>
#include <optional>
#include <string>
#include <type_traits>

#include <boost/multiprecision/gmp.hpp>

#include "bcq/errors.hpp"

namespace bcq {

/// Exact rational scalar backed by GMP. Expression templates are disabled so
/// the type behaves like a plain value inside Eigen and the standard library.
using Rational = boost::multiprecision::number<boost::multiprecision::gmp_rational,
                                               boost::multiprecision::et_off>;
using Integer = boost::multiprecision::number<boost::multiprecision::gmp_int,
                                              boost::multiprecision::et_off>;
using Complex = std::complex<double>;

template <class S>
struct scalar_traits;

template <>
struct scalar_traits<Rational> {
  static constexpr bool exact = true;
  static constexpr bool is_complex = false;
  static constexpr const char* name = "rational";
};

template <>
struct scalar_traits<double> {
  static constexpr bool exact = false;
  static constexpr bool is_complex = false;
  static constexpr const char* name = "double";
};

template <>
struct scalar_traits<long double> {
  static constexpr bool exact = false;
  static constexpr bool is_complex = false;
  static constexpr const char* name = "extended";
};

template <>
struct scalar_traits<Complex> {
  static constexpr bool exact = false;
  static constexpr bool is_complex = true;
  static constexpr const char* name = "complex";
};

template <class S>
inline constexpr bool is_exact_v = scalar_traits<S>::exact;

/// Conversion between the supported scalar types. Narrowing from complex to
/// real keeps the real part.
template <class T, class S>
T scalar_cast(const S& x) {
  if constexpr (std::is_same_v<T, S>) {
    return x;
  } else if constexpr (std::is_same_v<S, Rational>) {
    if constexpr (std::is_same_v<T, Complex>) {
      return Complex(x.template convert_to<double>(), 0.0);
    } else {
      return x.template convert_to<T>();
    }
  } else if constexpr (std::is_same_v<S, Complex>) {
    static_assert(!std::is_same_v<T, Rational>, "no conversion from floating point to rational");
    return static_cast<T>(x.real());
  } else {
    static_assert(!std::is_same_v<T, Rational>, "no conversion from floating point to rational");
    if constexpr (std::is_same_v<T, Complex>) {
      return Complex(static_cast<double>(x), 0.0);
    } else {
      return static_cast<T>(x);
    }
  }
}

template <class S>
double magnitude(const S& x) {
  if constexpr (std::is_same_v<S, Rational>) {
    return std::abs(x.template convert_to<double>());
  } else if constexpr (std::is_same_v<S, Complex>) {
    return std::abs(x);
  } else {
    return static_cast<double>(std::abs(x));
  }
}

template <class S>
S conjugate(const S& x) {
  if constexpr (std::is_same_v<S, Complex>) {
    return std::conj(x);
  } else {
    return x;
  }
}

template <class S>
bool scalar_is_zero(const S& x) {
  return x == S(0);
}

/// Integer power by repeated squaring; negative exponents invert.
template <class S>
S ipow(const S& x, long e) {
  if (e < 0) {
    return S(1) / ipow(x, -e);
  }
  S result(1);
  S base = x;
  while (e > 0) {
    if (e & 1) {
      result *= base;
    }
    base *= base;
    e >>= 1;
  }
  return result;
}

/// Parses "p/q", an integer, or a decimal such as "0.125" or "3e-4" into an
/// exact rational.
Rational parse_rational(const std::string& text);

/// True when the text is a rational literal ("p/q" or an integer).
bool looks_rational(const std::string& text);

/// Returns the exact square root when numerator and denominator are squares.
std::optional<Rational> exact_sqrt(const Rational& x);

/// Square root in the scalar domain; over the rationals the argument must be
/// a perfect square.
template <class S>
S scalar_sqrt(const S& x) {
  if constexpr (std::is_same_v<S, Rational>) {
    auto r = exact_sqrt(x);
    if (!r) {
      throw DomainError("square root of " + x.str() + " is not rational");
    }
    return *r;
  } else {
    return std::sqrt(x);
  }
}

std::string to_string(const Rational& x);

}  // namespace bcq

#endif  // BCQ_SCALAR_HPP
