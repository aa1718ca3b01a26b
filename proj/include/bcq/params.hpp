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

#ifndef BCQ_PARAMS_HPP
#define BCQ_PARAMS_HPP

#include <array>
#include <string>
#include <type_traits>

#include "bcq/scalar.hpp"

namespace bcq {

namespace detail {

template <class S>
bool real_less(const S& a, const S& b) {
  if constexpr (std::is_same_v<S, Complex>) {
    return a.real() < b.real();
  } else {
    return a < b;
  }
}

template <class S>
bool is_real_value(const S& a, double tol = 1e-12) {
  if constexpr (std::is_same_v<S, Complex>) {
    return std::abs(a.imag()) <= tol * std::max(1.0, std::abs(a));
  } else {
    return true;
  }
}

template <class S>
std::string show(const S& a) {
  if constexpr (std::is_same_v<S, Rational>) {
    return a.str();
  } else if constexpr (std::is_same_v<S, Complex>) {
    return "(" + std::to_string(a.real()) + "," + std::to_string(a.imag()) + ")";
  } else {
    return std::to_string(static_cast<double>(a));
  }
}

template <class S>
void require_base(const S& q) {
  if (!is_real_value(q) || !real_less(S(0), q) || !real_less(q, S(1))) {
    throw DomainError("q outside (0,1): " + show(q));
  }
}

}  // namespace detail

/// Koornwinder parameters (t_0..t_3; q, t = q^k).
template <class S>
struct KoornwinderParams {
  std::array<S, 4> t;
  S q;
  int k = 1;

  S t_base() const { return ipow(q, k); }
  S product() const { return t[0] * t[1] * t[2] * t[3]; }

  /// Membership in V_K: parameters real or in conjugate pairs, and
  /// t_i t_j not in [1, infinity) for i < j.
  void validate() const {
    detail::require_base(q);
    if (k < 1) {
      throw DomainError("k must be a positive integer");
    }
    for (int i = 0; i < 4; ++i) {
      if (!detail::is_real_value(t[i])) {
        bool paired = false;
        for (int j = 0; j < 4; ++j) {
          if (j != i && magnitude(S(t[j] - conjugate(t[i]))) <= 1e-12 * magnitude(t[i])) {
            paired = true;
          }
        }
        if (!paired) {
          throw DomainError("t" + std::to_string(i) + " is neither real nor part of a conjugate pair");
        }
      }
    }
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        const S p = t[i] * t[j];
        if (detail::is_real_value(p) && !detail::real_less(p, S(1))) {
          throw DomainError("t" + std::to_string(i) + "*t" + std::to_string(j) +
                            " lies in [1,infinity)");
        }
      }
    }
  }

  template <class T>
  KoornwinderParams<T> cast() const {
    return {{scalar_cast<T>(t[0]), scalar_cast<T>(t[1]), scalar_cast<T>(t[2]),
             scalar_cast<T>(t[3])},
            scalar_cast<T>(q),
            k};
  }
};

/// Big q-Jacobi parameters (a, b, c, d; q, t = q^k), real branch.
template <class S>
struct BigJacobiParams {
  S a;
  S b;
  S c;
  S d;
  S q;
  int k = 1;

  void validate() const {
    using detail::real_less;
    detail::require_base(q);
    if (k < 1) {
      throw DomainError("k must be a positive integer");
    }
    if (!real_less(S(0), c) || !real_less(S(0), d)) {
      throw DomainError("c and d must be positive");
    }
    const S one_over_q = S(1) / q;
    if (!real_less(S(-c / (d * q)), a) || !real_less(a, one_over_q)) {
      throw DomainError("a outside (-c/(dq),1/q)");
    }
    if (!real_less(S(-d / (c * q)), b) || !real_less(b, one_over_q)) {
      throw DomainError("b outside (-d/(cq),1/q)");
    }
  }

  template <class T>
  BigJacobiParams<T> cast() const {
    return {scalar_cast<T>(a), scalar_cast<T>(b), scalar_cast<T>(c), scalar_cast<T>(d),
            scalar_cast<T>(q), k};
  }
};

/// Complex branch of the big q-Jacobi domain: a = c z, b = -d conj(z) with z
/// not real.
inline bool is_big_complex_pair(Complex a, Complex b, double c, double d, double tol = 1e-12) {
  if (!(c > 0 && d > 0)) {
    return false;
  }
  const Complex z = a / c;
  return std::abs(z.imag()) > tol && std::abs(b + d * std::conj(z)) <= tol * std::abs(b);
}

/// Little q-Jacobi parameters (a, b; q, t = q^k).
template <class S>
struct LittleJacobiParams {
  S a;
  S b;
  S q;
  int k = 1;

  void validate() const {
    using detail::real_less;
    detail::require_base(q);
    if (k < 1) {
      throw DomainError("k must be a positive integer");
    }
    const S one_over_q = S(1) / q;
    if (!real_less(S(0), a) || !real_less(a, one_over_q)) {
      throw DomainError("a outside (0,1/q)");
    }
    if (!real_less(b, one_over_q)) {
      throw DomainError("b outside (-infinity,1/q)");
    }
  }

  template <class T>
  LittleJacobiParams<T> cast() const {
    return {scalar_cast<T>(a), scalar_cast<T>(b), scalar_cast<T>(q), k};
  }
};

}  // namespace bcq

#endif  // BCQ_PARAMS_HPP
