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

#include "bcq/qseries.hpp"

#include <cmath>
#include <string>

namespace bcq {

QBase::QBase(double value) : q(value) {
  if (!(value > 0.0 && value < 1.0)) {
    throw DomainError("q outside (0,1): " + std::to_string(value));
  }
}

void TruncationPolicy::validate() const {
  if (!(abs_tol > 0.0)) {
    throw DomainError("truncation tolerance must be positive");
  }
  if (max_terms < 1) {
    throw DomainError("truncation needs at least one term");
  }
}

Complex qpochhammer(Complex a, QBase q, int i) {
  if (i < 0) {
    throw DomainError("finite q-shifted factorial needs i >= 0");
  }
  Complex result(1.0);
  double qj = 1.0;
  for (int j = 0; j < i; ++j) {
    result *= 1.0 - qj * a;
    qj *= q.q;
  }
  return result;
}

Complex qpochhammer_inf(Complex a, QBase q, const TruncationPolicy& policy) {
  Complex result(1.0);
  Complex term = a;
  for (int j = 0; j < policy.max_terms; ++j) {
    if (std::abs(term) < policy.abs_tol) {
      return result;
    }
    result *= 1.0 - term;
    term *= q.q;
  }
  throw ConvergenceError("infinite q-shifted factorial did not converge within " +
                         std::to_string(policy.max_terms) + " factors");
}

Complex qpochhammer_multi(std::span<const Complex> a, QBase q, int i) {
  Complex result(1.0);
  for (const Complex& x : a) {
    result *= qpochhammer(x, q, i);
  }
  return result;
}

Complex qpochhammer_multi_inf(std::span<const Complex> a, QBase q,
                              const TruncationPolicy& policy) {
  Complex result(1.0);
  for (const Complex& x : a) {
    result *= qpochhammer_inf(x, q, policy);
  }
  return result;
}

double log_abs_qgamma(double a, QBase q, const TruncationPolicy& policy, int* sign) {
  if (a <= 0.0 && a == std::floor(a)) {
    throw DomainError("q-Gamma has a pole at " + std::to_string(a));
  }
  const double lq = std::log(q.q);
  double acc = (1.0 - a) * std::log1p(-q.q);
  int s = 1;
  for (int j = 0;; ++j) {
    if (j >= policy.max_terms) {
      throw ConvergenceError("q-Gamma product did not converge within " +
                             std::to_string(policy.max_terms) + " factors");
    }
    const double top = std::exp((j + 1) * lq);
    const double bottom = std::exp((j + a) * lq);
    if (top < policy.abs_tol && bottom < policy.abs_tol) {
      break;
    }
    acc += std::log1p(-top);
    if (bottom < 1.0) {
      acc -= std::log1p(-bottom);
    } else {
      acc -= std::log(bottom - 1.0);
      s = -s;
    }
  }
  if (sign != nullptr) {
    *sign = s;
  }
  return acc;
}

double qgamma(double a, QBase q, const TruncationPolicy& policy) {
  int sign = 1;
  const double la = log_abs_qgamma(a, q, policy, &sign);
  return sign * std::exp(la);
}

Complex jackson_sum(const std::function<Complex(Complex)>& f, Complex b, std::optional<int> N,
                    QBase q, const TruncationPolicy& policy) {
  if (N && *N < 0) {
    return Complex(0.0);
  }
  Complex sum(0.0);
  Complex x = b;
  int small = 0;
  for (int k = 0;; ++k) {
    if (N && k > *N) {
      return sum;
    }
    if (!N && k >= policy.max_terms) {
      throw ConvergenceError("Jackson sum did not converge within " +
                             std::to_string(policy.max_terms) + " terms");
    }
    const Complex term = f(x) * (x - x * q.q);
    sum += term;
    x *= q.q;
    if (!N) {
      const double scale = std::abs(sum);
      small = (std::abs(term) <= policy.abs_tol * scale || std::abs(x) == 0.0) ? small + 1 : 0;
      if (small >= 3) {
        return sum;
      }
    }
  }
}

Complex jackson_integral(const std::function<Complex(Complex)>& f, Complex alpha, Complex beta,
                         std::optional<int> N, QBase q, const TruncationPolicy& policy) {
  if (N && *N < 0) {
    return Complex(0.0);
  }
  Complex upper = beta == Complex(0.0) ? Complex(0.0) : jackson_sum(f, beta, N, q, policy);
  Complex lower = alpha == Complex(0.0) ? Complex(0.0) : jackson_sum(f, alpha, N, q, policy);
  return upper - lower;
}

}  // namespace bcq
