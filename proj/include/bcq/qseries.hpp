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

#ifndef BCQ_QSERIES_HPP
#define BCQ_QSERIES_HPP

#include <functional>
#include <optional>
#include <span>

#include "bcq/scalar.hpp"

namespace bcq {

/// Base of the q-analysis, restricted to 0 < q < 1.
struct QBase {
  double q;
  QBase(double value);  // NOLINT(google-explicit-constructor)
};

/// Stopping rule for infinite products and series.
struct TruncationPolicy {
  double abs_tol = 1e-16;
  int max_terms = 10000;

  void validate() const;
};

/// (a;q)_i for finite i.
Complex qpochhammer(Complex a, QBase q, int i);

/// (a;q)_infinity, truncated once |q^j a| < policy.abs_tol.
Complex qpochhammer_inf(Complex a, QBase q, const TruncationPolicy& policy = {});

/// (a_1,...,a_m;q)_i: product of the individual factorials.
Complex qpochhammer_multi(std::span<const Complex> a, QBase q, int i);
Complex qpochhammer_multi_inf(std::span<const Complex> a, QBase q,
                              const TruncationPolicy& policy = {});

/// (a;q)_i in an arbitrary field; exact for rational a and q.
template <class S>
S qpochhammer_exact(const S& a, const S& q, int i) {
  S result(1);
  S qj(1);
  for (int j = 0; j < i; ++j) {
    result *= S(1) - qj * a;
    qj *= q;
  }
  return result;
}

/// q-Gamma function (1-q)^{1-a} (q;q)_inf / (q^a;q)_inf, evaluated in log space.
double qgamma(double a, QBase q, const TruncationPolicy& policy = {});

/// log|Gamma_q(a)|; the sign of Gamma_q(a) is written to *sign when given.
double log_abs_qgamma(double a, QBase q, const TruncationPolicy& policy = {},
                      int* sign = nullptr);

/// One-endpoint Jackson sum  sum_{k=0}^{N} f(b q^k) (b q^k - b q^{k+1}); an
/// empty optional N means N = infinity.
Complex jackson_sum(const std::function<Complex(Complex)>& f, Complex b, std::optional<int> N,
                    QBase q, const TruncationPolicy& policy = {});

/// Jackson integral from alpha to beta, as the difference of two one-endpoint
/// sums. Returns 0 for N < 0.
Complex jackson_integral(const std::function<Complex(Complex)>& f, Complex alpha, Complex beta,
                         std::optional<int> N, QBase q, const TruncationPolicy& policy = {});

}  // namespace bcq

#endif  // BCQ_QSERIES_HPP
