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

#ifndef BCQ_LIMITS_HPP
#define BCQ_LIMITS_HPP

#include <optional>
#include <string>
#include <vector>

#include "bcq/params.hpp"
#include "bcq/report.hpp"
#include "bcq/weights.hpp"

namespace bcq {

/// Strictly decreasing positive epsilon values, kept as exact rationals so
/// that rational-mode polynomial limits can run without rounding.
struct EpsilonSweep {
  std::vector<Rational> values;

  /// 1e-1, 3e-2, 1e-2, 3e-3, 1e-3, 3e-4, 1e-4.
  static EpsilonSweep standard();
  /// 1e-1, 3e-2, 1e-2: the range used for quadratic norms.
  static EpsilonSweep norms();
  static EpsilonSweep parse(const std::string& text);

  void validate() const;
};

/// Koornwinder parameters realizing the big q-Jacobi limit at epsilon.
template <class S>
KoornwinderParams<S> t_B(const S& eps, const BigJacobiParams<S>& big);
/// Koornwinder parameters realizing the little q-Jacobi limit at epsilon.
template <class S>
KoornwinderParams<S> t_L(const S& eps, const LittleJacobiParams<S>& little);

/// s_eps = q^{1/2} / (eps (cd)^{1/2}) and s_eps = q^{1/2} / eps.
template <class S>
S rescale_big(const S& eps, const BigJacobiParams<S>& big);
template <class S>
S rescale_little(const S& eps, const LittleJacobiParams<S>& little);

/// One epsilon of a sweep. Missing errors mean the step was not computed.
struct SweepRow {
  double epsilon = 0.0;
  std::optional<double> max_coeff_err;
  std::optional<double> norm_err;
  bool constructed_ok = false;
};

struct SweepResult {
  VerificationReport report;
  std::vector<SweepRow> rows;
};

/// CSV with header epsilon,max_coeff_err,norm_err,constructed_ok.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Polynomial limit in generator coordinates. The Koornwinder side is exact
/// (the parameters must make every square root rational); the reference is
/// the Gram-Schmidt q-Jacobi polynomial. Passes when the relative coefficient
/// error decreases strictly along the sweep and ends at or below tol.
SweepResult limit_check_big(const WeightVector& lambda, const BigJacobiParams<Rational>& big,
                            const EpsilonSweep& sweep = EpsilonSweep::standard(),
                            double tol = 1e-3);
SweepResult limit_check_little(const WeightVector& lambda,
                               const LittleJacobiParams<Rational>& little,
                               const EpsilonSweep& sweep = EpsilonSweep::standard(),
                               double tol = 1e-3);

/// Rescaled Koornwinder norms against N_B / N_L. Passes when the relative
/// error decreases strictly and ends at or below tol.
SweepResult norm_limit_check_big(const WeightVector& lambda, const BigJacobiParams<Rational>& big,
                                 const EpsilonSweep& sweep = EpsilonSweep::norms(),
                                 double tol = 1e-2);
SweepResult norm_limit_check_little(const WeightVector& lambda,
                                    const LittleJacobiParams<Rational>& little,
                                    const EpsilonSweep& sweep = EpsilonSweep::norms(),
                                    double tol = 1e-2);

/// Koornwinder parameters of the (sigma, tau) spherical functions on the
/// Grassmannian U(n)/(U(n-l) x U(l)); base q^2 and t = q^2.
KoornwinderParams<double> grassmann_koornwinder_params(int n, int l, double sigma, double tau,
                                                       double q);
/// Big q-Jacobi parameters (1, q^{2(n-2l)}, 1, q^{2 tau + 2(n-2l)}) with base q^2.
BigJacobiParams<double> grassmann_big_params(int n, int l, double tau, double q);
/// Little q-Jacobi parameters (q^{2(n-2l)}, 1) with base q^2.
LittleJacobiParams<double> grassmann_little_params(int n, int l, double q);

/// t_B at the Grassmannian big parameters with eps = q^{sigma-(n-2l)} equals
/// minus a permutation of the (sigma, tau) quadruple; when sigma = tau, the
/// same holds for t_L with eps = q^{2 sigma}.
VerificationReport grassmann_consistency_check(int n, int l, double sigma, double tau, double q);

/// The product t0 t1 t2 t3 equals q^{4+2(n-2l)} and lies in (0,1).
VerificationReport grassmann_product_check(int n, int l, double sigma, double tau, double q);

/// The classical Selberg integral.
double selberg_classical(double alpha, double beta, double tau, int l);

/// l! times the q-Gamma block of the little q-Selberg constant, compared with
/// the Selberg integral at tau = k along q_list increasing to 1. Passes when
/// the error decreases and the last relative error is below tol.
VerificationReport q_to_1_check(double alpha, double beta, int k, int l,
                                const std::vector<double>& q_list, double tol = 1e-2);

/// Gamma_q(a) against Gamma(a) at the given q.
VerificationReport qgamma_limit_check(const std::vector<double>& a_list, double q,
                                      double tol = 1e-2);

}  // namespace bcq

#endif  // BCQ_LIMITS_HPP
