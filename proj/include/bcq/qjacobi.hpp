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

#ifndef BCQ_QJACOBI_HPP
#define BCQ_QJACOBI_HPP

#include <span>

#include "bcq/laurent.hpp"
#include "bcq/params.hpp"
#include "bcq/report.hpp"
#include "bcq/weights.hpp"

namespace bcq {

/// Per-variable truncation of the Jackson sums. The number of lattice points
/// per endpoint is the smallest N whose geometric tail bound is below
/// tail_tol; exceeding n_max is a ConvergenceError.
struct SumTruncation {
  int n_max = 200;
  double tail_tol = 1e-14;

  void validate() const;
};

/// Delta_B(x) with truncated infinite products.
double big_weight(std::span<const double> x, const BigJacobiParams<double>& params);
/// Delta_L(x) for x on the lattice q^m; x^alpha is evaluated as a^m through
/// the lattice index, so every coordinate must be an exact power of q.
double little_weight(std::span<const int> lattice_index, const LittleJacobiParams<double>& params);

/// <P, Q>_B over [-d, c]^l. P, Q are symmetric polynomials in l variables.
double big_inner(const LaurentPoly<double>& p, const LaurentPoly<double>& q,
                 const BigJacobiParams<double>& params, const SumTruncation& trunc = {});
/// <P, Q>_L over [0, 1]^l.
double little_inner(const LaurentPoly<double>& p, const LaurentPoly<double>& q,
                    const LittleJacobiParams<double>& params, const SumTruncation& trunc = {});

/// Monic P^B_lambda by Gram-Schmidt over the dominance downset of lambda.
LaurentPoly<double> big_jacobi_poly(const WeightVector& lambda,
                                    const BigJacobiParams<double>& params,
                                    const SumTruncation& trunc = {});
LaurentPoly<double> little_jacobi_poly(const WeightVector& lambda,
                                       const LittleJacobiParams<double>& params,
                                       const SumTruncation& trunc = {});

/// Closed-form <1,1>_B and <1,1>_L for l variables (a = q^alpha, b = q^beta
/// with a, b > 0).
double closed_form_big_constant(int l, const BigJacobiParams<double>& params);
double closed_form_little_constant(int l, const LittleJacobiParams<double>& params);

/// <P_lambda, P_lambda> / <1, 1>.
double norm_big(const WeightVector& lambda, const BigJacobiParams<double>& params,
                const SumTruncation& trunc = {});
double norm_little(const WeightVector& lambda, const LittleJacobiParams<double>& params,
                   const SumTruncation& trunc = {});

/// Jackson-sum <1,1> against the closed form, relative error <= tol.
VerificationReport selberg_check_big(int l, const BigJacobiParams<double>& params,
                                     const SumTruncation& trunc = {}, double tol = 1e-10);
VerificationReport selberg_check_little(int l, const LittleJacobiParams<double>& params,
                                        const SumTruncation& trunc = {}, double tol = 1e-10);

/// Pairwise orthogonality of the Gram-Schmidt polynomials with |lambda| <= max_degree.
VerificationReport orthogonality_check_big(int l, int max_degree,
                                           const BigJacobiParams<double>& params,
                                           const SumTruncation& trunc = {}, double tol = 1e-9);
VerificationReport orthogonality_check_little(int l, int max_degree,
                                              const LittleJacobiParams<double>& params,
                                              const SumTruncation& trunc = {}, double tol = 1e-9);

}  // namespace bcq

#endif  // BCQ_QJACOBI_HPP
