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

#ifndef BCQ_AWMEASURE_HPP
#define BCQ_AWMEASURE_HPP

#include <array>
#include <functional>

#include "bcq/laurent.hpp"
#include "bcq/params.hpp"
#include "bcq/qseries.hpp"
#include "bcq/report.hpp"
#include "bcq/weights.hpp"

namespace bcq {

/// Uniform trapezoid grid on each circle, doubled until two successive values
/// agree to rel_tol.
struct QuadratureGrid {
  int points = 16;
  int max_points = 1 << 14;
  double rel_tol = 1e-10;

  void validate() const;
};

/// N_e for each of t0..t3: the largest N with |e q^N| > 1, or -1 when |e| <= 1.
struct DiscreteSupport {
  std::array<int, 4> n{-1, -1, -1, -1};
  static constexpr int kMaxIndex = 64;

  static DiscreteSupport of(const KoornwinderParams<Complex>& params);
  bool empty() const;
};

/// Largest N with |e q^N| > 1, -1 when |e| <= 1. Throws DomainError above
/// DiscreteSupport::kMaxIndex.
int discrete_truncation(Complex e, double q);

/// Continuous Askey-Wilson weight w_2(x; t0..t3; q).
Complex aw_weight(Complex x, const std::array<Complex, 4>& t, double q,
                  const TruncationPolicy& policy = {});

/// prod over i<j and signs of (x_i^{+-1} x_j^{+-1}; q)_k.
Complex aw_cross_factor(std::span<const Complex> x, double q, int k);

/// (1/(2 pi i)) times the contour integral of f around a circle.
Complex contour_residue(const std::function<Complex(Complex)>& f, Complex center, double radius,
                        int points = 64);

/// w_1(e q^i; e; f, g, h): residue of w_2(x)/x at x = e q^i, where (e, f, g, h)
/// are the four parameters. Throws DomainError when another pole of w_2
/// lies within 1e-12 of e q^i.
Complex residue_weight(Complex e, int i, Complex f, Complex g, Complex h, double q);

/// The m = 0 term: torus average of P conj(Q) Delta_0.
Complex continuous_inner(const LaurentPoly<Complex>& p, const LaurentPoly<Complex>& q,
                         const KoornwinderParams<Complex>& params, const QuadratureGrid& grid = {});

/// Single trapezoid level with the given number of points per circle.
Complex continuous_inner_at(const LaurentPoly<Complex>& p, const LaurentPoly<Complex>& q,
                            const KoornwinderParams<Complex>& params, int points);

/// The full inner product, continuous part plus all residue-discrete parts.
Complex full_inner(const LaurentPoly<Complex>& p, const LaurentPoly<Complex>& q,
                   const KoornwinderParams<Complex>& params, const QuadratureGrid& grid = {});

/// Closed-form total mass <1,1>_K.
Complex gustafson_constant(int l, const KoornwinderParams<Complex>& params,
                           const TruncationPolicy& policy = {});

/// <P_lambda, P_lambda>_K / <1, 1>_K with P_lambda from the triangular solve.
double norm_K(const WeightVector& lambda, const KoornwinderParams<Complex>& params,
              const QuadratureGrid& grid = {});

/// P_lambda by Gram-Schmidt over the dominant downset of lambda.
LaurentPoly<Complex> koornwinder_poly_gram(const WeightVector& lambda,
                                           const KoornwinderParams<Complex>& params,
                                           const QuadratureGrid& grid = {});

/// Quadrature <1,1>_K against the closed form, relative error <= tol.
VerificationReport gustafson_check(int l, const KoornwinderParams<Complex>& params,
                                   const QuadratureGrid& grid = {}, double tol = 1e-8);

/// |<P_lambda, P_mu>| / (|P_lambda| |P_mu|) <= tol for all dominant lambda != mu
/// with |lambda|, |mu| <= max_degree.
VerificationReport orthogonality_check_K(int l, int max_degree,
                                         const KoornwinderParams<Complex>& params,
                                         const QuadratureGrid& grid = {}, double tol = 1e-8);

}  // namespace bcq

#endif  // BCQ_AWMEASURE_HPP
