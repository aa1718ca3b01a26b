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

#ifndef BCQ_KOORNWINDER_HPP
#define BCQ_KOORNWINDER_HPP

#include <vector>

#include "bcq/laurent.hpp"
#include "bcq/params.hpp"
#include "bcq/report.hpp"
#include "bcq/weights.hpp"

namespace bcq {

enum class OperatorMode { TriangularSolve, GramSchmidt };

/// The Koornwinder q-difference operator D_K in l variables.
///
/// Each coefficient phi^{+-}_j is a rational function; the operator keeps the
/// product Den of all distinct denominator binomials and the cofactors
/// A^{+-}_j = phi^{+-}_j * Den, so that D_K p = (sum A (T p - p)) / Den where
/// the division is by one binomial at a time and must be exact.
template <class S>
class KoornwinderOperator {
 public:
  KoornwinderOperator(int l, const KoornwinderParams<S>& params);

  int vars() const { return l_; }
  const KoornwinderParams<S>& params() const { return params_; }

  LaurentPoly<S> apply(const LaurentPoly<S>& p) const;

 private:
  struct Binomial {
    S c;
    Exponent a;  // 1 - c x^a, first nonzero entry of a positive
  };
  int l_;
  KoornwinderParams<S> params_;
  std::vector<Binomial> den_;
  std::vector<LaurentPoly<S>> cofactor_plus_;
  std::vector<LaurentPoly<S>> cofactor_minus_;
};

/// D_K p for a W-invariant p. Builds a fresh operator; reuse
/// KoornwinderOperator when applying repeatedly.
template <class S>
LaurentPoly<S> dk_apply(const LaurentPoly<S>& p, const KoornwinderParams<S>& params);

/// E_lambda for dominant BC weights lambda.
template <class S>
S eigenvalue(const WeightVector& lambda, const KoornwinderParams<S>& params);

/// Monic Koornwinder polynomial P_lambda. Triangular mode throws
/// EigenvalueCollision when some dominant mu < lambda has the same diagonal
/// operator entry as E_lambda; GramSchmidt orthogonalizes numerically and is
/// only available for floating scalars.
template <class S>
LaurentPoly<S> koornwinder_poly(const WeightVector& lambda, const KoornwinderParams<S>& params,
                                OperatorMode mode = OperatorMode::TriangularSolve);

/// Exact residual check (D_K - E_lambda) P_lambda = 0.
template <class S>
VerificationReport check_eigen_identity(const WeightVector& lambda,
                                        const KoornwinderParams<S>& params);

/// Invariance of P_lambda under permutations of (t0..t3), checked on the
/// generating transpositions, and P_lambda(x;-t) = (-1)^{|lambda|} P_lambda(-x;t).
template <class S>
VerificationReport check_symmetries(const WeightVector& lambda,
                                    const KoornwinderParams<S>& params);

nlohmann::json params_json(const KoornwinderParams<Rational>& params);
nlohmann::json params_json(const KoornwinderParams<double>& params);
nlohmann::json params_json(const KoornwinderParams<long double>& params);
nlohmann::json params_json(const KoornwinderParams<Complex>& params);

#define BCQ_KOORNWINDER_EXTERN(S)                                                            \
  extern template class KoornwinderOperator<S>;                                              \
  extern template LaurentPoly<S> dk_apply<S>(const LaurentPoly<S>&,                          \
                                             const KoornwinderParams<S>&);                   \
  extern template S eigenvalue<S>(const WeightVector&, const KoornwinderParams<S>&);         \
  extern template LaurentPoly<S> koornwinder_poly<S>(const WeightVector&,                    \
                                                     const KoornwinderParams<S>&, OperatorMode); \
  extern template VerificationReport check_eigen_identity<S>(const WeightVector&,            \
                                                             const KoornwinderParams<S>&);   \
  extern template VerificationReport check_symmetries<S>(const WeightVector&,                \
                                                         const KoornwinderParams<S>&);
BCQ_KOORNWINDER_EXTERN(Rational)
BCQ_KOORNWINDER_EXTERN(double)
BCQ_KOORNWINDER_EXTERN(long double)
BCQ_KOORNWINDER_EXTERN(Complex)
#undef BCQ_KOORNWINDER_EXTERN

}  // namespace bcq

#endif  // BCQ_KOORNWINDER_HPP
