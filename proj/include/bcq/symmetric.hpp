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

#ifndef BCQ_SYMMETRIC_HPP
#define BCQ_SYMMETRIC_HPP

#include <map>

#include "bcq/laurent.hpp"
#include "bcq/weights.hpp"

namespace bcq {

/// Symmetry group acting on the variables: W permutes and inverts them, S only
/// permutes them.
enum class Symmetry { W, S };

/// m~_lambda: sum of x^mu over the signed-permutation orbit of lambda.
template <class S>
LaurentPoly<S> orbit_sum_W(const WeightVector& lambda);

/// m_lambda: sum of x^mu over the permutation orbit of a nonnegative lambda.
template <class S>
LaurentPoly<S> monomial_symmetric(const WeightVector& lambda);

/// e_r in l variables.
template <class S>
LaurentPoly<S> elementary_symmetric(int r, int l);

/// Schur polynomial s_lambda(z_1..z_n) of a dominant A(n) weight, computed as
/// the ratio of alternants by exact division. Negative entries are handled by
/// the determinant twist s_lambda = (z_1...z_n)^{-m} s_{lambda + m}.
template <class S>
LaurentPoly<S> schur(const WeightVector& lambda);

/// Schur polynomial as a sum over semistandard tableaux; division free.
template <class S>
LaurentPoly<S> schur_tableaux(const WeightVector& lambda);

/// Invariance under the generators of the group (adjacent swaps, and the
/// inversion of x_1 for W). Floating scalars compare to tol * max|p|.
template <class S>
bool is_invariant(const LaurentPoly<S>& p, Symmetry g, double tol = 1e-9);

/// Coefficients in the basis m~_mu (W) or m_mu (S), keyed by dominant BC weights.
template <class S>
std::map<WeightVector, S> expand_in_basis(const LaurentPoly<S>& p, Symmetry g);

template <class S>
LaurentPoly<S> from_basis(const std::map<WeightVector, S>& coeffs, Symmetry g, int l);

/// The i-th generator: m~_{(1^i)} for W, e_i for S (1 <= i <= l).
template <class S>
LaurentPoly<S> generator(int i, int l, Symmetry g);

/// The polynomial P^ in y_1..y_l with P^(m_1(x),...,m_l(x)) = p(x), where m_i
/// are the generators above. Returned as a LaurentPoly with nonnegative
/// exponents, exponent i being the degree in y_{i+1}.
template <class S>
LaurentPoly<S> to_generator_coords(const LaurentPoly<S>& p, Symmetry g);

template <class S>
LaurentPoly<S> from_generator_coords(const LaurentPoly<S>& y, Symmetry g);

/// Coefficients of p in the Schur basis s_lambda(z_1..z_n), for p symmetric.
template <class S>
std::map<WeightVector, S> expand_in_schur(const LaurentPoly<S>& p);

/// Dimension of the irreducible GL(n) representation of highest weight lambda.
long weyl_dimension(const WeightVector& lambda);

#define BCQ_SYMMETRIC_EXTERN(S)                                                            \
  extern template LaurentPoly<S> orbit_sum_W<S>(const WeightVector&);                      \
  extern template LaurentPoly<S> monomial_symmetric<S>(const WeightVector&);               \
  extern template LaurentPoly<S> elementary_symmetric<S>(int, int);                        \
  extern template LaurentPoly<S> schur<S>(const WeightVector&);                            \
  extern template LaurentPoly<S> schur_tableaux<S>(const WeightVector&);                   \
  extern template bool is_invariant<S>(const LaurentPoly<S>&, Symmetry, double);           \
  extern template std::map<WeightVector, S> expand_in_basis<S>(const LaurentPoly<S>&,      \
                                                               Symmetry);                  \
  extern template LaurentPoly<S> from_basis<S>(const std::map<WeightVector, S>&, Symmetry, \
                                               int);                                       \
  extern template LaurentPoly<S> generator<S>(int, int, Symmetry);                         \
  extern template LaurentPoly<S> to_generator_coords<S>(const LaurentPoly<S>&, Symmetry);  \
  extern template LaurentPoly<S> from_generator_coords<S>(const LaurentPoly<S>&, Symmetry); \
  extern template std::map<WeightVector, S> expand_in_schur<S>(const LaurentPoly<S>&);
BCQ_SYMMETRIC_EXTERN(Rational)
BCQ_SYMMETRIC_EXTERN(double)
BCQ_SYMMETRIC_EXTERN(long double)
BCQ_SYMMETRIC_EXTERN(Complex)
#undef BCQ_SYMMETRIC_EXTERN

}  // namespace bcq

#endif  // BCQ_SYMMETRIC_HPP
