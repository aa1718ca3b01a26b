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

#ifndef BCQ_QGRASS_HPP
#define BCQ_QGRASS_HPP

#include <cstdint>
#include <map>
#include <vector>

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>

#include "bcq/report.hpp"
#include "bcq/scalar.hpp"
#include "bcq/weights.hpp"

namespace bcq {

template <class S>
using SquareMatrix = Eigen::Matrix<S, Eigen::Dynamic, Eigen::Dynamic>;

/// q^e. Exact scalars require an integral exponent; floating scalars accept
/// any real e. Throws DomainError for q <= 0.
template <class S>
S q_power(const S& q, double exponent);

// ---- Matrices on V and V (x) V, with V = C^n and basis index i*n + j.

template <class S>
SquareMatrix<S> kron(const SquareMatrix<S>& a, const SquareMatrix<S>& b);

/// The flip P(v_i (x) v_j) = v_j (x) v_i on V (x) V.
template <class S>
SquareMatrix<S> flip(int n);

/// Transpose in the first tensor factor of an n^2 x n^2 matrix.
template <class S>
SquareMatrix<S> partial_transpose_first(const SquareMatrix<S>& m, int n);

/// R = sum q^{delta_ij} e_ii (x) e_jj + (q - q^{-1}) sum_{i>j} e_ij (x) e_ji.
template <class S>
SquareMatrix<S> r_matrix(int n, const S& q);
/// R^{-1}, written out explicitly.
template <class S>
SquareMatrix<S> r_minus(int n, const S& q);
/// R^+ = R_21 = P R P.
template <class S>
SquareMatrix<S> r_plus(int n, const S& q);

template <class S>
SquareMatrix<S> j_sigma(const GrassmannShape& shape, double sigma, const S& q);
template <class S>
SquareMatrix<S> j_infty(const GrassmannShape& shape);
template <class S>
SquareMatrix<S> j_tilde_sigma(const GrassmannShape& shape, double sigma, const S& q);

/// R_12 X_1 R_12^{-1} X_2 = X_2 R_21^{-1} X_1 R_21 for an n x n matrix X.
template <class S>
VerificationReport reflection_check(const SquareMatrix<S>& x, int n, const S& q);

/// J_1 (R_21^-)^{t_1} Jt_2 ((R_21^-)^{t_1})^{-1} = R^{t_1} Jt_2 (R^{t_1})^{-1} J_1.
template <class S>
VerificationReport refalt_check(const SquareMatrix<S>& jt, const SquareMatrix<S>& js, int n,
                                const S& q);

/// R_12 R_13 R_23 = R_23 R_13 R_12 on V^{(x)3}.
template <class S>
VerificationReport qybe_check(int n, const S& q);

/// gamma_1 gamma_2 gamma_1 = gamma_2 gamma_1 gamma_2 with gamma = P R.
template <class S>
VerificationReport braid_check(int n, const S& q);

// ---- q-exterior algebra.

/// Strictly increasing subset of [1, n].
using Subset = std::vector<int>;

/// sgn(I;J): 0 when I and J meet, otherwise (-q)^{#{(i,j) in I x J : i > j}}.
template <class S>
S qsgn(const Subset& i, const Subset& j, const S& q);

template <class S>
struct WedgeTerm {
  S coeff;
  Subset set;
};

/// v_I ^ v_J = sgn(I;J) v_{I u J}.
template <class S>
WedgeTerm<S> wedge(const Subset& i, const Subset& j, const S& q);
/// v*_I ^ v*_J = sgn(J;I) v*_{I u J}, with v*_I = v*_{i_r} ^ ... ^ v*_{i_1}.
template <class S>
WedgeTerm<S> wedge_dual(const Subset& i, const Subset& j, const S& q);

/// Normal form of v_{w_1} ^ ... ^ v_{w_r} from the pairwise relations
/// v_i ^ v_i = 0 and v_i ^ v_j = -q^{-1} v_j ^ v_i (i < j).
template <class S>
WedgeTerm<S> wedge_word(const std::vector<int>& word, const S& q);
/// Normal form of v*_{w_1} ^ ... ^ v*_{w_r} from v*_j ^ v*_i = -q^{-1} v*_i ^ v*_j (i < j).
template <class S>
WedgeTerm<S> wedge_dual_word(const std::vector<int>& word, const S& q);

/// Which tensor space a QExtVector lives in, with its key layout (1-based):
///   Pairs     (V (x) V*)^{(x)r}        key (i_1, j_1, ..., i_r, j_r)
///   DualPair  V* (x) V                 key (i, j) for v*_i (x) v_j
///   Split     V^{(x)r} (x) (V*)^{(x)r}  key (i_1..i_r, j_1..j_r)
///   Exterior  L^r(V) (x) L^r(V*)       key (I, J), both increasing
enum class TensorSpace { Pairs, DualPair, Split, Exterior };

template <class S>
struct QExtVector {
  TensorSpace space;
  int n;
  int r;
  std::map<std::vector<int>, S> coeff;

  QExtVector(TensorSpace space_, int n_, int r_) : space(space_), n(n_), r(r_) {}

  /// Accumulates c at key, dropping entries that cancel exactly.
  void add(const std::vector<int>& key, const S& c);
  S at(const std::vector<int>& key) const;
  double max_abs() const;
  bool is_zero() const { return coeff.empty(); }

  QExtVector& operator+=(const QExtVector& o);
  QExtVector& operator*=(const S& c);
  friend QExtVector operator+(QExtVector a, const QExtVector& b) { return a += b; }
  friend QExtVector operator*(QExtVector a, const S& c) { return a *= c; }
  friend QExtVector operator-(QExtVector a, const QExtVector& b) {
    QExtVector nb = b;
    nb *= S(-1);
    return a += nb;
  }
};

/// sum_{ij} M_ij v_i (x) v*_j.
template <class S>
QExtVector<S> pair_vector(const SquareMatrix<S>& m);

/// t^{(x) r} in (V (x) V*)^{(x) r} for t in V (x) V*.
template <class S>
QExtVector<S> tensor_power(const QExtVector<S>& t, int r);

/// beta(v*_i (x) v_j) = q^{-delta_ij} v_j (x) v*_i + (q^{-1} - q) delta_ij sum_{k<j} v_k (x) v*_k.
template <class S>
QExtVector<S> beta_map(const QExtVector<S>& t, const S& q);

/// Psi_r: the composition of beta maps sorting (V (x) V*)^{(x)r} into V^{(x)r} (x) (V*)^{(x)r}.
template <class S>
QExtVector<S> psi_r(const QExtVector<S>& t, const S& q);
/// (pr_r (x) pr*_r) o Psi_r.
template <class S>
QExtVector<S> psi_hat_r(const QExtVector<S>& t, const S& q);

template <class S>
struct PhiTerm {
  S coeff;
  int m;
  Subset set;
};

/// Phi^_r(v*_I (x) v_j) as a list of terms coeff * v_m (x) v*_set.
template <class S>
std::vector<PhiTerm<S>> phi_hat(const Subset& i, int j, const S& q);

/// Theta^_r(u (x) w) = (mu (x) mu*)(id (x) Phi^_r (x) id)(u (x) w) for u in
/// L^{r-1}(V) (x) L^{r-1}(V*) and w in V (x) V*.
template <class S>
QExtVector<S> theta_hat_r(const QExtVector<S>& u, const QExtVector<S>& w, const S& q);

/// [v]: the weight components of v at the weights (nu, 0, ..., 0, -rev nu)
/// with nu in the signed-permutation orbit of (1^r). The weight of
/// v_I (x) v*_J is e_I - e_J. Vectors in V (x) V* are read as degree one.
template <class S>
QExtVector<S> principal_term(const QExtVector<S>& v, const GrassmannShape& shape);

/// u_r = sum v_I (x) v*_{I'} over I in [1,l] u [l',n], |I| = r, I and I' disjoint.
template <class S>
QExtVector<S> u_vector(const GrassmannShape& shape, int r);
/// As u_r with coefficients q^{<2 rho, e_{I'}>}, rho = sum (n-k) e_k.
template <class S>
QExtVector<S> u_tilde_vector(const GrassmannShape& shape, int r, const S& q);

template <class S>
struct FixedVectors {
  QExtVector<S> w_sigma;
  QExtVector<S> w_tilde;
  QExtVector<S> w_infty;
};

template <class S>
FixedVectors<S> w_vectors(const GrassmannShape& shape, double sigma, const S& q);

/// c_r(sigma) = (q^sigma/(q^2-1))^r (q^2;q^2)_r.
template <class S>
S intertwiner_constant(int r, double sigma, const S& q);
/// c~_r(sigma) = (q^{sigma-1} q^{2(1-l)}/(q^2-1))^r (q^2;q^2)_r.
template <class S>
S intertwiner_constant_tilde(const GrassmannShape& shape, int r, double sigma, const S& q);
/// -q^sigma (1-q^{2r})/(1-q^2).
template <class S>
S theta_constant(int r, double sigma, const S& q);
/// -q^{sigma-1} q^{2(1-l)} (1-q^{2r})/(1-q^2).
template <class S>
S theta_constant_tilde(const GrassmannShape& shape, int r, double sigma, const S& q);

/// [Psi^_r((w^sigma)^{(x)r})] = c_r u_r and the w~ analogue.
template <class S>
VerificationReport intertwiner_check(const GrassmannShape& shape, int r, double sigma, const S& q);
/// [Theta^_r(u_{r-1} (x) w^sigma)] = theta_constant u_r and the w~ analogue.
template <class S>
VerificationReport theta_check(const GrassmannShape& shape, int r, double sigma, const S& q);
/// Psi^_r = Theta^_r o (Psi^_{r-1} (x) id) on a random sparse input.
template <class S>
VerificationReport factorization_check(int n, int r, const S& q, std::uint32_t seed,
                                       int terms = 60);

/// chi_lambda(C) = sum_k q^{2(lambda_k + n - k)} for an A(n) weight.
template <class S>
S casimir_eigenvalue(const WeightVector& lambda, const S& q);

#define BCQ_QGRASS_EXTERN(S)                                                                  \
  extern template S q_power<S>(const S&, double);                                            \
  extern template SquareMatrix<S> kron<S>(const SquareMatrix<S>&, const SquareMatrix<S>&);   \
  extern template SquareMatrix<S> flip<S>(int);                                              \
  extern template SquareMatrix<S> partial_transpose_first<S>(const SquareMatrix<S>&, int);   \
  extern template SquareMatrix<S> r_matrix<S>(int, const S&);                                \
  extern template SquareMatrix<S> r_minus<S>(int, const S&);                                 \
  extern template SquareMatrix<S> r_plus<S>(int, const S&);                                  \
  extern template SquareMatrix<S> j_sigma<S>(const GrassmannShape&, double, const S&);       \
  extern template SquareMatrix<S> j_infty<S>(const GrassmannShape&);                         \
  extern template SquareMatrix<S> j_tilde_sigma<S>(const GrassmannShape&, double, const S&); \
  extern template VerificationReport reflection_check<S>(const SquareMatrix<S>&, int,        \
                                                         const S&);                          \
  extern template VerificationReport refalt_check<S>(const SquareMatrix<S>&,                 \
                                                     const SquareMatrix<S>&, int, const S&); \
  extern template VerificationReport qybe_check<S>(int, const S&);                           \
  extern template VerificationReport braid_check<S>(int, const S&);                          \
  extern template S qsgn<S>(const Subset&, const Subset&, const S&);                         \
  extern template WedgeTerm<S> wedge<S>(const Subset&, const Subset&, const S&);             \
  extern template WedgeTerm<S> wedge_dual<S>(const Subset&, const Subset&, const S&);        \
  extern template WedgeTerm<S> wedge_word<S>(const std::vector<int>&, const S&);             \
  extern template WedgeTerm<S> wedge_dual_word<S>(const std::vector<int>&, const S&);        \
  extern template struct QExtVector<S>;                                                      \
  extern template QExtVector<S> pair_vector<S>(const SquareMatrix<S>&);                      \
  extern template QExtVector<S> tensor_power<S>(const QExtVector<S>&, int);                  \
  extern template QExtVector<S> beta_map<S>(const QExtVector<S>&, const S&);                 \
  extern template QExtVector<S> psi_r<S>(const QExtVector<S>&, const S&);                    \
  extern template QExtVector<S> psi_hat_r<S>(const QExtVector<S>&, const S&);                \
  extern template std::vector<PhiTerm<S>> phi_hat<S>(const Subset&, int, const S&);          \
  extern template QExtVector<S> theta_hat_r<S>(const QExtVector<S>&, const QExtVector<S>&,   \
                                               const S&);                                    \
  extern template QExtVector<S> principal_term<S>(const QExtVector<S>&,                      \
                                                  const GrassmannShape&);                    \
  extern template QExtVector<S> u_vector<S>(const GrassmannShape&, int);                     \
  extern template QExtVector<S> u_tilde_vector<S>(const GrassmannShape&, int, const S&);     \
  extern template FixedVectors<S> w_vectors<S>(const GrassmannShape&, double, const S&);     \
  extern template S intertwiner_constant<S>(int, double, const S&);                          \
  extern template S intertwiner_constant_tilde<S>(const GrassmannShape&, int, double,        \
                                                  const S&);                                 \
  extern template S theta_constant<S>(int, double, const S&);                                \
  extern template S theta_constant_tilde<S>(const GrassmannShape&, int, double, const S&);   \
  extern template VerificationReport intertwiner_check<S>(const GrassmannShape&, int,        \
                                                          double, const S&);                 \
  extern template VerificationReport theta_check<S>(const GrassmannShape&, int, double,      \
                                                    const S&);                               \
  extern template VerificationReport factorization_check<S>(int, int, const S&,              \
                                                            std::uint32_t, int);             \
  extern template S casimir_eigenvalue<S>(const WeightVector&, const S&);

BCQ_QGRASS_EXTERN(Rational)
BCQ_QGRASS_EXTERN(double)

#undef BCQ_QGRASS_EXTERN

}  // namespace bcq

#endif  // BCQ_QGRASS_HPP
