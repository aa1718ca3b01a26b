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

#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include "bcq/errors.hpp"
#include "bcq/qgrass.hpp"

namespace bcq {
namespace {

using M = SquareMatrix<Rational>;

const Rational kHalf(1, 2);
const Rational kTwoThirds(2, 3);

M random_matrix(int n, std::uint32_t seed) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> d(-5, 5);
  M m(n, n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      m(i, j) = Rational(d(gen), 1 + (i + j) % 3);
    }
  }
  return m;
}

TEST(RMatrix, WrittenOutForTwo) {
  const Rational q = kHalf;
  const M r = r_matrix(2, q);
  EXPECT_EQ(r(0, 0), q);
  EXPECT_EQ(r(1, 1), Rational(1));
  EXPECT_EQ(r(2, 2), Rational(1));
  EXPECT_EQ(r(3, 3), q);
  int off = 0;
  for (int i = 0; i < 4; ++i) {
    for (int j = 0; j < 4; ++j) {
      if (i != j && r(i, j) != 0) {
        ++off;
        EXPECT_EQ(r(i, j), q - 1 / q);
      }
    }
  }
  EXPECT_EQ(off, 1);
  EXPECT_THROW(r_matrix(1, q), DomainError);
}

TEST(RMatrix, InverseAndFlip) {
  for (int n = 2; n <= 4; ++n) {
    for (const Rational& q : {kHalf, kTwoThirds}) {
      const M prod = r_matrix(n, q) * r_minus(n, q);
      EXPECT_TRUE((prod.array() == M::Identity(n * n, n * n).array()).all());
      const M p = flip<Rational>(n);
      EXPECT_TRUE(((p * p).array() == M::Identity(n * n, n * n).array()).all());
      EXPECT_TRUE((r_plus(n, q).array() == (p * r_matrix(n, q) * p).array()).all());
    }
  }
}

TEST(RMatrix, PartialTransposeOfProductMatrix) {
  const M a = random_matrix(3, 1);
  const M b = random_matrix(3, 2);
  const M t = partial_transpose_first<Rational>(kron<Rational>(a, b), 3);
  const M expected = kron<Rational>(a.transpose(), b);
  EXPECT_TRUE((t.array() == expected.array()).all());
}

TEST(RMatrix, YangBaxterAndBraid) {
  for (int n = 2; n <= 4; ++n) {
    for (const Rational& q : {kHalf, kTwoThirds}) {
      const VerificationReport y = qybe_check(n, q);
      EXPECT_TRUE(y.passed && y.exact) << n;
      EXPECT_TRUE(braid_check(n, q).passed) << n;
    }
  }
  EXPECT_TRUE(qybe_check(3, 0.37).passed);
}

TEST(JMatrices, Examples) {
  const GrassmannShape s21(2, 1);
  const M j0 = j_sigma(s21, 0, kHalf);
  M expected(2, 2);
  expected << Rational(0), Rational(-1), Rational(-1), Rational(0);
  EXPECT_TRUE((j0.array() == expected.array()).all());
  const GrassmannShape s52(5, 2);
  const M jinf = j_infty<Rational>(s52);
  EXPECT_EQ(jinf.trace(), Rational(3));
  for (double sigma : {-1.0, 0.0, 2.0}) {
    const M j = j_sigma(s52, sigma, kTwoThirds);
    EXPECT_TRUE((j.array() == j.transpose().array()).all());
  }
  EXPECT_THROW(j_sigma(s52, 0.5, kHalf), DomainError);
}

TEST(JMatrices, ApproachTheLimit) {
  const GrassmannShape shape(6, 2);
  const double q = 0.5;
  for (double sigma : {5.0, 12.5, 20.0}) {
    const double qs = std::pow(q, sigma);
    const SquareMatrix<double> d = j_sigma(shape, sigma, q) - j_infty<double>(shape);
    EXPECT_LE(d.cwiseAbs().maxCoeff(), qs * (1 + 1e-12));
    // The tilde matrix carries q^{sigma-1} q^{2(k-l)} with k - l >= 1 - l.
    const SquareMatrix<double> dt = j_tilde_sigma(shape, sigma, q) - j_infty<double>(shape);
    EXPECT_LE(dt.cwiseAbs().maxCoeff(), qs * std::pow(q, 2.0 * (1 - shape.l) - 1) * 1.000001);
  }
}

TEST(Reflection, SolutionsPassExactly) {
  for (int n = 2; n <= 5; ++n) {
    for (int l = 1; 2 * l <= n; ++l) {
      const GrassmannShape shape(n, l);
      for (double sigma : {-1.0, 0.0, 1.0, 2.0}) {
        for (const Rational& q : {kHalf, kTwoThirds}) {
          const VerificationReport r = reflection_check(j_sigma(shape, sigma, q), n, q);
          EXPECT_TRUE(r.passed && r.exact) << n << l << sigma;
          EXPECT_LT(r.runtime_ms, 1000);
        }
      }
      EXPECT_TRUE(reflection_check(j_infty<Rational>(shape), n, kHalf).passed);
    }
    EXPECT_TRUE(reflection_check<Rational>(M::Identity(n, n), n, kHalf).passed);
  }
}

TEST(Reflection, GenericMatrixFails) {
  for (std::uint32_t seed : {3u, 4u, 5u}) {
    const VerificationReport r = reflection_check(random_matrix(3, seed), 3, kHalf);
    EXPECT_FALSE(r.passed);
    ASSERT_TRUE(r.residual.has_value());
    EXPECT_GT(*r.residual, 0);
  }
}

TEST(Reflection, LinearEquation) {
  for (int n = 2; n <= 5; ++n) {
    for (int l = 1; 2 * l <= n; ++l) {
      const GrassmannShape shape(n, l);
      for (double sigma : {-1.0, 0.0, 1.0, 2.0}) {
        const Rational q = kHalf;
        EXPECT_TRUE(
            refalt_check(j_tilde_sigma(shape, sigma, q), j_sigma(shape, sigma, q), n, q).passed)
            << n << l << sigma;
      }
    }
    EXPECT_TRUE(refalt_check<Rational>(M::Identity(n, n), M::Identity(n, n), n, kHalf).passed);
  }
  const GrassmannShape shape(4, 2);
  EXPECT_FALSE(refalt_check(random_matrix(4, 9), j_sigma(shape, 0, kHalf), 4, kHalf).passed);
}

TEST(Exterior, QSignum) {
  const Rational q = kHalf;
  EXPECT_EQ(qsgn(Subset{1}, Subset{2}, q), Rational(1));
  EXPECT_EQ(qsgn(Subset{2}, Subset{1}, q), -q);
  EXPECT_EQ(qsgn(Subset{1, 2}, Subset{2, 3}, q), Rational(0));
  EXPECT_EQ(qsgn(Subset{2, 4}, Subset{1, 3}, q), -q * -q * -q);
}

TEST(Exterior, WedgeExamples) {
  const Rational q = kHalf;
  EXPECT_EQ(wedge(Subset{1}, Subset{1}, q).coeff, Rational(0));
  const WedgeTerm<Rational> a = wedge(Subset{2}, Subset{1}, q);
  EXPECT_EQ(a.coeff, -q);
  EXPECT_EQ(a.set, (Subset{1, 2}));
  EXPECT_EQ(wedge(Subset{1}, Subset{2}, q).coeff, Rational(1));
  // v_1 ^ v_2 = -q^{-1} v_2 ^ v_1.
  EXPECT_EQ(wedge_word<Rational>({1, 2}, q).coeff,
            -1 / q * wedge_word<Rational>({2, 1}, q).coeff);
  // v*_2 ^ v*_1 = -q^{-1} v*_1 ^ v*_2, and v*_{12} = v*_2 ^ v*_1.
  EXPECT_EQ(wedge_dual_word<Rational>({2, 1}, q).coeff, Rational(1));
  EXPECT_EQ(wedge_dual_word<Rational>({1, 2}, q).coeff, -q);
}

TEST(Exterior, SubsetAndPairwiseConventionsAgree) {
  const Rational q = kTwoThirds;
  const int n = 5;
  std::vector<Subset> subsets;
  for (int mask = 1; mask < (1 << n); ++mask) {
    Subset s;
    for (int i = 0; i < n; ++i) {
      if (mask & (1 << i)) {
        s.push_back(i + 1);
      }
    }
    subsets.push_back(s);
  }
  for (const Subset& i : subsets) {
    const WedgeTerm<Rational> vi = wedge_word(i, q);
    ASSERT_EQ(vi.coeff, Rational(1));
    for (const Subset& j : subsets) {
      std::vector<int> word = i;
      word.insert(word.end(), j.begin(), j.end());
      const WedgeTerm<Rational> pairwise = wedge_word(word, q);
      const WedgeTerm<Rational> subset = wedge(i, j, q);
      EXPECT_EQ(pairwise.coeff, subset.coeff);
      if (subset.coeff != 0) {
        EXPECT_EQ(pairwise.set, subset.set);
      }
      // v*_I is v*_{i_r} ^ ... ^ v*_{i_1}, so its word is reversed.
      std::vector<int> dual_word(i.rbegin(), i.rend());
      dual_word.insert(dual_word.end(), j.rbegin(), j.rend());
      EXPECT_EQ(wedge_dual_word(dual_word, q).coeff, wedge_dual(i, j, q).coeff);
    }
  }
}

QExtVector<Rational> dual_pair(int n, int i, int j) {
  QExtVector<Rational> t(TensorSpace::DualPair, n, 1);
  t.add({i, j}, Rational(1));
  return t;
}

TEST(Exterior, BetaExamples) {
  const Rational q = kHalf;
  const QExtVector<Rational> a = beta_map(dual_pair(3, 1, 2), q);
  EXPECT_EQ(a.coeff.size(), 1u);
  EXPECT_EQ(a.at({2, 1}), Rational(1));
  const QExtVector<Rational> b = beta_map(dual_pair(3, 1, 1), q);
  EXPECT_EQ(b.coeff.size(), 1u);
  EXPECT_EQ(b.at({1, 1}), 1 / q);
  const QExtVector<Rational> c = beta_map(dual_pair(3, 2, 2), q);
  EXPECT_EQ(c.coeff.size(), 2u);
  EXPECT_EQ(c.at({2, 2}), 1 / q);
  EXPECT_EQ(c.at({1, 1}), 1 / q - q);
}

TEST(Exterior, BetaIsPhiHatInDegreeTwo) {
  const Rational q = kTwoThirds;
  for (int i = 1; i <= 4; ++i) {
    for (int j = 1; j <= 4; ++j) {
      const QExtVector<Rational> b = beta_map(dual_pair(4, i, j), q);
      QExtVector<Rational> phi(TensorSpace::Pairs, 4, 1);
      for (const PhiTerm<Rational>& t : phi_hat(Subset{i}, j, q)) {
        phi.add({t.m, t.set[0]}, t.coeff);
      }
      EXPECT_TRUE((b - phi).is_zero()) << i << j;
    }
  }
}

TEST(Exterior, PsiInDegreeOneIsTheIdentity) {
  const GrassmannShape shape(4, 2);
  const QExtVector<Rational> w = w_vectors(shape, 1, kHalf).w_sigma;
  const QExtVector<Rational> image = psi_hat_r(w, kHalf);
  EXPECT_EQ(image.coeff, w.coeff);
}

TEST(FixedVectors, Shapes) {
  const Rational q = kHalf;
  const GrassmannShape shape(6, 2);
  const FixedVectors<Rational> fv = w_vectors(shape, 1, q);
  EXPECT_EQ(fv.w_infty.coeff.size(), 4u);
  for (const auto& [k, c] : fv.w_infty.coeff) {
    EXPECT_EQ(c, Rational(1));
    EXPECT_EQ(k[0], k[1]);
  }
  const M j = j_sigma(shape, 1, q);
  for (const auto& [k, c] : fv.w_sigma.coeff) {
    EXPECT_EQ(c, j(k[0] - 1, k[1] - 1));
  }
  const GrassmannShape small(4, 1);
  for (double sigma : {10.0, 30.0}) {
    const FixedVectors<double> f = w_vectors(small, sigma, 0.5);
    EXPECT_LE((f.w_tilde - f.w_infty).max_abs(), 4.0 * std::pow(0.5, sigma));
  }
}

TEST(PrincipalTerm, Basics) {
  const Rational q = kHalf;
  const GrassmannShape shape(5, 2);
  for (int r = 1; r <= 2; ++r) {
    const QExtVector<Rational> u = u_vector<Rational>(shape, r);
    EXPECT_EQ(principal_term(u, shape).coeff, u.coeff);
    QExtVector<Rational> diag(TensorSpace::Exterior, 5, r);
    Subset first;
    for (int i = 1; i <= r; ++i) {
      first.push_back(i);
    }
    std::vector<int> key = first;
    key.insert(key.end(), first.begin(), first.end());
    diag.add(key, Rational(1));
    EXPECT_TRUE(principal_term(diag, shape).is_zero());
  }
  const FixedVectors<Rational> fv = w_vectors(shape, 2, q);
  EXPECT_EQ(principal_term(fv.w_sigma, shape).coeff,
            (u_vector<Rational>(shape, 1) * Rational(-q * q)).coeff);
  EXPECT_TRUE((principal_term(fv.w_tilde, shape) -
               u_tilde_vector(shape, 1, q) * Rational(-q * ipow(q, 2 * (1 - 2))))
                  .is_zero());
}

TEST(PrincipalTerm, LinearAndIdempotent) {
  const Rational q = kTwoThirds;
  const GrassmannShape shape(5, 2);
  const FixedVectors<Rational> fv = w_vectors(shape, 1, q);
  const QExtVector<Rational> a = psi_hat_r(tensor_power(fv.w_sigma, 2), q);
  const QExtVector<Rational> b = psi_hat_r(tensor_power(fv.w_tilde, 2), q);
  const QExtVector<Rational> pa = principal_term(a, shape);
  EXPECT_GT(a.coeff.size(), pa.coeff.size());
  EXPECT_EQ(principal_term(pa, shape).coeff, pa.coeff);
  const Rational c(3, 7);
  EXPECT_TRUE((principal_term(a * c + b, shape) - (pa * c + principal_term(b, shape))).is_zero());
}

TEST(Intertwiner, PrincipalTermsExact) {
  for (int n = 2; n <= 6; ++n) {
    for (int l = 1; 2 * l <= n && l <= 3; ++l) {
      const GrassmannShape shape(n, l);
      for (int r = 1; r <= l; ++r) {
        for (double sigma : {0.0, 1.0}) {
          const VerificationReport rep = intertwiner_check(shape, r, sigma, kHalf);
          EXPECT_TRUE(rep.passed && rep.exact) << n << l << r << sigma << ' ' << rep.detail;
          EXPECT_LT(rep.runtime_ms, 60000);
        }
      }
    }
  }
  EXPECT_EQ(intertwiner_constant(1, 2, kHalf), -kHalf * kHalf);
}

TEST(Intertwiner, FloatModeWithRealSigma) {
  const GrassmannShape shape(5, 2);
  for (double sigma : {-0.5, 0.75}) {
    const VerificationReport rep = intertwiner_check(shape, 2, sigma, 0.6);
    EXPECT_TRUE(rep.passed) << rep.detail;
    EXPECT_FALSE(rep.exact);
  }
}

TEST(Intertwiner, ThetaConstants) {
  const Rational q = kHalf;
  EXPECT_EQ(theta_constant(2, 1, q), -q * (1 + q * q));
  for (int n = 4; n <= 6; ++n) {
    for (int l = 2; 2 * l <= n; ++l) {
      const GrassmannShape shape(n, l);
      for (int r = 2; r <= std::min(l, 3); ++r) {
        for (double sigma : {-1.0, 0.0, 1.0}) {
          const VerificationReport rep = theta_check(shape, r, sigma, q);
          EXPECT_TRUE(rep.passed) << n << l << r << sigma << ' ' << rep.detail;
        }
      }
    }
  }
  EXPECT_THROW(theta_check(GrassmannShape(4, 2), 1, 0, q), DomainError);
}

TEST(Intertwiner, FactorizationOnRandomInputs) {
  for (int r = 2; r <= 3; ++r) {
    for (std::uint32_t seed = 1; seed <= 4; ++seed) {
      const VerificationReport rep = factorization_check(4, r, kTwoThirds, seed);
      EXPECT_TRUE(rep.passed) << rep.detail;
    }
  }
}

TEST(Casimir, Examples) {
  const Rational q = kHalf;
  EXPECT_EQ(casimir_eigenvalue(WeightVector::a({0, 0}), q), q * q + 1);
  EXPECT_EQ(casimir_eigenvalue(WeightVector::a({3}), q), ipow(q, 6));
  const WeightVector lambda = WeightVector::a({2, 0, -1});
  const WeightVector shifted = WeightVector::a({3, 1, 0});
  EXPECT_EQ(casimir_eigenvalue(shifted, q), q * q * casimir_eigenvalue(lambda, q));
}

TEST(QPower, ExactNeedsIntegralExponent) {
  EXPECT_EQ(q_power(kHalf, -2), Rational(4));
  EXPECT_THROW(q_power(kHalf, 0.5), DomainError);
  EXPECT_THROW(q_power(Rational(0), 1), DomainError);
  EXPECT_NEAR(q_power(0.25, 0.5), 0.5, 1e-15);
}

}  // namespace
}  // namespace bcq
