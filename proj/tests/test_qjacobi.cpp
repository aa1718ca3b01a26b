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

#include "bcq/qjacobi.hpp"
#include "bcq/qseries.hpp"
#include "bcq/symmetric.hpp"

namespace bcq {
namespace {

using DPoly = LaurentPoly<double>;

BigJacobiParams<double> big(int k = 1) { return {0.4, 0.3, 1.0, 0.7, 0.5, k}; }
LittleJacobiParams<double> little(int k = 1) { return {0.6, 0.25, 0.5, k}; }

DPoly one(int l) { return DPoly::constant(l, 1.0); }

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

const std::vector<WeightVector>& small_partitions(int l) {
  static const std::vector<WeightVector> one_var{WeightVector::bc({0}), WeightVector::bc({1}),
                                                 WeightVector::bc({2}), WeightVector::bc({3})};
  static const std::vector<WeightVector> two_var{
      WeightVector::bc({0, 0}), WeightVector::bc({1, 0}), WeightVector::bc({1, 1}),
      WeightVector::bc({2, 0}), WeightVector::bc({2, 1}), WeightVector::bc({3, 0})};
  return l == 1 ? one_var : two_var;
}

TEST(QJacobiWeights, Examples) {
  const double x1[] = {0.37};
  const BigJacobiParams<double> b = big();
  const double q = b.q;
  const double want = (qpochhammer_inf(q * 0.37 / b.c, q) * qpochhammer_inf(-q * 0.37 / b.d, q) /
                       (qpochhammer_inf(q * b.a * 0.37 / b.c, q) *
                        qpochhammer_inf(-q * b.b * 0.37 / b.d, q)))
                          .real();
  EXPECT_NEAR(big_weight(x1, b), want, 1e-15);

  const LittleJacobiParams<double> p = little();
  const int at_one[] = {0};
  EXPECT_NEAR(little_weight(at_one, p),
              (qpochhammer_inf(p.q, p.q) / qpochhammer_inf(p.q * p.b, p.q)).real(), 1e-15);

  // k = 1: the cross factor is x_i - x_j, so Delta_L = Delta^2 prod w_L.
  const int pair[] = {1, 3};
  const int first[] = {1};
  const int second[] = {3};
  const double v = std::pow(0.5, 1) - std::pow(0.5, 3);
  EXPECT_NEAR(little_weight(pair, p), v * v * little_weight(first, p) * little_weight(second, p),
              1e-15);
}

TEST(QJacobiConstants, BigMatchesClosedForm) {
  for (int l : {1, 2}) {
    for (int k : {1, 2}) {
      const double got = big_inner(one(l), one(l), big(k));
      EXPECT_LT(rel(got, closed_form_big_constant(l, big(k))), 1e-10) << "l=" << l << " k=" << k;
      EXPECT_GT(got, 0.0);
    }
  }
}

TEST(QJacobiConstants, LittleMatchesClosedForm) {
  for (int l : {1, 2}) {
    for (int k : {1, 2}) {
      const double got = little_inner(one(l), one(l), little(k));
      EXPECT_LT(rel(got, closed_form_little_constant(l, little(k))), 1e-10)
          << "l=" << l << " k=" << k;
    }
  }
}

TEST(QJacobiConstants, LittleRankOneIsAGammaRatio) {
  const LittleJacobiParams<double> p = little();
  const double alpha = std::log(p.a) / std::log(p.q);
  const double beta = std::log(p.b) / std::log(p.q);
  const double want = qgamma(alpha + 1, p.q) * qgamma(beta + 1, p.q) * qgamma(1, p.q) /
                      qgamma(alpha + beta + 2, p.q);
  EXPECT_LT(rel(closed_form_little_constant(1, p), want), 1e-13);
}

TEST(QJacobiSums, TruncationConverges) {
  SumTruncation loose;
  loose.tail_tol = 1e-7;
  SumTruncation tight;
  const double a = little_inner(one(2), one(2), little(), loose);
  const double b = little_inner(one(2), one(2), little(), tight);
  EXPECT_LT(rel(a, b), 1e-6);
  SumTruncation tiny;
  tiny.n_max = 5;
  EXPECT_THROW(little_inner(one(1), one(1), little(), tiny), ConvergenceError);
}

TEST(QJacobiPoly, LittleRankOneOracle) {
  // Monic little q-Jacobi polynomial of degree one from its 2phi1 form:
  // p_1(x) = x - (1 - a q) / (1 - a b q^2).
  const LittleJacobiParams<double> p = little();
  const DPoly poly = little_jacobi_poly(WeightVector::bc({1}), p);
  EXPECT_NEAR(poly.coeff(Exponent{1}), 1.0, 1e-15);
  const double want = -(1 - p.a * p.q) / (1 - p.a * p.b * p.q * p.q);
  EXPECT_NEAR(poly.coeff(Exponent{0}), want, 1e-12);
  const DPoly x = DPoly::monomial(Exponent{1});
  const double c0 = -little_inner(x, one(1), p) / little_inner(one(1), one(1), p);
  EXPECT_NEAR(poly.coeff(Exponent{0}), c0, 1e-12);
}

TEST(QJacobiPoly, MonicAndFullyOrthogonal) {
  for (int l : {1, 2}) {
    for (int k : {1, 2}) {
      std::vector<DPoly> bp;
      std::vector<DPoly> lp;
      for (const WeightVector& w : small_partitions(l)) {
        bp.push_back(big_jacobi_poly(w, big(k)));
        lp.push_back(little_jacobi_poly(w, little(k)));
        EXPECT_EQ(expand_in_basis(bp.back(), Symmetry::S).at(w), 1.0);
        EXPECT_EQ(expand_in_basis(lp.back(), Symmetry::S).at(w), 1.0);
      }
      for (std::size_t i = 0; i < bp.size(); ++i) {
        for (std::size_t j = 0; j < i; ++j) {
          const double nb = std::sqrt(big_inner(bp[i], bp[i], big(k)) * big_inner(bp[j], bp[j], big(k)));
          EXPECT_LT(std::abs(big_inner(bp[i], bp[j], big(k))), 1e-9 * nb);
          const double nl = std::sqrt(little_inner(lp[i], lp[i], little(k)) *
                                      little_inner(lp[j], lp[j], little(k)));
          EXPECT_LT(std::abs(little_inner(lp[i], lp[j], little(k))), 1e-9 * nl);
        }
      }
    }
  }
}

TEST(QJacobiPoly, PositivityAndSymmetry) {
  std::mt19937 rng(9);
  std::uniform_real_distribution<double> u(-1, 1);
  for (int trial = 0; trial < 5; ++trial) {
    DPoly p(2);
    for (const WeightVector& w : small_partitions(2)) {
      p += u(rng) * monomial_symmetric<double>(w);
    }
    EXPECT_GT(big_inner(p, p, big()), 0.0);
    EXPECT_GT(little_inner(p, p, little()), 0.0);
    const DPoly r = monomial_symmetric<double>(WeightVector::bc({1, 1}));
    EXPECT_NEAR(big_inner(p, r, big()), big_inner(r, p, big()), 1e-14);
  }
}

TEST(QJacobiNorms, PositiveAndConsistent) {
  EXPECT_NEAR(norm_big(WeightVector::bc({0, 0}), big()), 1.0, 1e-15);
  EXPECT_NEAR(norm_little(WeightVector::bc({0}), little()), 1.0, 1e-15);
  for (const WeightVector& w : small_partitions(2)) {
    EXPECT_GT(norm_big(w, big()), 0.0);
    EXPECT_GT(norm_little(w, little()), 0.0);
  }
  // l = 1, lambda = (1): Gram ratio against direct quadrature of p_1^2.
  const LittleJacobiParams<double> p = little();
  const double c0 = -(1 - p.a * p.q) / (1 - p.a * p.b * p.q * p.q);
  DPoly p1 = DPoly::monomial(Exponent{1});
  p1.add_term(Exponent{0}, c0);
  const double direct = little_inner(p1, p1, p) / little_inner(one(1), one(1), p);
  EXPECT_LT(rel(norm_little(WeightVector::bc({1}), p), direct), 1e-10);
}

TEST(QJacobiParams, Validation) {
  LittleJacobiParams<double> p = little();
  p.a = 2.0 / p.q;
  EXPECT_THROW(p.validate(), DomainError);
  try {
    p.validate();
  } catch (const DomainError& e) {
    EXPECT_STREQ(e.what(), "a outside (0,1/q)");
  }
  BigJacobiParams<double> b = big();
  b.c = -1;
  EXPECT_THROW(b.validate(), DomainError);
  b = big();
  b.a = -b.c / (b.d * b.q) - 0.1;
  EXPECT_THROW(b.validate(), DomainError);
  EXPECT_TRUE(is_big_complex_pair(Complex(0.3, 0.4), Complex(-0.7 * 0.3, 0.7 * 0.4), 1.0, 0.7));
  LittleJacobiParams<double> neg = little();
  neg.b = -3.0;
  EXPECT_NO_THROW(neg.validate());
  EXPECT_THROW(closed_form_little_constant(1, neg), DomainError);
}

TEST(QJacobiReports, ConstantsAndOrthogonality) {
  for (int l = 1; l <= 2; ++l) {
    for (int k = 1; k <= 2; ++k) {
      EXPECT_TRUE(selberg_check_big(l, big(k)).passed) << l << k;
      EXPECT_TRUE(selberg_check_little(l, little(k)).passed) << l << k;
    }
  }
  const VerificationReport b = orthogonality_check_big(2, 3, big());
  EXPECT_TRUE(b.passed) << b.detail;
  const VerificationReport s = orthogonality_check_little(2, 3, little(2));
  EXPECT_TRUE(s.passed) << *s.residual;
}

}  // namespace
}  // namespace bcq
