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

#include <gtest/gtest.h>

#include "bcq/koornwinder.hpp"
#include "bcq/limits.hpp"
#include "bcq/symmetric.hpp"

namespace bcq {
namespace {

// q, cd and qc/d are squares so every square root in t_B and t_L is rational.
BigJacobiParams<Rational> big() {
  return {Rational(1, 2), Rational(1, 3), Rational(1), Rational(1), Rational(1, 4), 1};
}
LittleJacobiParams<Rational> little() {
  return {Rational(1, 2), Rational(1, 3), Rational(1, 4), 1};
}

TEST(LimitParams, Examples) {
  const LittleJacobiParams<Rational> lp = little();
  const KoornwinderParams<Rational> at_one = t_L(Rational(1), lp);
  EXPECT_EQ(at_one.t[0], Rational(1, 2));
  EXPECT_EQ(at_one.t[1], -lp.a / 2);
  EXPECT_EQ(at_one.t[2], lp.b / 2);
  EXPECT_EQ(at_one.t[3], Rational(-1, 2));
  const BigJacobiParams<Rational> bp = big();
  for (const Rational& eps : EpsilonSweep::standard().values) {
    EXPECT_EQ(t_B(eps, bp).product(), bp.q * bp.q * bp.a * bp.b);
    EXPECT_GT(abs(t_L(eps, lp).t[0]), 1);
    EXPECT_NO_THROW(t_B(eps, bp).validate());
  }
  EXPECT_EQ(rescale_big(Rational(1, 10), bp), Rational(5));
  // The squared norm prefactor at |lambda| = 1 is eps^2 cd / q.
  const Rational s = rescale_big(Rational(1, 10), bp);
  EXPECT_EQ(1 / (s * s), Rational(1, 100) * bp.c * bp.d / bp.q);
  BigJacobiParams<Rational> irrational = bp;
  irrational.q = Rational(1, 2);
  EXPECT_THROW(t_B(Rational(1, 10), irrational), DomainError);
}

TEST(LimitParams, SweepValidation) {
  EXPECT_NO_THROW(EpsilonSweep::standard().validate());
  EXPECT_THROW(EpsilonSweep::parse("1/10,1/10"), DomainError);
  EXPECT_THROW(EpsilonSweep::parse("0,1"), DomainError);
  EXPECT_EQ(EpsilonSweep::parse("1e-1,3e-2").values[1], Rational(3, 100));
}

TEST(LimitSweeps, OrbitSumsDegenerate) {
  // eps^{|lambda|} m~_lambda(x/eps) = m_lambda(x) + O(eps^2).
  const Rational eps(1, 1000);
  for (const WeightVector& w : {WeightVector::bc({2}), WeightVector::bc({2, 1}),
                                WeightVector::bc({1, 1, 0})}) {
    const int l = w.size();
    std::vector<Rational> scale(static_cast<std::size_t>(l), 1 / eps);
    const LaurentPoly<Rational> scaled =
        orbit_sum_W<Rational>(w).rescaled(scale) * ipow(eps, w.total());
    const LaurentPoly<Rational> diff = scaled - monomial_symmetric<Rational>(w);
    EXPECT_LE(diff.max_abs_coeff(), scalar_cast<double>(Rational(eps * eps)) * (1 + 1e-12));
  }
}

TEST(LimitSweeps, PolynomialLimitsConverge) {
  for (const WeightVector& w :
       {WeightVector::bc({1}), WeightVector::bc({2}), WeightVector::bc({1, 0}),
        WeightVector::bc({1, 1}), WeightVector::bc({2, 0})}) {
    const SweepResult b = limit_check_big(w, big());
    EXPECT_TRUE(b.report.passed) << w.str() << ' ' << b.report.detail;
    const SweepResult l = limit_check_little(w, little());
    EXPECT_TRUE(l.report.passed) << w.str() << ' ' << l.report.detail;
    EXPECT_EQ(l.rows.size(), EpsilonSweep::standard().values.size());
  }
  const SweepResult zero = limit_check_little(WeightVector::bc({0, 0}), little());
  EXPECT_TRUE(zero.report.passed);
  for (const SweepRow& r : zero.rows) {
    EXPECT_EQ(r.max_coeff_err, 0.0);
  }
}

TEST(LimitSweeps, MonicitySurvivesRescaling) {
  const LittleJacobiParams<Rational> lp = little();
  const WeightVector w = WeightVector::bc({2, 1});
  for (const Rational& eps : {Rational(1, 10), Rational(1, 1000)}) {
    const LaurentPoly<Rational> p = koornwinder_poly(w, t_L(eps, lp));
    const Rational s = rescale_little(eps, lp);
    std::vector<Rational> scale(2, s);
    const LaurentPoly<Rational> rescaled = p.rescaled(scale) * ipow(Rational(1 / s), w.total());
    EXPECT_EQ(rescaled.coeff(Exponent{2, 1}), Rational(1));
  }
}

TEST(LimitSweeps, BigNormLimit) {
  for (const WeightVector& w : {WeightVector::bc({1}), WeightVector::bc({2})}) {
    const SweepResult r = norm_limit_check_big(w, big());
    EXPECT_TRUE(r.report.passed) << w.str() << ' ' << r.report.detail;
  }
  const SweepResult zero = norm_limit_check_big(WeightVector::bc({0}), big());
  for (const SweepRow& r : zero.rows) {
    EXPECT_NEAR(*r.norm_err, 0.0, 1e-12);
  }
}

TEST(LimitSweeps, LittleNormLimitConvergesLinearly) {
  // The little limit converges at first order in eps.
  const EpsilonSweep sweep = EpsilonSweep::parse("1/100,1/1000,1/10000");
  for (const WeightVector& w : {WeightVector::bc({1}), WeightVector::bc({2})}) {
    const SweepResult r = norm_limit_check_little(w, little(), sweep, 1.0);
    ASSERT_TRUE(r.report.passed) << r.report.detail;
    const double e1 = *r.rows[1].norm_err;
    const double e2 = *r.rows[2].norm_err;
    EXPECT_NEAR(e1 / e2, 10.0, 0.5) << r.report.detail;
  }
}

TEST(LimitSweeps, CsvLayout) {
  std::vector<SweepRow> rows(2);
  rows[0] = {0.1, 0.5, std::nullopt, true};
  rows[1].epsilon = 0.01;
  EXPECT_EQ(sweep_csv(rows),
            "epsilon,max_coeff_err,norm_err,constructed_ok\n0.10000000000000001,0.5,,true\n"
            "0.01,,,false\n");
}

TEST(Grassmann, ParameterProductOverGrid) {
  for (int n = 2; n <= 7; ++n) {
    for (int l = 1; 2 * l <= n; ++l) {
      for (double sigma : {-1.5, 0.0, 0.5, 2.0}) {
        for (double tau : {-1.0, 0.0, 1.25}) {
          for (double q : {0.3, 0.5, 0.9}) {
            EXPECT_TRUE(grassmann_product_check(n, l, sigma, tau, q).passed);
            EXPECT_TRUE(grassmann_consistency_check(n, l, sigma, tau, q).passed);
          }
        }
      }
      EXPECT_TRUE(grassmann_consistency_check(n, l, 0.75, 0.75, 0.5).passed);
    }
  }
}

TEST(Grassmann, Examples) {
  const double q = 0.5;
  const KoornwinderParams<double> p = grassmann_koornwinder_params(4, 2, 0.3, -0.2, q);
  EXPECT_NEAR(p.t[3], std::pow(q, -0.3 - 0.2 + 1), 1e-15);
  const KoornwinderParams<double> s = grassmann_koornwinder_params(5, 2, 0.7, 0.7, q);
  EXPECT_NEAR(s.t[2], q, 1e-15);
  EXPECT_NEAR(s.q, q * q, 1e-15);
  const BigJacobiParams<double> b = grassmann_big_params(4, 2, 0.0, q);
  EXPECT_EQ(b.a, 1.0);
  EXPECT_EQ(b.b, 1.0);
  EXPECT_EQ(b.c, 1.0);
  EXPECT_EQ(b.d, 1.0);
  EXPECT_NO_THROW(grassmann_little_params(4, 2, q));
  EXPECT_EQ(grassmann_little_params(4, 2, q).a, 1.0);
  EXPECT_THROW(grassmann_koornwinder_params(3, 2, 0, 0, q), DomainError);
}

TEST(Selberg, ClassicalValues) {
  // l = 1: Euler Beta.
  EXPECT_NEAR(selberg_classical(2.0, 1.5, 1.0, 1),
              std::tgamma(3.0) * std::tgamma(2.5) / std::tgamma(5.5), 1e-14);
  // l = 2, tau = 1: int int (x - y)^2 dx dy = 1/6.
  EXPECT_NEAR(selberg_classical(0.0, 0.0, 1.0, 2), 1.0 / 6.0, 1e-14);
  EXPECT_THROW(selberg_classical(-1.0, 0.0, 1.0, 1), DomainError);
}

TEST(Selberg, QToOneLimit) {
  for (double alpha : {0.0, 1.0}) {
    const VerificationReport r = q_to_1_check(alpha, 0.0, 1, 2, {0.9, 0.99, 0.999});
    EXPECT_TRUE(r.passed) << r.detail;
  }
  EXPECT_TRUE(qgamma_limit_check({1.5, 2.5}, 0.999).passed);
  EXPECT_FALSE(qgamma_limit_check({2.5}, 0.5).passed);
}

}  // namespace
}  // namespace bcq
