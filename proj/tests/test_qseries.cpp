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
#include <vector>

#include <gtest/gtest.h>

#include "bcq/qseries.hpp"

namespace bcq {
namespace {

// Euler's expansion (a;q)_inf = sum_n (-1)^n q^{n(n-1)/2} a^n / (q;q)_n, an
// independent route to the infinite product.
double euler_product(double a, double q) {
  double sum = 0.0;
  double qq = 1.0;  // (q;q)_n
  for (int n = 0; n < 200; ++n) {
    if (n > 0) {
      qq *= 1.0 - std::pow(q, n);
    }
    sum += std::pow(-1.0, n) * std::pow(q, n * (n - 1) / 2.0) * std::pow(a, n) / qq;
  }
  return sum;
}

TEST(QPochhammer, FiniteExamples) {
  EXPECT_EQ(qpochhammer(0.5, 0.5, 0), Complex(1.0));
  EXPECT_EQ(qpochhammer(1.0, 0.5, 3), Complex(0.0));
  EXPECT_NEAR(std::abs(qpochhammer(0.5, 0.5, 2) - Complex(0.5 * 0.75)), 0.0, 1e-16);
}

TEST(QPochhammer, InfiniteMatchesEulerExpansion) {
  const Complex v = qpochhammer_inf(0.5, 0.5);
  EXPECT_NEAR(v.real(), 0.2887880951, 1e-10);
  EXPECT_NEAR(v.real(), euler_product(0.5, 0.5), 1e-14);
  EXPECT_NEAR(qpochhammer_inf(0.3, 0.8).real(), euler_product(0.3, 0.8), 1e-12);
  EXPECT_NEAR(qpochhammer_inf(-0.7, 0.4).real(), euler_product(-0.7, 0.4), 1e-13);
}

TEST(QPochhammer, MultiProducts) {
  EXPECT_EQ(qpochhammer_multi({}, 0.5, 4), Complex(1.0));
  const std::vector<Complex> zero{1.0, 0.3};
  EXPECT_EQ(qpochhammer_multi(zero, 0.5, 2), Complex(0.0));
  const std::vector<Complex> halves{0.5, 0.5};
  EXPECT_NEAR(std::abs(qpochhammer_multi(halves, 0.5, 1) - Complex(0.25)), 0.0, 1e-16);
}

TEST(QPochhammer, ExactSplitting) {
  const Rational q(2, 3);
  const Rational a(-5, 7);
  for (int i = 0; i < 5; ++i) {
    for (int j = 0; j < 5; ++j) {
      EXPECT_EQ(qpochhammer_exact(a, q, i + j),
                qpochhammer_exact(a, q, i) * qpochhammer_exact(Rational(a * ipow(q, i)), q, j));
    }
  }
}

TEST(QPochhammer, ExhaustedPolicyIsReported) {
  TruncationPolicy tight;
  tight.max_terms = 5;
  EXPECT_THROW(qpochhammer_inf(0.5, 0.9, tight), ConvergenceError);
  EXPECT_THROW(QBase(1.0), DomainError);
  EXPECT_THROW(QBase(0.0), DomainError);
}

TEST(QGamma, Values) {
  EXPECT_NEAR(qgamma(1.0, 0.5), 1.0, 1e-14);
  EXPECT_NEAR(qgamma(2.0, 0.5), 1.0, 1e-14);
  EXPECT_NEAR(qgamma(3.0, 0.5), 1.5, 1e-14);
  EXPECT_THROW(qgamma(0.0, 0.5), DomainError);
  EXPECT_THROW(qgamma(-2.0, 0.5), DomainError);
}

TEST(QGamma, FunctionalEquation) {
  for (double q : {0.3, 0.5, 0.9}) {
    for (double a : {0.5, 1.0, 2.0, 3.7, -0.5}) {
      const double lhs = qgamma(a + 1, q);
      const double rhs = (1 - std::pow(q, a)) / (1 - q) * qgamma(a, q);
      EXPECT_NEAR(lhs / rhs, 1.0, 1e-12) << "a=" << a << " q=" << q;
    }
  }
}

TEST(QGamma, ApproachesGamma) {
  TruncationPolicy wide;
  wide.max_terms = 1000000;
  for (double a : {1.5, 2.5}) {
    EXPECT_NEAR(qgamma(a, 0.999, wide) / std::tgamma(a), 1.0, 1e-2);
  }
}

TEST(Jackson, ClosedForms) {
  const double q = 0.5;
  auto one = [](Complex) { return Complex(1.0); };
  auto x = [](Complex z) { return z; };
  EXPECT_NEAR(jackson_integral(one, 0.0, 1.0, std::nullopt, q).real(), 1.0, 1e-15);
  EXPECT_NEAR(jackson_integral(x, 0.0, 1.0, std::nullopt, q).real(), 1.0 / (1.0 + q), 1e-15);
  EXPECT_EQ(jackson_integral(x, 0.0, 1.0, -1, q), Complex(0.0));
  // Truncated at N the sum of 1 telescopes to 1 - q^{N+1}.
  EXPECT_NEAR(jackson_integral(one, 0.0, 2.0, 3, q).real(), 2.0 * (1 - std::pow(q, 4)), 1e-15);
}

TEST(Jackson, LinearityAndSplitting) {
  const double q = 0.7;
  auto f = [](Complex z) { return z * z - 3.0 * z; };
  auto g = [](Complex z) { return std::exp(z); };
  auto h = [&](Complex z) { return 2.0 * f(z) - 5.0 * g(z); };
  const Complex a(-0.4), b(1.3);
  const Complex lhs = jackson_integral(h, a, b, std::nullopt, q);
  const Complex rhs = 2.0 * jackson_integral(f, a, b, std::nullopt, q) -
                      5.0 * jackson_integral(g, a, b, std::nullopt, q);
  EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-13);
  const Complex split = jackson_integral(f, 0.0, b, 6, q) - jackson_integral(f, 0.0, a, 6, q);
  EXPECT_EQ(jackson_integral(f, a, b, 6, q), split);
}

TEST(Jackson, MonotoneForNonnegativeIntegrand) {
  auto f = [](Complex z) { return Complex(1.0 + z.real() * z.real()); };
  double prev = 0.0;
  for (int N = 0; N < 30; ++N) {
    const double v = jackson_integral(f, 0.0, 1.0, N, 0.6).real();
    EXPECT_GT(v, prev);
    prev = v;
  }
}

}  // namespace
}  // namespace bcq
