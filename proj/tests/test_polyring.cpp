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

#include <random>

#include <gtest/gtest.h>

#include "bcq/serialize.hpp"
#include "bcq/symmetric.hpp"

namespace bcq {
namespace {

using RPoly = LaurentPoly<Rational>;

RPoly x(int l, int i, int e = 1) { return RPoly::monomial(Exponent::unit(l, i, e)); }

RPoly random_w_invariant(std::mt19937& rng, int l, int max_deg) {
  std::uniform_int_distribution<int> coef(-5, 5);
  std::vector<int> top(static_cast<std::size_t>(l), 0);
  top[0] = max_deg;
  RPoly p(l);
  for (const WeightVector& mu : dominant_downset({top, Lattice::BC})) {
    p += orbit_sum_W<Rational>(mu) * Rational(coef(rng), 1 + std::abs(coef(rng)));
  }
  return p;
}

TEST(Laurent, RingBasics) {
  const RPoly p = x(1, 0) + x(1, 0, -1);
  EXPECT_EQ(p + RPoly(1), p);
  EXPECT_EQ(p * RPoly::constant(1, Rational(1)), p);
  const RPoly sq = p * p;
  EXPECT_EQ(sq, x(1, 0, 2) + RPoly::constant(1, Rational(2)) + x(1, 0, -2));
  EXPECT_TRUE((p - p).is_zero());
  EXPECT_THROW(p + RPoly(2), DomainError);
}

TEST(Laurent, BinomialDivision) {
  const RPoly f = x(2, 0, 3) + x(2, 1) * Rational(-2, 3) + RPoly::constant(2, Rational(5));
  const Exponent a{1, -1};
  const Rational c(3, 7);
  const RPoly b = RPoly::constant(2, Rational(1)) - RPoly::monomial(a, c);
  EXPECT_EQ(divide_binomial(f * b, c, a), f);
  EXPECT_THROW(divide_binomial(f, c, a), ConsistencyError);
  // Floating division in both stable directions.
  const LaurentPoly<double> fd = f.cast<double>();
  for (double cd : {0.3, 4.0}) {
    LaurentPoly<double> bd = LaurentPoly<double>::constant(2, 1.0) -
                             LaurentPoly<double>::monomial(Exponent{2, 0}, cd);
    EXPECT_LT(max_abs_diff(divide_binomial(fd * bd, cd, Exponent{2, 0}), fd), 1e-12);
  }
}

TEST(OrbitSums, Examples) {
  EXPECT_EQ(orbit_sum_W<Rational>(WeightVector::bc({0})), RPoly::constant(1, Rational(1)));
  EXPECT_EQ(orbit_sum_W<Rational>(WeightVector::bc({1})), x(1, 0) + x(1, 0, -1));
  RPoly expected(2);
  for (int a : {1, -1}) {
    for (int b : {1, -1}) {
      expected.add_term(Exponent{a, b}, Rational(1));
    }
  }
  EXPECT_EQ(orbit_sum_W<Rational>(WeightVector::bc({1, 1})), expected);
  EXPECT_EQ(monomial_symmetric<Rational>(WeightVector::bc({1, 0})), x(2, 0) + x(2, 1));
  EXPECT_EQ(monomial_symmetric<Rational>(WeightVector::bc({2, 0})), x(2, 0, 2) + x(2, 1, 2));
  EXPECT_EQ(elementary_symmetric<Rational>(2, 3), x(3, 0) * x(3, 1) + x(3, 0) * x(3, 2) +
                                                      x(3, 1) * x(3, 2));
}

TEST(OrbitSums, FixedByGenerators) {
  for (const WeightVector& mu : {WeightVector::bc({2, 1, 0}), WeightVector::bc({3, 3, 1}),
                                 WeightVector::bc({1, 1, 1})}) {
    const RPoly p = orbit_sum_W<Rational>(mu);
    EXPECT_TRUE(is_invariant(p, Symmetry::W));
    for (int i = 0; i < 3; ++i) {
      EXPECT_EQ(p.inverted(i), p);
    }
    EXPECT_EQ(p.permuted(std::vector<int>{2, 0, 1}), p);
  }
  EXPECT_FALSE(is_invariant(x(2, 0), Symmetry::W));
  EXPECT_TRUE(is_invariant(x(2, 0) + x(2, 1), Symmetry::S));
}

TEST(Schur, Examples) {
  EXPECT_EQ(schur<Rational>(WeightVector::a({1, 1})), x(2, 0) * x(2, 1));
  EXPECT_EQ(schur<Rational>(WeightVector::a({2, 0})),
            x(2, 0, 2) + x(2, 0) * x(2, 1) + x(2, 1, 2));
  EXPECT_EQ(schur<Rational>(WeightVector::a({1, -1})),
            x(2, 0) * x(2, 1, -1) + RPoly::constant(2, Rational(1)) + x(2, 0, -1) * x(2, 1));
}

TEST(Schur, BialternantMatchesTableaux) {
  for (const WeightVector& lam :
       {WeightVector::a({2, 1, 0}), WeightVector::a({3, 1, 1, 0}), WeightVector::a({2, 2, 0, -1}),
        WeightVector::a({1, 0, 0, 0, -1}), WeightVector::a({2, 1, 1, 0, -1, -2})}) {
    const RPoly s = schur<Rational>(lam);
    EXPECT_EQ(s, schur_tableaux<Rational>(lam)) << lam.str();
    // Number of monomials counted with multiplicity equals the Weyl dimension.
    Rational total(0);
    for (const auto& [e, c] : s.terms()) {
      total += c;
    }
    EXPECT_EQ(total, Rational(weyl_dimension(lam))) << lam.str();
  }
}

TEST(Schur, LittlewoodRichardsonPositivity) {
  for (int n = 2; n <= 4; ++n) {
    std::vector<WeightVector> parts;
    for (int a = 0; a <= 3; ++a) {
      for (int b = 0; b <= a && a + b <= 3; ++b) {
        for (int c = 0; c <= b && a + b + c <= 3; ++c) {
          std::vector<int> v{a, b, c};
          v.resize(static_cast<std::size_t>(n), 0);
          if (n < 3 && c > 0) {
            continue;
          }
          if (n < 2 && b > 0) {
            continue;
          }
          parts.push_back({v, Lattice::A});
        }
      }
    }
    for (const auto& l1 : parts) {
      for (const auto& l2 : parts) {
        const RPoly prod = schur<Rational>(l1) * schur<Rational>(l2);
        for (const auto& [nu, c] : expand_in_schur(prod)) {
          EXPECT_GT(c, 0);
          EXPECT_EQ(denominator(c), 1);
        }
      }
    }
  }
}

TEST(Basis, ExpandExamples) {
  const RPoly m1 = orbit_sum_W<Rational>(WeightVector::bc({1}));
  const auto e = expand_in_basis(m1 * m1, Symmetry::W);
  ASSERT_EQ(e.size(), 2u);
  EXPECT_EQ(e.at(WeightVector::bc({2})), 1);
  EXPECT_EQ(e.at(WeightVector::bc({0})), 2);
  EXPECT_TRUE(expand_in_basis(RPoly(2), Symmetry::W).empty());
  const auto single = expand_in_basis(orbit_sum_W<Rational>(WeightVector::bc({2, 1})), Symmetry::W);
  EXPECT_EQ(single.size(), 1u);
  EXPECT_THROW(expand_in_basis(x(2, 0), Symmetry::W), DomainError);
}

TEST(Basis, RoundTripOnRandomInvariants) {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 10; ++trial) {
    const RPoly p = random_w_invariant(rng, 2, 3);
    EXPECT_EQ(from_basis(expand_in_basis(p, Symmetry::W), Symmetry::W, 2), p);
  }
}

TEST(GeneratorCoords, Examples) {
  const RPoly m1 = orbit_sum_W<Rational>(WeightVector::bc({1}));
  EXPECT_EQ(to_generator_coords(m1, Symmetry::W), x(1, 0));
  EXPECT_EQ(to_generator_coords(RPoly::constant(1, Rational(1)), Symmetry::W),
            RPoly::constant(1, Rational(1)));
  EXPECT_EQ(to_generator_coords(m1 * m1, Symmetry::W), x(1, 0, 2));
  EXPECT_EQ(to_generator_coords(orbit_sum_W<Rational>(WeightVector::bc({2})), Symmetry::W),
            x(1, 0, 2) - RPoly::constant(1, Rational(2)));
}

TEST(GeneratorCoords, AlgebraMorphism) {
  std::mt19937 rng(9);
  for (Symmetry g : {Symmetry::W, Symmetry::S}) {
    for (int trial = 0; trial < 6; ++trial) {
      RPoly p = random_w_invariant(rng, 2, 2);
      RPoly q = random_w_invariant(rng, 2, 2);
      if (g == Symmetry::S) {
        p = from_basis(expand_in_basis(p, Symmetry::W), Symmetry::S, 2);
        q = from_basis(expand_in_basis(q, Symmetry::W), Symmetry::S, 2);
      }
      const RPoly yp = to_generator_coords(p, g);
      const RPoly yq = to_generator_coords(q, g);
      EXPECT_EQ(to_generator_coords(p * q, g), yp * yq);
      EXPECT_EQ(from_generator_coords(yp, g), p);
    }
  }
}

TEST(Serialize, JsonRoundTrip) {
  const RPoly p = orbit_sum_W<Rational>(WeightVector::bc({2, 1})) * Rational(-3, 4) +
                  RPoly::constant(2, Rational(1, 3));
  const nlohmann::json j = to_json(p);
  EXPECT_EQ(j["domain"], "rational");
  EXPECT_EQ(j["vars"], 2);
  EXPECT_EQ(rational_poly_from_json(j), p);
  const LaurentPoly<Complex> pc = p.cast<Complex>();
  EXPECT_EQ(complex_poly_from_json(to_json(pc)), pc);
}

}  // namespace
}  // namespace bcq
