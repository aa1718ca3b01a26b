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

#include <algorithm>
#include <random>
#include <set>

#include <gtest/gtest.h>

#include "bcq/errors.hpp"
#include "bcq/weights.hpp"

namespace bcq {
namespace {

WeightVector random_bc(std::mt19937& rng, int l, int bound) {
  std::uniform_int_distribution<int> d(-bound, bound);
  std::vector<int> v(static_cast<std::size_t>(l));
  for (int& x : v) {
    x = d(rng);
  }
  return {v, Lattice::BC};
}

TEST(Dominance, Examples) {
  EXPECT_TRUE(dominance_leq(WeightVector::bc({1, 0}), WeightVector::bc({1, 0})));
  EXPECT_TRUE(dominance_leq(WeightVector::bc({1, 1}), WeightVector::bc({2, 0})));
  EXPECT_FALSE(dominance_leq(WeightVector::bc({2, 0}), WeightVector::bc({1, 1})));
  EXPECT_FALSE(dominance_leq(WeightVector::a({2, 0, 0}), WeightVector::a({1, 0, 1})));
  EXPECT_TRUE(dominance_leq(WeightVector::a({1, 0, 1}), WeightVector::a({2, 0, 0})));
  // BC dominance allows smaller totals, A dominance does not.
  EXPECT_TRUE(dominance_leq(WeightVector::bc({1, 0}), WeightVector::bc({2, 0})));
  EXPECT_FALSE(dominance_leq(WeightVector::a({1, 0}), WeightVector::a({2, 0})));
  EXPECT_THROW(dominance_leq(WeightVector::a({1, 0}), WeightVector::bc({1, 0})), DomainError);
}

TEST(Dominance, PartialOrderProperties) {
  std::mt19937 rng(7);
  for (int trial = 0; trial < 400; ++trial) {
    const WeightVector a = random_bc(rng, 3, 2);
    const WeightVector b = random_bc(rng, 3, 2);
    const WeightVector c = random_bc(rng, 3, 2);
    EXPECT_TRUE(dominance_leq(a, a));
    if (dominance_leq(a, b) && dominance_leq(b, a)) {
      EXPECT_EQ(a, b);
    }
    if (dominance_leq(a, b) && dominance_leq(b, c)) {
      EXPECT_TRUE(dominance_leq(a, c));
    }
    if (dominance_less(a, b)) {
      EXPECT_TRUE(extension_less(a, b));
    }
  }
}

TEST(WeylOrbit, SizesAgainstBruteForce) {
  EXPECT_EQ(weyl_orbit(WeightVector::bc({0, 0})).size(), 1u);
  EXPECT_EQ(weyl_orbit(WeightVector::bc({1, 0})).size(), 4u);
  EXPECT_EQ(weyl_orbit(WeightVector::bc({2, 1})).size(), 8u);
  std::mt19937 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const WeightVector mu = random_bc(rng, 3, 2);
    std::set<std::vector<int>> brute;
    std::vector<int> idx{0, 1, 2};
    do {
      for (int mask = 0; mask < 8; ++mask) {
        std::vector<int> v(3);
        for (int i = 0; i < 3; ++i) {
          v[i] = ((mask >> i) & 1 ? -1 : 1) * mu[idx[i]];
        }
        brute.insert(v);
      }
    } while (std::next_permutation(idx.begin(), idx.end()));
    EXPECT_EQ(weyl_orbit(mu).size(), brute.size());
  }
}

TEST(NaturalMap, RoundTripAndErrors) {
  const GrassmannShape s52(5, 2);
  EXPECT_EQ(natural_map(WeightVector::a({2, 1, 0, -1, -2}), s52), WeightVector::bc({2, 1}));
  EXPECT_EQ(flat_map(WeightVector::bc({2, 1}), s52), WeightVector::a({2, 1, 0, -1, -2}));
  EXPECT_THROW(natural_map(WeightVector::a({1, 0, 0}), GrassmannShape(3, 1)), DomainError);
  EXPECT_THROW(GrassmannShape(4, 3), DomainError);
}

TEST(NaturalMap, PreservesDominance) {
  const GrassmannShape shape(6, 3);
  std::mt19937 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const WeightVector a = random_bc(rng, 3, 2);
    const WeightVector b = random_bc(rng, 3, 2);
    const WeightVector fa = flat_map(a, shape);
    const WeightVector fb = flat_map(b, shape);
    EXPECT_EQ(natural_map(fa, shape), a);
    EXPECT_EQ(dominance_leq(fa, fb), dominance_leq(a, b)) << a.str() << " " << b.str();
  }
}

TEST(Spherical, Classification) {
  const GrassmannShape s(4, 1);
  EXPECT_TRUE(is_spherical(WeightVector::a({1, 0, 0, -1}), s));
  EXPECT_TRUE(is_spherical(WeightVector::a({0, 0, 0, 0}), s));
  EXPECT_FALSE(is_spherical(WeightVector::a({1, 0, 0, 0}), s));
  EXPECT_FALSE(is_spherical(WeightVector::a({1, 1, -1, -1}), s));
  EXPECT_TRUE(is_spherical(WeightVector::a({1, 1, -1, -1}), GrassmannShape(4, 2)));
  EXPECT_THROW(is_spherical(WeightVector::a({0, 1, 0, 0}), s), DomainError);
}

TEST(ConvexHull, Examples) {
  EXPECT_EQ(strict_convex_hull(WeightVector::bc({1})),
            std::vector<WeightVector>{WeightVector::bc({0})});
  EXPECT_TRUE(strict_convex_hull(WeightVector::bc({0})).empty());
  const auto c11 = strict_convex_hull(WeightVector::bc({1, 1}));
  EXPECT_NE(std::find(c11.begin(), c11.end(), WeightVector::bc({0, 0})), c11.end());
  for (const WeightVector& mu : {WeightVector::bc({2, 1}), WeightVector::bc({3, 0}),
                                 WeightVector::bc({2, 2, 1})}) {
    for (const WeightVector& nu : strict_convex_hull(mu)) {
      EXPECT_TRUE(dominance_less(nu, mu));
    }
  }
}

TEST(FundamentalSpherical, Examples) {
  EXPECT_EQ(fundamental_spherical(1, GrassmannShape(4, 2)), WeightVector::a({1, 0, 0, -1}));
  EXPECT_EQ(fundamental_spherical(2, GrassmannShape(4, 2)), WeightVector::a({1, 1, -1, -1}));
  EXPECT_EQ(fundamental_spherical(2, GrassmannShape(5, 2)), WeightVector::a({1, 1, 0, -1, -1}));
  EXPECT_THROW(fundamental_spherical(3, GrassmannShape(5, 2)), DomainError);
}

TEST(Downset, EnumeratesDominantWeightsBelow) {
  const auto d = dominant_downset(WeightVector::bc({2, 0}));
  const std::vector<WeightVector> expected{WeightVector::bc({0, 0}), WeightVector::bc({1, 0}),
                                           WeightVector::bc({1, 1}), WeightVector::bc({2, 0})};
  EXPECT_EQ(d, expected);
  // Brute force over a box for l = 3.
  const WeightVector lam = WeightVector::bc({2, 1, 1});
  std::vector<WeightVector> brute;
  for (int a = 0; a <= 2; ++a) {
    for (int b = 0; b <= a; ++b) {
      for (int c = 0; c <= b; ++c) {
        WeightVector mu = WeightVector::bc({a, b, c});
        if (dominance_leq(mu, lam)) {
          brute.push_back(mu);
        }
      }
    }
  }
  std::sort(brute.begin(), brute.end(), extension_less);
  EXPECT_EQ(dominant_downset(lam), brute);
}

TEST(Weights, DominantWeightsUpTo) {
  const std::vector<WeightVector> w = dominant_weights_up_to(2, 3);
  EXPECT_EQ(w.size(), 6u);
  EXPECT_EQ(w.front(), WeightVector::bc({0, 0}));
  for (std::size_t i = 1; i < w.size(); ++i) {
    EXPECT_TRUE(extension_less(w[i - 1], w[i]));
    EXPECT_TRUE(is_dominant(w[i]));
    EXPECT_LE(w[i].total(), 3);
  }
  EXPECT_EQ(dominant_weights_up_to(1, 4).size(), 5u);
}

}  // namespace
}  // namespace bcq
