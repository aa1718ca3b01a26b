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

#ifndef BCQ_WEIGHTS_HPP
#define BCQ_WEIGHTS_HPP

#include <compare>
#include <initializer_list>
#include <string>
#include <vector>

namespace bcq {

/// Lattice tag: A(n) is the GL(n) weight lattice Z^n, BC(l) the lattice of
/// the rank-l root system with Weyl group Z_2^l semidirect S_l.
enum class Lattice { A, BC };

struct WeightVector {
  std::vector<int> entries;
  Lattice lattice = Lattice::BC;

  static WeightVector bc(std::initializer_list<int> e) { return {std::vector<int>(e), Lattice::BC}; }
  static WeightVector a(std::initializer_list<int> e) { return {std::vector<int>(e), Lattice::A}; }

  int size() const { return static_cast<int>(entries.size()); }
  int operator[](int i) const { return entries[static_cast<std::size_t>(i)]; }
  /// Sum of the entries, written |lambda|.
  int total() const;
  std::string str() const;

  friend bool operator==(const WeightVector&, const WeightVector&) = default;
  friend auto operator<=>(const WeightVector&, const WeightVector&) = default;
};

/// Grassmannian shape U(n)/(U(n-l) x U(l)) with n >= 2 and 1 <= l <= n/2.
struct GrassmannShape {
  int n;
  int l;

  GrassmannShape(int n_, int l_);
};

/// A(n): weakly decreasing. BC(l): weakly decreasing and nonnegative.
bool is_dominant(const WeightVector& mu);

/// Dominance order: prefix sums compared, with equal totals required in type A.
bool dominance_leq(const WeightVector& mu, const WeightVector& lambda);
bool dominance_less(const WeightVector& mu, const WeightVector& lambda);

/// Fixed linear extension of dominance on BC weights: graded by total, then
/// lexicographic.
bool extension_less(const WeightVector& mu, const WeightVector& lambda);

/// Orbit under signed permutations, sorted.
std::vector<WeightVector> weyl_orbit(const WeightVector& mu);

/// Dominant representative of the BC orbit of mu.
WeightVector dominant_representative(const WeightVector& mu);

/// (lambda_1..lambda_l, 0..0, -lambda_l..-lambda_1) -> (lambda_1..lambda_l).
WeightVector natural_map(const WeightVector& lambda, const GrassmannShape& shape);
/// Inverse of natural_map. Accepts any BC vector, not only dominant ones.
WeightVector flat_map(const WeightVector& mu, const GrassmannShape& shape);

/// True iff the dominant A-weight lambda has the mirrored form
/// (lambda_1..lambda_l, 0..0, -lambda_l..-lambda_1).
bool is_spherical(const WeightVector& lambda, const GrassmannShape& shape);

/// { nu : w nu < mu for every w in W }, sorted.
std::vector<WeightVector> strict_convex_hull(const WeightVector& mu);

/// The spherical weight with natural image (1^r, 0^{l-r}).
WeightVector fundamental_spherical(int r, const GrassmannShape& shape);

/// All dominant BC weights mu <= lambda, ascending in the linear extension.
std::vector<WeightVector> dominant_downset(const WeightVector& lambda);

/// All dominant BC(l) weights with |mu| <= max_total, ascending in the linear extension.
std::vector<WeightVector> dominant_weights_up_to(int l, int max_total);

/// Parses "2,1,0" into entries.
std::vector<int> parse_entries(const std::string& text);

}  // namespace bcq

#endif  // BCQ_WEIGHTS_HPP
