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

#include "bcq/branching.hpp"

#include <algorithm>
#include <string>

#include "bcq/errors.hpp"
#include "bcq/laurent.hpp"
#include "bcq/symmetric.hpp"

namespace bcq {

namespace {

WeightVector block(const Exponent& e, int from, int to) {
  WeightVector w{{}, Lattice::A};
  for (int i = from; i < to; ++i) {
    w.entries.push_back(e[i]);
  }
  return w;
}

// Tableau sum with the determinant twist applied by hand; much faster than
// the alternant quotient for six variables.
LaurentPoly<Rational> twisted_schur(const WeightVector& lambda) {
  const int shift = std::max(0, -lambda.entries.back());
  WeightVector lifted = lambda;
  for (int& x : lifted.entries) {
    x += shift;
  }
  Exponent twist(lambda.size());
  for (int i = 0; i < lambda.size(); ++i) {
    twist.set(i, -shift);
  }
  return schur_tableaux<Rational>(lifted).times_monomial(twist);
}

using ProductCache = std::map<std::pair<WeightVector, WeightVector>, LaurentPoly<Rational>>;

// s_mu(z_1..z_m) s_nu(z_{m+1}..z_n) as a polynomial in n variables.
const LaurentPoly<Rational>& block_product(const WeightVector& mu, const WeightVector& nu,
                                           ProductCache& cache) {
  const auto found = cache.find({mu, nu});
  if (found != cache.end()) {
    return found->second;
  }
  const int m = mu.size();
  const int n = m + nu.size();
  const LaurentPoly<Rational> a = twisted_schur(mu);
  const LaurentPoly<Rational> b = twisted_schur(nu);
  LaurentPoly<Rational> out(n);
  for (const auto& [ea, ca] : a.terms()) {
    for (const auto& [eb, cb] : b.terms()) {
      Exponent e(n);
      for (int i = 0; i < m; ++i) {
        e.set(i, ea[i]);
      }
      for (int i = 0; i < nu.size(); ++i) {
        e.set(m + i, eb[i]);
      }
      out.add_term(e, ca * cb);
    }
  }
  return cache.emplace(std::make_pair(mu, nu), std::move(out)).first->second;
}

void require_a_weight(const WeightVector& lambda, const GrassmannShape& shape) {
  if (lambda.lattice != Lattice::A || lambda.size() != shape.n || !is_dominant(lambda)) {
    throw DomainError("branching needs a dominant A(" + std::to_string(shape.n) +
                      ") weight, got " + lambda.str());
  }
}

BranchingTable branching_with_cache(const WeightVector& lambda, const GrassmannShape& shape,
                                    ProductCache& cache) {
  require_a_weight(lambda, shape);
  const int split = shape.n - shape.l;
  LaurentPoly<Rational> rest = twisted_schur(lambda);
  BranchingTable table;
  while (!rest.is_zero()) {
    const auto& [lead, c] = *rest.terms().rbegin();
    const WeightVector mu = block(lead, 0, split);
    const WeightVector nu = block(lead, split, shape.n);
    if (!is_dominant(mu) || !is_dominant(nu) || c <= 0 || denominator(c) != 1) {
      throw ConsistencyError("branching elimination hit a non-Schur leading term " +
                             mu.str() + nu.str());
    }
    const Rational mult = c;
    table[{mu, nu}] = numerator(mult).convert_to<long>();
    rest -= block_product(mu, nu, cache) * mult;
  }
  return table;
}

long trivial_in(const BranchingTable& table, const GrassmannShape& shape) {
  const WeightVector mu{std::vector<int>(static_cast<std::size_t>(shape.n - shape.l), 0),
                        Lattice::A};
  const WeightVector nu{std::vector<int>(static_cast<std::size_t>(shape.l), 0), Lattice::A};
  const auto it = table.find({mu, nu});
  return it == table.end() ? 0 : it->second;
}

}  // namespace

BranchingTable branching_coeffs(const WeightVector& lambda, const GrassmannShape& shape) {
  ProductCache cache;
  return branching_with_cache(lambda, shape, cache);
}

long trivial_multiplicity(const WeightVector& lambda, const GrassmannShape& shape) {
  return trivial_in(branching_coeffs(lambda, shape), shape);
}

VerificationReport branching_dimension_check(const WeightVector& lambda,
                                             const GrassmannShape& shape) {
  const Stopwatch watch;
  long total = 0;
  for (const auto& [key, c] : branching_coeffs(lambda, shape)) {
    total += c * weyl_dimension(key.first) * weyl_dimension(key.second);
  }
  const long expected = weyl_dimension(lambda);
  VerificationReport rep;
  rep.identity = "branching_dimension";
  rep.params = {{"n", shape.n}, {"l", shape.l}, {"lambda", lambda.str()}};
  rep.exact = true;
  rep.passed = total == expected;
  rep.detail = std::to_string(total) + " vs " + std::to_string(expected);
  rep.runtime_ms = watch.elapsed_ms();
  return rep;
}

std::vector<WeightVector> bounded_dominant_weights(int n, int bound) {
  if (n < 1 || bound < 0) {
    throw DomainError("bounded_dominant_weights needs n >= 1 and bound >= 0");
  }
  std::vector<WeightVector> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int upper) -> void {
    if (static_cast<int>(cur.size()) == n) {
      out.push_back({cur, Lattice::A});
      return;
    }
    for (int v = -bound; v <= upper; ++v) {
      cur.push_back(v);
      self(self, v);
      cur.pop_back();
    }
  };
  rec(rec, bound);
  return out;
}

VerificationReport gelfand_check(const GrassmannShape& shape, int entry_bound) {
  const Stopwatch watch;
  VerificationReport rep;
  rep.identity = "gelfand_property";
  rep.params = {{"n", shape.n}, {"l", shape.l}, {"entry_bound", entry_bound}};
  rep.exact = true;
  rep.passed = true;
  int checked = 0;
  int spherical = 0;
  ProductCache cache;
  for (const WeightVector& lambda : bounded_dominant_weights(shape.n, entry_bound)) {
    const long m = trivial_in(branching_with_cache(lambda, shape, cache), shape);
    const bool sph = is_spherical(lambda, shape);
    ++checked;
    spherical += sph ? 1 : 0;
    if (m > 1 || (m == 1) != sph) {
      rep.passed = false;
      rep.detail = "lambda " + lambda.str() + " has trivial multiplicity " + std::to_string(m);
      break;
    }
  }
  if (rep.passed) {
    rep.detail = std::to_string(checked) + " weights, " + std::to_string(spherical) + " spherical";
  }
  rep.runtime_ms = watch.elapsed_ms();
  return rep;
}

}  // namespace bcq
