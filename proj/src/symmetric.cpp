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

#include "bcq/symmetric.hpp"

#include <algorithm>
#include <numeric>
#include <string>

namespace bcq {

namespace {

bool is_partition_exponent(const Exponent& e) {
  for (int i = 0; i < e.vars(); ++i) {
    if (e[i] < 0 || (i + 1 < e.vars() && e[i] < e[i + 1])) {
      return false;
    }
  }
  return true;
}

WeightVector to_weight(const Exponent& e, Lattice lattice) { return {e.to_vector(), lattice}; }

template <class S>
void require_invariant(const LaurentPoly<S>& p, Symmetry g) {
  if (!is_invariant(p, g)) {
    throw DomainError(g == Symmetry::W ? "polynomial is not W-invariant"
                                       : "polynomial is not symmetric");
  }
}

void fill_tableaux(const std::vector<int>& shape, int n, std::vector<std::vector<int>>& t,
                   std::size_t row, int col, std::vector<int>& content,
                   std::map<Exponent, long>& acc) {
  if (row == shape.size()) {
    acc[Exponent::from(content)] += 1;
    return;
  }
  if (col == shape[row]) {
    fill_tableaux(shape, n, t, row + 1, 0, content, acc);
    return;
  }
  int lo = col > 0 ? t[row][col - 1] : 0;
  if (row > 0) {
    lo = std::max(lo, t[row - 1][col] + 1);
  }
  // Remaining rows below need strictly larger entries in this column.
  int rows_below = 0;
  for (std::size_t r = row + 1; r < shape.size(); ++r) {
    if (shape[r] > col) {
      ++rows_below;
    }
  }
  for (int v = lo; v < n - rows_below; ++v) {
    t[row][col] = v;
    ++content[v];
    fill_tableaux(shape, n, t, row, col + 1, content, acc);
    --content[v];
  }
}

}  // namespace

template <class S>
LaurentPoly<S> orbit_sum_W(const WeightVector& lambda) {
  if (!is_dominant(lambda) || lambda.lattice != Lattice::BC) {
    throw DomainError("orbit sum needs a dominant BC weight, got " + lambda.str());
  }
  LaurentPoly<S> p(lambda.size());
  for (const WeightVector& mu : weyl_orbit(lambda)) {
    p.add_term(Exponent::from(mu.entries), S(1));
  }
  return p;
}

template <class S>
LaurentPoly<S> monomial_symmetric(const WeightVector& lambda) {
  std::vector<int> e(lambda.entries);
  for (int x : e) {
    if (x < 0) {
      throw DomainError("monomial symmetric polynomial needs nonnegative entries, got " +
                        lambda.str());
    }
  }
  std::sort(e.begin(), e.end());
  LaurentPoly<S> p(lambda.size());
  do {
    p.add_term(Exponent::from(e), S(1));
  } while (std::next_permutation(e.begin(), e.end()));
  return p;
}

template <class S>
LaurentPoly<S> elementary_symmetric(int r, int l) {
  if (r < 0 || r > l) {
    throw DomainError("elementary symmetric index out of range");
  }
  std::vector<int> e(static_cast<std::size_t>(l), 0);
  std::fill(e.begin(), e.begin() + r, 1);
  return monomial_symmetric<S>({e, Lattice::BC});
}

template <class S>
LaurentPoly<S> schur(const WeightVector& lambda) {
  if (!is_dominant(lambda)) {
    throw DomainError("Schur polynomial needs a dominant weight, got " + lambda.str());
  }
  const int n = lambda.size();
  const int m = n > 0 ? std::max(0, -lambda[n - 1]) : 0;
  std::vector<int> shifted(lambda.entries);
  for (int i = 0; i < n; ++i) {
    shifted[i] += m + (n - 1 - i);
  }
  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  LaurentPoly<S> alt(n);
  do {
    int inversions = 0;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 1; j < n; ++j) {
        inversions += perm[i] > perm[j];
      }
    }
    Exponent e(n);
    for (int i = 0; i < n; ++i) {
      e.set(perm[i], shifted[i] - (n - 1 - perm[i]));
    }
    alt.add_term(e, inversions % 2 ? S(-1) : S(1));
  } while (std::next_permutation(perm.begin(), perm.end()));
  // alt is now a_{lambda+rho} / z^rho; divide by prod_{i<j} (1 - z_j / z_i).
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      Exponent a(n);
      a.set(i, -1);
      a.set(j, 1);
      alt = divide_binomial(alt, S(1), a);
    }
  }
  Exponent twist(n);
  for (int i = 0; i < n; ++i) {
    twist.set(i, -m);
  }
  return alt.times_monomial(twist);
}

template <class S>
LaurentPoly<S> schur_tableaux(const WeightVector& lambda) {
  if (!is_dominant(lambda)) {
    throw DomainError("Schur polynomial needs a dominant weight, got " + lambda.str());
  }
  const int n = lambda.size();
  const int m = n > 0 ? std::max(0, -lambda[n - 1]) : 0;
  std::vector<int> shape;
  for (int x : lambda.entries) {
    if (x + m > 0) {
      shape.push_back(x + m);
    }
  }
  std::vector<std::vector<int>> t;
  for (int len : shape) {
    t.emplace_back(static_cast<std::size_t>(len), 0);
  }
  std::vector<int> content(static_cast<std::size_t>(n), 0);
  std::map<Exponent, long> acc;
  fill_tableaux(shape, n, t, 0, 0, content, acc);
  Exponent twist(n);
  for (int i = 0; i < n; ++i) {
    twist.set(i, -m);
  }
  LaurentPoly<S> p(n);
  for (const auto& [e, count] : acc) {
    p.add_term(e + twist, S(count));
  }
  return p;
}

template <class S>
bool is_invariant(const LaurentPoly<S>& p, Symmetry g, double tol) {
  const int l = p.vars();
  const double bound = is_exact_v<S> ? 0.0 : tol * std::max(1.0, p.max_abs_coeff());
  auto same = [&](const LaurentPoly<S>& image) {
    if constexpr (is_exact_v<S>) {
      return image == p;
    } else {
      return max_abs_diff(image, p) <= bound;
    }
  };
  for (int i = 0; i + 1 < l; ++i) {
    std::vector<int> perm(static_cast<std::size_t>(l));
    std::iota(perm.begin(), perm.end(), 0);
    std::swap(perm[i], perm[i + 1]);
    if (!same(p.permuted(perm))) {
      return false;
    }
  }
  if (g == Symmetry::W && l > 0 && !same(p.inverted(0))) {
    return false;
  }
  return true;
}

template <class S>
std::map<WeightVector, S> expand_in_basis(const LaurentPoly<S>& p, Symmetry g) {
  require_invariant(p, g);
  std::map<WeightVector, S> out;
  for (const auto& [e, c] : p.terms()) {
    if (is_partition_exponent(e)) {
      out.emplace(to_weight(e, Lattice::BC), c);
    } else if (g == Symmetry::S) {
      for (int i = 0; i < e.vars(); ++i) {
        if (e[i] < 0) {
          throw DomainError("symmetric Laurent polynomial with negative exponents has no "
                            "monomial-symmetric expansion");
        }
      }
    }
  }
  return out;
}

template <class S>
LaurentPoly<S> from_basis(const std::map<WeightVector, S>& coeffs, Symmetry g, int l) {
  LaurentPoly<S> p(l);
  for (const auto& [mu, c] : coeffs) {
    p += (g == Symmetry::W ? orbit_sum_W<S>(mu) : monomial_symmetric<S>(mu)) * c;
  }
  return p;
}

template <class S>
LaurentPoly<S> generator(int i, int l, Symmetry g) {
  if (i < 1 || i > l) {
    throw DomainError("generator index out of range");
  }
  std::vector<int> e(static_cast<std::size_t>(l), 0);
  std::fill(e.begin(), e.begin() + i, 1);
  const WeightVector w{e, Lattice::BC};
  return g == Symmetry::W ? orbit_sum_W<S>(w) : monomial_symmetric<S>(w);
}

template <class S>
LaurentPoly<S> to_generator_coords(const LaurentPoly<S>& p, Symmetry g) {
  require_invariant(p, g);
  const int l = p.vars();
  std::vector<LaurentPoly<S>> gens;
  for (int i = 1; i <= l; ++i) {
    gens.push_back(generator<S>(i, l, g));
  }
  std::map<Exponent, LaurentPoly<S>> products;
  LaurentPoly<S> rem = p;
  LaurentPoly<S> out(l);
  const double scale = std::max(1.0, p.max_abs_coeff());
  while (true) {
    // Largest dominant exponent in the graded-lexicographic extension.
    const Exponent* lead = nullptr;
    WeightVector lead_w;
    for (const auto& [e, c] : rem.terms()) {
      if (!is_partition_exponent(e)) {
        continue;
      }
      WeightVector w = to_weight(e, Lattice::BC);
      if (lead == nullptr || extension_less(lead_w, w)) {
        lead = &e;
        lead_w = std::move(w);
      }
    }
    if (lead == nullptr) {
      break;
    }
    const Exponent lead_e = *lead;
    const S c = rem.coeff(lead_e);
    Exponent a(l);
    for (int i = 0; i < l; ++i) {
      a.set(i, lead_w[i] - (i + 1 < l ? lead_w[i + 1] : 0));
    }
    auto it = products.find(a);
    if (it == products.end()) {
      LaurentPoly<S> prod = LaurentPoly<S>::constant(l, S(1));
      for (int i = 0; i < l; ++i) {
        if (a[i] > 0) {
          prod *= gens[static_cast<std::size_t>(i)].pow(a[i]);
        }
      }
      it = products.emplace(a, std::move(prod)).first;
    }
    rem -= it->second * c;
    // The leading coefficient of the product is exactly one, so the leading
    // term cancels exactly even in floating point.
    rem.add_term(lead_e, -rem.coeff(lead_e));
    out.add_term(a, c);
  }
  if (!rem.is_zero()) {
    const bool ok = !is_exact_v<S> && rem.max_abs_coeff() <= 1e-9 * scale;
    if (!ok) {
      throw DomainError("polynomial is not in the span of the generators");
    }
  }
  return out;
}

template <class S>
LaurentPoly<S> from_generator_coords(const LaurentPoly<S>& y, Symmetry g) {
  const int l = y.vars();
  std::vector<LaurentPoly<S>> gens;
  for (int i = 1; i <= l; ++i) {
    gens.push_back(generator<S>(i, l, g));
  }
  LaurentPoly<S> out(l);
  for (const auto& [a, c] : y.terms()) {
    LaurentPoly<S> prod = LaurentPoly<S>::constant(l, c);
    for (int i = 0; i < l; ++i) {
      if (a[i] < 0) {
        throw DomainError("generator coordinates must be a polynomial");
      }
      if (a[i] > 0) {
        prod *= gens[static_cast<std::size_t>(i)].pow(a[i]);
      }
    }
    out += prod;
  }
  return out;
}

template <class S>
std::map<WeightVector, S> expand_in_schur(const LaurentPoly<S>& p) {
  require_invariant(p, Symmetry::S);
  std::map<WeightVector, S> out;
  LaurentPoly<S> rem = p;
  const double scale = std::max(1.0, p.max_abs_coeff());
  while (!rem.is_zero()) {
    const auto last = std::prev(rem.terms().end());
    const Exponent lead = last->first;
    const S c = last->second;
    WeightVector w = to_weight(lead, Lattice::A);
    if (!is_dominant(w)) {
      if (!is_exact_v<S> && magnitude(c) <= 1e-9 * scale) {
        rem.add_term(lead, -c);
        continue;
      }
      throw ConsistencyError("leading exponent of a symmetric polynomial is not dominant");
    }
    rem -= schur<S>(w) * c;
    rem.add_term(lead, -rem.coeff(lead));
    out.emplace(std::move(w), c);
  }
  return out;
}

long weyl_dimension(const WeightVector& lambda) {
  const int n = lambda.size();
  Integer num(1);
  Integer den(1);
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      num *= lambda[i] - lambda[j] + j - i;
      den *= j - i;
    }
  }
  return (num / den).convert_to<long>();
}

#define BCQ_SYMMETRIC_INSTANTIATE(S)                                                     \
  template LaurentPoly<S> orbit_sum_W<S>(const WeightVector&);                           \
  template LaurentPoly<S> monomial_symmetric<S>(const WeightVector&);                    \
  template LaurentPoly<S> elementary_symmetric<S>(int, int);                             \
  template LaurentPoly<S> schur<S>(const WeightVector&);                                 \
  template LaurentPoly<S> schur_tableaux<S>(const WeightVector&);                        \
  template bool is_invariant<S>(const LaurentPoly<S>&, Symmetry, double);                \
  template std::map<WeightVector, S> expand_in_basis<S>(const LaurentPoly<S>&, Symmetry); \
  template LaurentPoly<S> from_basis<S>(const std::map<WeightVector, S>&, Symmetry, int); \
  template LaurentPoly<S> generator<S>(int, int, Symmetry);                              \
  template LaurentPoly<S> to_generator_coords<S>(const LaurentPoly<S>&, Symmetry);       \
  template LaurentPoly<S> from_generator_coords<S>(const LaurentPoly<S>&, Symmetry);     \
  template std::map<WeightVector, S> expand_in_schur<S>(const LaurentPoly<S>&);
BCQ_SYMMETRIC_INSTANTIATE(Rational)
BCQ_SYMMETRIC_INSTANTIATE(double)
BCQ_SYMMETRIC_INSTANTIATE(long double)
BCQ_SYMMETRIC_INSTANTIATE(Complex)
#undef BCQ_SYMMETRIC_INSTANTIATE

}  // namespace bcq
