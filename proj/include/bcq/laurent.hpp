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

#ifndef BCQ_LAURENT_HPP
#define BCQ_LAURENT_HPP

#include <array>
#include <compare>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <span>
#include <vector>

#include "bcq/scalar.hpp"

namespace bcq {

inline constexpr int kMaxVars = 8;

/// Dense exponent vector of a Laurent monomial in at most kMaxVars variables.
class Exponent {
 public:
  Exponent() = default;
  explicit Exponent(int vars);
  Exponent(std::initializer_list<int> e);
  static Exponent from(std::span<const int> e);

  int vars() const { return n_; }
  int operator[](int i) const { return e_[static_cast<std::size_t>(i)]; }
  void set(int i, int value) { e_[static_cast<std::size_t>(i)] = static_cast<std::int16_t>(value); }
  int total() const;
  std::vector<int> to_vector() const;

  Exponent operator+(const Exponent& o) const;
  Exponent operator-(const Exponent& o) const;
  Exponent operator-() const;
  Exponent scaled(int k) const;
  static Exponent unit(int vars, int i, int value = 1);

  friend bool operator==(const Exponent&, const Exponent&) = default;
  friend auto operator<=>(const Exponent&, const Exponent&) = default;

 private:
  std::array<std::int16_t, kMaxVars> e_{};
  std::int8_t n_ = 0;
};

/// Sparse Laurent polynomial: exponent vector -> nonzero coefficient.
template <class S>
class LaurentPoly {
 public:
  using Scalar = S;
  using Terms = std::map<Exponent, S>;

  explicit LaurentPoly(int vars = 0);
  static LaurentPoly constant(int vars, const S& c);
  static LaurentPoly monomial(const Exponent& e, const S& c = S(1));
  /// The single variable x_i (0-based).
  static LaurentPoly variable(int vars, int i);

  int vars() const { return vars_; }
  const Terms& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  S coeff(const Exponent& e) const;

  /// Adds c x^e, dropping the term if it cancels.
  void add_term(const Exponent& e, const S& c);

  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  LaurentPoly& operator*=(const LaurentPoly& o);
  LaurentPoly& operator*=(const S& c);
  LaurentPoly operator-() const;
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b) {
    LaurentPoly r(a);
    r *= b;
    return r;
  }
  friend LaurentPoly operator*(LaurentPoly a, const S& c) { return a *= c; }
  friend LaurentPoly operator*(const S& c, LaurentPoly a) { return a *= c; }
  friend bool operator==(const LaurentPoly& a, const LaurentPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  LaurentPoly pow(int k) const;
  /// x_i -> factor * x_i.
  LaurentPoly shifted(int i, const S& factor) const;
  /// x_i -> factor_i * x_i for every i.
  LaurentPoly rescaled(std::span<const S> factors) const;
  /// x_i -> x_i^{-1}.
  LaurentPoly inverted(int i) const;
  /// Variable i of *this becomes variable perm[i] of the result.
  LaurentPoly permuted(std::span<const int> perm) const;
  /// Coefficientwise complex conjugate.
  LaurentPoly conj() const;
  /// Multiplies by x^e.
  LaurentPoly times_monomial(const Exponent& e, const S& c = S(1)) const;

  double max_abs_coeff() const;
  int max_degree(int i) const;
  int min_degree(int i) const;

  template <class T>
  LaurentPoly<T> cast() const {
    LaurentPoly<T> out(vars_);
    for (const auto& [e, c] : terms_) {
      out.add_term(e, scalar_cast<T>(c));
    }
    return out;
  }

  template <class T>
  T evaluate(std::span<const T> x) const {
    T sum(0);
    for (const auto& [e, c] : terms_) {
      T term = scalar_cast<T>(c);
      for (int i = 0; i < vars_; ++i) {
        if (e[i] != 0) {
          term *= ipow(x[static_cast<std::size_t>(i)], e[i]);
        }
      }
      sum += term;
    }
    return sum;
  }

 private:
  int vars_;
  Terms terms_;
};

/// Exact quotient g with f = g * (1 - c x^a). Throws ConsistencyError when the
/// remainder is nonzero (exact scalars) or exceeds tol * max|f| (floating
/// scalars). Floating division runs in the direction that keeps |c|-powers
/// bounded.
template <class S>
LaurentPoly<S> divide_binomial(const LaurentPoly<S>& f, const S& c, const Exponent& a,
                               double tol = 1e-9);

/// max |coefficient of a - b|.
template <class S>
double max_abs_diff(const LaurentPoly<S>& a, const LaurentPoly<S>& b);

extern template class LaurentPoly<Rational>;
extern template class LaurentPoly<double>;
extern template class LaurentPoly<long double>;
extern template class LaurentPoly<Complex>;

}  // namespace bcq

#endif  // BCQ_LAURENT_HPP
