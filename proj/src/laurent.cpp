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

#include "bcq/laurent.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

namespace bcq {

Exponent::Exponent(int vars) : n_(static_cast<std::int8_t>(vars)) {
  if (vars < 0 || vars > kMaxVars) {
    throw DomainError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
}

Exponent::Exponent(std::initializer_list<int> e) : Exponent(static_cast<int>(e.size())) {
  int i = 0;
  for (int x : e) {
    set(i++, x);
  }
}

Exponent Exponent::from(std::span<const int> e) {
  Exponent out(static_cast<int>(e.size()));
  for (std::size_t i = 0; i < e.size(); ++i) {
    out.set(static_cast<int>(i), e[i]);
  }
  return out;
}

int Exponent::total() const {
  int s = 0;
  for (int i = 0; i < n_; ++i) {
    s += e_[static_cast<std::size_t>(i)];
  }
  return s;
}

std::vector<int> Exponent::to_vector() const {
  return std::vector<int>(e_.begin(), e_.begin() + n_);
}

Exponent Exponent::operator+(const Exponent& o) const {
  Exponent r(*this);
  for (int i = 0; i < n_; ++i) {
    r.set(i, (*this)[i] + o[i]);
  }
  return r;
}

Exponent Exponent::operator-(const Exponent& o) const {
  Exponent r(*this);
  for (int i = 0; i < n_; ++i) {
    r.set(i, (*this)[i] - o[i]);
  }
  return r;
}

Exponent Exponent::operator-() const { return scaled(-1); }

Exponent Exponent::scaled(int k) const {
  Exponent r(*this);
  for (int i = 0; i < n_; ++i) {
    r.set(i, (*this)[i] * k);
  }
  return r;
}

Exponent Exponent::unit(int vars, int i, int value) {
  Exponent r(vars);
  r.set(i, value);
  return r;
}

template <class S>
LaurentPoly<S>::LaurentPoly(int vars) : vars_(vars) {
  if (vars < 0 || vars > kMaxVars) {
    throw DomainError("at most " + std::to_string(kMaxVars) + " variables are supported");
  }
}

template <class S>
LaurentPoly<S> LaurentPoly<S>::constant(int vars, const S& c) {
  LaurentPoly p(vars);
  p.add_term(Exponent(vars), c);
  return p;
}

template <class S>
LaurentPoly<S> LaurentPoly<S>::monomial(const Exponent& e, const S& c) {
  LaurentPoly p(e.vars());
  p.add_term(e, c);
  return p;
}

template <class S>
LaurentPoly<S> LaurentPoly<S>::variable(int vars, int i) {
  return monomial(Exponent::unit(vars, i), S(1));
}

template <class S>
S LaurentPoly<S>::coeff(const Exponent& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? S(0) : it->second;
}

template <class S>
void LaurentPoly<S>::add_term(const Exponent& e, const S& c) {
  if (e.vars() != vars_) {
    throw DomainError("exponent arity mismatch");
  }
  if (scalar_is_zero(c)) {
    return;
  }
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (!inserted) {
    it->second += c;
    if (scalar_is_zero(it->second)) {
      terms_.erase(it);
    }
  }
}

template <class S>
LaurentPoly<S>& LaurentPoly<S>::operator+=(const LaurentPoly& o) {
  if (o.vars_ != vars_) {
    throw DomainError("polynomial arity mismatch");
  }
  for (const auto& [e, c] : o.terms_) {
    add_term(e, c);
  }
  return *this;
}

template <class S>
LaurentPoly<S>& LaurentPoly<S>::operator-=(const LaurentPoly& o) {
  if (o.vars_ != vars_) {
    throw DomainError("polynomial arity mismatch");
  }
  for (const auto& [e, c] : o.terms_) {
    add_term(e, -c);
  }
  return *this;
}

template <class S>
LaurentPoly<S>& LaurentPoly<S>::operator*=(const LaurentPoly& o) {
  if (o.vars_ != vars_) {
    throw DomainError("polynomial arity mismatch");
  }
  LaurentPoly r(vars_);
  for (const auto& [e1, c1] : terms_) {
    for (const auto& [e2, c2] : o.terms_) {
      r.add_term(e1 + e2, c1 * c2);
    }
  }
  terms_ = std::move(r.terms_);
  return *this;
}

template <class S>
LaurentPoly<S>& LaurentPoly<S>::operator*=(const S& c) {
  if (scalar_is_zero(c)) {
    terms_.clear();
    return *this;
  }
  for (auto& [e, v] : terms_) {
    v *= c;
  }
  return *this;
}

template <class S>
LaurentPoly<S> LaurentPoly<S>::operator-() const {
  LaurentPoly r(*this);
  for (auto& [e, v] : r.terms_) {
    v = -v;
  }
  return r;
}

template <class S>
LaurentPoly<S> LaurentPoly<S>::pow(int k) const {
  if (k < 0) {
    throw DomainError("negative polynomial power");
  }
  LaurentPoly result = constant(vars_, S(1));
  LaurentPoly base(*this);
  while (k > 0) {
    if (k & 1) {
      result *= base;
    }
    k >>= 1;
    if (k > 0) {
      base *= base;
    }
  }
  return result;
}

template <class S>
LaurentPoly<S> LaurentPoly<S>::shifted(int i, const S& factor) const {
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    r.terms_.emplace(e, c * ipow(factor, e[i]));
  }
  return r;
}

template <class S>
LaurentPoly<S> LaurentPoly<S>::rescaled(std::span<const S> factors) const {
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    S v = c;
    for (int i = 0; i < vars_; ++i) {
      if (e[i] != 0) {
        v *= ipow(factors[static_cast<std::size_t>(i)], e[i]);
      }
    }
    r.add_term(e, v);
  }
  return r;
}

template <class S>
LaurentPoly<S> LaurentPoly<S>::inverted(int i) const {
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f(e);
    f.set(i, -e[i]);
    r.terms_.emplace(f, c);
  }
  return r;
}

template <class S>
LaurentPoly<S> LaurentPoly<S>::permuted(std::span<const int> perm) const {
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    Exponent f(vars_);
    for (int i = 0; i < vars_; ++i) {
      f.set(perm[static_cast<std::size_t>(i)], e[i]);
    }
    r.terms_.emplace(f, c);
  }
  return r;
}

template <class S>
LaurentPoly<S> LaurentPoly<S>::conj() const {
  LaurentPoly r(vars_);
  for (const auto& [e, c] : terms_) {
    r.terms_.emplace(e, conjugate(c));
  }
  return r;
}

template <class S>
LaurentPoly<S> LaurentPoly<S>::times_monomial(const Exponent& m, const S& c) const {
  LaurentPoly r(vars_);
  if (scalar_is_zero(c)) {
    return r;
  }
  for (const auto& [e, v] : terms_) {
    r.terms_.emplace(e + m, v * c);
  }
  return r;
}

template <class S>
double LaurentPoly<S>::max_abs_coeff() const {
  double m = 0.0;
  for (const auto& [e, c] : terms_) {
    m = std::max(m, magnitude(c));
  }
  return m;
}

template <class S>
int LaurentPoly<S>::max_degree(int i) const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    m = first ? e[i] : std::max(m, e[i]);
    first = false;
  }
  return m;
}

template <class S>
int LaurentPoly<S>::min_degree(int i) const {
  int m = 0;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    m = first ? e[i] : std::min(m, e[i]);
    first = false;
  }
  return m;
}

namespace {

int floor_div(int a, int b) {
  int q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) {
    --q;
  }
  return q;
}

}  // namespace

template <class S>
LaurentPoly<S> divide_binomial(const LaurentPoly<S>& f, const S& c, const Exponent& a,
                               double tol) {
  int p = -1;
  for (int i = 0; i < a.vars(); ++i) {
    if (a[i] != 0) {
      p = i;
      break;
    }
  }
  if (p < 0 || scalar_is_zero(c)) {
    throw DomainError("division by a constant binomial");
  }
  if (a[p] < 0) {
    // 1 - c x^a = (-c x^a)(1 - c^{-1} x^{-a})
    const S cinv = S(1) / c;
    return divide_binomial(f.times_monomial(-a, -cinv), cinv, -a, tol);
  }
  std::map<Exponent, std::map<int, S>> lines;
  for (const auto& [e, v] : f.terms()) {
    const int t = floor_div(e[p], a[p]);
    lines[e - a.scaled(t)].emplace(t, v);
  }
  const bool forward = is_exact_v<S> || magnitude(c) <= 1.0;
  const double scale = f.max_abs_coeff();
  LaurentPoly<S> g(f.vars());
  for (const auto& [key, coeffs] : lines) {
    const int lo = coeffs.begin()->first;
    const int hi = coeffs.rbegin()->first;
    auto fcoef = [&](int t) {
      auto it = coeffs.find(t);
      return it == coeffs.end() ? S(0) : it->second;
    };
    std::vector<S> gl(static_cast<std::size_t>(hi - lo), S(0));
    S residual(0);
    if (hi == lo) {
      residual = fcoef(lo);
    } else if (forward) {
      S prev(0);
      for (int t = lo; t < hi; ++t) {
        prev = fcoef(t) + c * prev;
        gl[static_cast<std::size_t>(t - lo)] = prev;
      }
      residual = fcoef(hi) + c * prev;
    } else {
      S next = -fcoef(hi) / c;
      gl[static_cast<std::size_t>(hi - 1 - lo)] = next;
      for (int t = hi - 1; t > lo; --t) {
        next = (next - fcoef(t)) / c;
        gl[static_cast<std::size_t>(t - 1 - lo)] = next;
      }
      residual = fcoef(lo) - next;
    }
    const bool ok = is_exact_v<S> ? scalar_is_zero(residual) : magnitude(residual) <= tol * scale;
    if (!ok) {
      throw ConsistencyError("nonzero remainder in binomial division");
    }
    for (int t = lo; t < hi; ++t) {
      g.add_term(key + a.scaled(t), gl[static_cast<std::size_t>(t - lo)]);
    }
  }
  return g;
}

template <class S>
double max_abs_diff(const LaurentPoly<S>& a, const LaurentPoly<S>& b) {
  return (a - b).max_abs_coeff();
}

template class LaurentPoly<Rational>;
template class LaurentPoly<double>;
template class LaurentPoly<long double>;
template class LaurentPoly<Complex>;

#define BCQ_INSTANTIATE(S)                                                                   \
  template LaurentPoly<S> divide_binomial(const LaurentPoly<S>&, const S&, const Exponent&, \
                                          double);                                          \
  template double max_abs_diff(const LaurentPoly<S>&, const LaurentPoly<S>&);
BCQ_INSTANTIATE(Rational)
BCQ_INSTANTIATE(double)
BCQ_INSTANTIATE(long double)
BCQ_INSTANTIATE(Complex)
#undef BCQ_INSTANTIATE

}  // namespace bcq
