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

#include "bcq/koornwinder.hpp"

#include <map>
#include <utility>

#include "bcq/awmeasure.hpp"
#include "bcq/errors.hpp"
#include "bcq/symmetric.hpp"

namespace bcq {

namespace {

// u x^B (1 - c x^a) with the first nonzero entry of a made positive.
template <class S>
struct RawFactor {
  S u;
  Exponent b;
  S c;
  Exponent a;
};

template <class S>
RawFactor<S> canonical(const S& c, const Exponent& a) {
  int lead = 0;
  for (int i = 0; i < a.vars(); ++i) {
    if (a[i] != 0) {
      lead = a[i];
      break;
    }
  }
  if (lead > 0) {
    return {S(1), Exponent(a.vars()), c, a};
  }
  return {S(-c), a, S(S(1) / c), -a};
}

template <class S>
LaurentPoly<S> binomial(int l, const S& c, const Exponent& a) {
  LaurentPoly<S> p = LaurentPoly<S>::constant(l, S(1));
  p.add_term(a, S(-c));
  return p;
}

// c0 + c1 x^a
template <class S>
LaurentPoly<S> linear(int l, const S& c0, const S& c1, const Exponent& a) {
  LaurentPoly<S> p = LaurentPoly<S>::constant(l, c0);
  p.add_term(a, c1);
  return p;
}

template <class S>
bool close_to(const S& a, const S& b) {
  if constexpr (is_exact_v<S>) {
    return a == b;
  } else {
    return magnitude(S(a - b)) < 1e-10 * (1.0 + magnitude(b));
  }
}

template <class S>
void require_dominant(const WeightVector& lambda) {
  if (lambda.lattice != Lattice::BC || lambda.size() < 1 || lambda.size() > kMaxVars ||
      !is_dominant(lambda)) {
    throw DomainError("lambda must be a dominant BC weight with 1.." + std::to_string(kMaxVars) +
                      " entries: " + lambda.str());
  }
}

template <class S>
nlohmann::json scalar_json(const S& x) {
  if constexpr (std::is_same_v<S, Rational>) {
    return x.str();
  } else if constexpr (std::is_same_v<S, Complex>) {
    return nlohmann::json::array({x.real(), x.imag()});
  } else {
    return static_cast<double>(x);
  }
}

template <class S>
nlohmann::json params_json_impl(const KoornwinderParams<S>& p) {
  nlohmann::json t = nlohmann::json::array();
  for (const S& ti : p.t) {
    t.push_back(scalar_json(ti));
  }
  return {{"t", t}, {"q", scalar_json(p.q)}, {"k", p.k}};
}

}  // namespace

nlohmann::json params_json(const KoornwinderParams<Rational>& p) { return params_json_impl(p); }
nlohmann::json params_json(const KoornwinderParams<double>& p) { return params_json_impl(p); }
nlohmann::json params_json(const KoornwinderParams<long double>& p) { return params_json_impl(p); }
nlohmann::json params_json(const KoornwinderParams<Complex>& p) { return params_json_impl(p); }

template <class S>
KoornwinderOperator<S>::KoornwinderOperator(int l, const KoornwinderParams<S>& params)
    : l_(l), params_(params) {
  params_.validate();
  if (l < 1 || l > kMaxVars) {
    throw DomainError("number of variables out of range");
  }
  const S q = params_.q;
  const S t = params_.t_base();
  const S one(1);

  struct Side {
    LaurentPoly<S> numerator;
    std::vector<RawFactor<S>> factors;
  };
  auto build = [&](int j, bool plus) {
    const Exponent ej = Exponent::unit(l, j);
    const Exponent ej2 = Exponent::unit(l, j, 2);
    Side side{LaurentPoly<S>::constant(l, one), {}};
    for (const S& tm : params_.t) {
      side.numerator *= plus ? linear(l, one, S(-tm), ej) : linear(l, tm, S(-one), ej);
    }
    side.factors.push_back(canonical(one, ej2));
    if (plus) {
      side.factors.push_back(canonical(q, ej2));
    } else {
      // q - x_j^2 = q (1 - q^{-1} x_j^2)
      RawFactor<S> f = canonical(S(one / q), ej2);
      f.u *= q;
      side.factors.push_back(f);
    }
    for (int i = 0; i < l; ++i) {
      if (i == j) {
        continue;
      }
      const Exponent sum = ej + Exponent::unit(l, i);
      const Exponent diff = ej - Exponent::unit(l, i);
      if (plus) {
        side.numerator *= linear(l, one, S(-t), sum);
        side.numerator *= linear(l, one, S(-t), diff);
      } else {
        side.numerator *= linear(l, t, S(-one), sum);
        side.numerator *= linear(l, t, S(-one), diff);
      }
      side.factors.push_back(canonical(one, sum));
      side.factors.push_back(canonical(one, diff));
    }
    return side;
  };

  std::vector<Side> sides;
  for (int j = 0; j < l; ++j) {
    sides.push_back(build(j, true));
    sides.push_back(build(j, false));
  }
  auto same = [](const RawFactor<S>& f, const Binomial& g) { return f.a == g.a && f.c == g.c; };
  for (const Side& side : sides) {
    for (const RawFactor<S>& f : side.factors) {
      bool seen = false;
      for (const Binomial& g : den_) {
        seen = seen || same(f, g);
      }
      if (!seen) {
        den_.push_back({f.c, f.a});
      }
    }
  }
  for (std::size_t s = 0; s < sides.size(); ++s) {
    const Side& side = sides[s];
    S unit(1);
    Exponent shift(l);
    for (const RawFactor<S>& f : side.factors) {
      unit *= f.u;
      shift = shift + f.b;
    }
    LaurentPoly<S> cofactor = side.numerator.times_monomial(-shift, S(one / unit));
    for (const Binomial& g : den_) {
      bool own = false;
      for (const RawFactor<S>& f : side.factors) {
        own = own || same(f, g);
      }
      if (!own) {
        cofactor *= binomial(l, g.c, g.a);
      }
    }
    (s % 2 == 0 ? cofactor_plus_ : cofactor_minus_).push_back(std::move(cofactor));
  }
}

template <class S>
LaurentPoly<S> KoornwinderOperator<S>::apply(const LaurentPoly<S>& p) const {
  if (p.vars() != l_) {
    throw DomainError("polynomial has the wrong number of variables");
  }
  const S q = params_.q;
  const S q_inv = S(1) / q;
  LaurentPoly<S> num(l_);
  for (int j = 0; j < l_; ++j) {
    num += cofactor_plus_[static_cast<std::size_t>(j)] * (p.shifted(j, q) - p);
    num += cofactor_minus_[static_cast<std::size_t>(j)] * (p.shifted(j, q_inv) - p);
  }
  for (const Binomial& g : den_) {
    num = divide_binomial(num, g.c, g.a);
  }
  return num;
}

template <class S>
LaurentPoly<S> dk_apply(const LaurentPoly<S>& p, const KoornwinderParams<S>& params) {
  return KoornwinderOperator<S>(p.vars(), params).apply(p);
}

template <class S>
S eigenvalue(const WeightVector& lambda, const KoornwinderParams<S>& params) {
  require_dominant<S>(lambda);
  const int l = lambda.size();
  const S q = params.q;
  const S t = params.t_base();
  const S pre = params.product() / q;
  S sum(0);
  for (int j = 1; j <= l; ++j) {
    const int lj = lambda[j - 1];
    sum += pre * ipow(t, 2 * l - j - 1) * (ipow(q, lj) - S(1));
    sum += ipow(t, j - 1) * (ipow(q, -lj) - S(1));
  }
  return sum;
}

namespace {

template <class S>
LaurentPoly<S> triangular_solve(const WeightVector& lambda, const KoornwinderParams<S>& params) {
  const int l = lambda.size();
  const std::vector<WeightVector> basis = dominant_downset(lambda);
  const KoornwinderOperator<S> op(l, params);

  // d[mu][nu]: coefficient of m~_nu in D_K m~_mu.
  std::map<WeightVector, std::map<WeightVector, S>> d;
  for (const WeightVector& mu : basis) {
    const LaurentPoly<S> image = op.apply(orbit_sum_W<S>(mu));
    auto& row = d[mu];
    for (const auto& [e, c] : image.terms()) {
      const WeightVector nu{e.to_vector(), Lattice::BC};
      if (!is_dominant(nu)) {
        continue;
      }
      if (!dominance_leq(nu, mu)) {
        throw ConsistencyError("D_K m~_" + mu.str() + " has support at " + nu.str() +
                               " outside the dominance downset");
      }
      row[nu] = c;
    }
  }

  const S e_lambda = eigenvalue(lambda, params);
  std::map<WeightVector, S> coeffs;
  coeffs[lambda] = S(1);
  for (auto it = basis.rbegin(); it != basis.rend(); ++it) {
    const WeightVector& nu = *it;
    if (nu == lambda) {
      continue;
    }
    S rhs(0);
    for (const auto& [mu, c_mu] : coeffs) {
      const auto& row = d[mu];
      if (auto f = row.find(nu); f != row.end()) {
        rhs -= c_mu * f->second;
      }
    }
    const auto& own = d[nu];
    const auto diag_it = own.find(nu);
    const S diag = diag_it == own.end() ? S(0) : diag_it->second;
    if (close_to(diag, e_lambda)) {
      throw EigenvalueCollision("eigenvalue of " + nu.str() + " collides with E_" +
                                lambda.str() + "; use the Gram-Schmidt mode");
    }
    const S c = rhs / S(diag - e_lambda);
    if (!scalar_is_zero(c)) {
      coeffs[nu] = c;
    }
  }
  return from_basis(coeffs, Symmetry::W, l);
}

}  // namespace

template <class S>
LaurentPoly<S> koornwinder_poly(const WeightVector& lambda, const KoornwinderParams<S>& params,
                                OperatorMode mode) {
  require_dominant<S>(lambda);
  params.validate();
  if (mode == OperatorMode::TriangularSolve) {
    return triangular_solve(lambda, params);
  }
  if constexpr (is_exact_v<S>) {
    throw DomainError("the Gram-Schmidt mode needs floating scalars");
  } else if constexpr (std::is_same_v<S, Complex>) {
    return koornwinder_poly_gram(lambda, params);
  } else {
    return koornwinder_poly_gram(lambda, params.template cast<Complex>()).template cast<S>();
  }
}

template <class S>
VerificationReport check_eigen_identity(const WeightVector& lambda,
                                        const KoornwinderParams<S>& params) {
  Stopwatch clock;
  VerificationReport report;
  report.identity = "koornwinder_eigen_identity";
  report.params = params_json(params);
  report.params["lambda"] = lambda.entries;
  report.exact = is_exact_v<S>;
  const LaurentPoly<S> p = koornwinder_poly(lambda, params);
  const LaurentPoly<S> residual =
      dk_apply(p, params) - eigenvalue(lambda, params) * p;
  if constexpr (is_exact_v<S>) {
    report.passed = residual.is_zero();
    if (!report.passed) {
      report.residual = residual.max_abs_coeff();
    }
  } else {
    const double r = residual.max_abs_coeff() / std::max(1.0, p.max_abs_coeff());
    report.residual = r;
    report.passed = r < 1e-9;
  }
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

template <class S>
VerificationReport check_symmetries(const WeightVector& lambda,
                                    const KoornwinderParams<S>& params) {
  Stopwatch clock;
  VerificationReport report;
  report.identity = "koornwinder_symmetries";
  report.params = params_json(params);
  report.params["lambda"] = lambda.entries;
  report.exact = is_exact_v<S>;

  const LaurentPoly<S> base = koornwinder_poly(lambda, params);
  double worst = 0.0;
  bool exact_ok = true;
  auto compare = [&](const LaurentPoly<S>& a, const LaurentPoly<S>& b) {
    if constexpr (is_exact_v<S>) {
      if (!(a == b)) {
        exact_ok = false;
        worst = std::max(worst, max_abs_diff(a, b));
      }
    } else {
      worst = std::max(worst, max_abs_diff(a, b) / std::max(1.0, b.max_abs_coeff()));
    }
  };

  // Adjacent transpositions generate every permutation of (t0..t3).
  for (int i = 0; i < 3; ++i) {
    KoornwinderParams<S> swapped = params;
    std::swap(swapped.t[static_cast<std::size_t>(i)], swapped.t[static_cast<std::size_t>(i + 1)]);
    compare(koornwinder_poly(lambda, swapped), base);
  }

  KoornwinderParams<S> negated = params;
  for (S& ti : negated.t) {
    ti = -ti;
  }
  const int l = lambda.size();
  LaurentPoly<S> flipped = base;
  std::vector<S> minus(static_cast<std::size_t>(l), S(-1));
  flipped = flipped.rescaled(minus);
  if (lambda.total() % 2 != 0) {
    flipped = -flipped;
  }
  compare(koornwinder_poly(lambda, negated), flipped);

  if constexpr (is_exact_v<S>) {
    report.passed = exact_ok;
    if (!exact_ok) {
      report.residual = worst;
    }
  } else {
    report.residual = worst;
    report.passed = worst < 1e-9;
  }
  report.detail = "checked t-transpositions (0 1), (1 2), (2 3) and the sign flip";
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

#define BCQ_KOORNWINDER_INSTANTIATE(S)                                                        \
  template class KoornwinderOperator<S>;                                                      \
  template LaurentPoly<S> dk_apply<S>(const LaurentPoly<S>&, const KoornwinderParams<S>&);    \
  template S eigenvalue<S>(const WeightVector&, const KoornwinderParams<S>&);                 \
  template LaurentPoly<S> koornwinder_poly<S>(const WeightVector&, const KoornwinderParams<S>&, \
                                              OperatorMode);                                  \
  template VerificationReport check_eigen_identity<S>(const WeightVector&,                    \
                                                      const KoornwinderParams<S>&);           \
  template VerificationReport check_symmetries<S>(const WeightVector&, const KoornwinderParams<S>&);
BCQ_KOORNWINDER_INSTANTIATE(Rational)
BCQ_KOORNWINDER_INSTANTIATE(double)
BCQ_KOORNWINDER_INSTANTIATE(long double)
BCQ_KOORNWINDER_INSTANTIATE(Complex)
#undef BCQ_KOORNWINDER_INSTANTIATE

}  // namespace bcq
