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

#include "bcq/limits.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "bcq/awmeasure.hpp"
#include "bcq/errors.hpp"
#include "bcq/koornwinder.hpp"
#include "bcq/qjacobi.hpp"
#include "bcq/qseries.hpp"
#include "bcq/symmetric.hpp"

namespace bcq {

EpsilonSweep EpsilonSweep::standard() {
  return {{Rational(1, 10), Rational(3, 100), Rational(1, 100), Rational(3, 1000),
           Rational(1, 1000), Rational(3, 10000), Rational(1, 10000)}};
}

EpsilonSweep EpsilonSweep::norms() {
  return {{Rational(1, 10), Rational(3, 100), Rational(1, 100)}};
}

EpsilonSweep EpsilonSweep::parse(const std::string& text) {
  EpsilonSweep sweep;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    sweep.values.push_back(parse_rational(item));
  }
  sweep.validate();
  return sweep;
}

void EpsilonSweep::validate() const {
  if (values.empty()) {
    throw DomainError("epsilon sweep is empty");
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (values[i] <= 0) {
      throw DomainError("epsilon values must be positive");
    }
    if (i > 0 && !(values[i] < values[i - 1])) {
      throw DomainError("epsilon values must decrease strictly");
    }
  }
}

template <class S>
KoornwinderParams<S> t_B(const S& eps, const BigJacobiParams<S>& big) {
  const S r_cd = scalar_sqrt<S>(S(big.q * big.c / big.d));
  const S r_dc = scalar_sqrt<S>(S(big.q * big.d / big.c));
  return {{S(r_cd / eps), S(-r_dc / eps), S(eps * big.a * r_dc), S(-eps * big.b * r_cd)},
          big.q,
          big.k};
}

template <class S>
KoornwinderParams<S> t_L(const S& eps, const LittleJacobiParams<S>& little) {
  const S rq = scalar_sqrt<S>(little.q);
  return {{S(rq / eps), S(-little.a * rq), S(eps * little.b * rq), S(-rq)}, little.q, little.k};
}

template <class S>
S rescale_big(const S& eps, const BigJacobiParams<S>& big) {
  return scalar_sqrt<S>(big.q) / (eps * scalar_sqrt<S>(S(big.c * big.d)));
}

template <class S>
S rescale_little(const S& eps, const LittleJacobiParams<S>& little) {
  return scalar_sqrt<S>(little.q) / eps;
}

template KoornwinderParams<Rational> t_B(const Rational&, const BigJacobiParams<Rational>&);
template KoornwinderParams<double> t_B(const double&, const BigJacobiParams<double>&);
template KoornwinderParams<Rational> t_L(const Rational&, const LittleJacobiParams<Rational>&);
template KoornwinderParams<double> t_L(const double&, const LittleJacobiParams<double>&);
template Rational rescale_big(const Rational&, const BigJacobiParams<Rational>&);
template double rescale_big(const double&, const BigJacobiParams<double>&);
template Rational rescale_little(const Rational&, const LittleJacobiParams<Rational>&);
template double rescale_little(const double&, const LittleJacobiParams<double>&);

std::string sweep_csv(const std::vector<SweepRow>& rows) {
  std::ostringstream out;
  out.precision(17);
  out << "epsilon,max_coeff_err,norm_err,constructed_ok\n";
  for (const SweepRow& r : rows) {
    out << r.epsilon << ',';
    if (r.max_coeff_err) {
      out << *r.max_coeff_err;
    }
    out << ',';
    if (r.norm_err) {
      out << *r.norm_err;
    }
    out << ',' << (r.constructed_ok ? "true" : "false") << '\n';
  }
  return out.str();
}

namespace {

// Strictly decreasing, where a run of exact zeros also counts as converged.
bool decreasing(const std::vector<double>& errs) {
  for (std::size_t i = 1; i < errs.size(); ++i) {
    if (!(errs[i] < errs[i - 1]) && !(errs[i] == 0.0 && errs[i - 1] == 0.0)) {
      return false;
    }
  }
  return true;
}

template <class Rows>
void finish(SweepResult& result, const Rows& errs, bool all_ok, double tol,
            const Stopwatch& clock) {
  VerificationReport& r = result.report;
  r.passed = all_ok && !errs.empty() && decreasing(errs) && errs.back() <= tol;
  r.residual = errs.empty() ? std::nullopt : std::optional<double>(errs.back());
  std::ostringstream detail;
  detail.precision(3);
  detail << "errors:";
  for (double e : errs) {
    detail << ' ' << std::scientific << e;
  }
  if (!all_ok) {
    detail << "; some steps failed to construct";
  }
  r.detail = detail.str();
  r.runtime_ms = clock.elapsed_ms();
}

// Relative max coefficient difference between rescaled Koornwinder generator
// coordinates and the q-Jacobi reference.
double generator_error(const LaurentPoly<Rational>& yk, const Rational& s, int degree,
                       const LaurentPoly<double>& yref) {
  LaurentPoly<double> scaled(yk.vars());
  for (const auto& [e, c] : yk.terms()) {
    long weight = -degree;
    for (int i = 0; i < e.vars(); ++i) {
      weight += static_cast<long>(i + 1) * e[i];
    }
    scaled.add_term(e, scalar_cast<double>(Rational(c * ipow(s, weight))));
  }
  const double ref = yref.max_abs_coeff();
  return max_abs_diff(scaled, yref) / (ref > 0 ? ref : 1.0);
}

nlohmann::json rational_json(const Rational& x) { return x.str(); }

nlohmann::json big_json(const BigJacobiParams<Rational>& p) {
  return {{"a", rational_json(p.a)}, {"b", rational_json(p.b)}, {"c", rational_json(p.c)},
          {"d", rational_json(p.d)}, {"q", rational_json(p.q)}, {"k", p.k}};
}

nlohmann::json little_json(const LittleJacobiParams<Rational>& p) {
  return {{"a", rational_json(p.a)}, {"b", rational_json(p.b)}, {"q", rational_json(p.q)},
          {"k", p.k}};
}

template <class MakeParams>
SweepResult polynomial_limit(const std::string& identity, const WeightVector& lambda,
                             const EpsilonSweep& sweep, double tol, nlohmann::json params,
                             const LaurentPoly<double>& reference, MakeParams make) {
  Stopwatch clock;
  sweep.validate();
  SweepResult result;
  result.report.identity = identity;
  result.report.params = std::move(params);
  result.report.params["lambda"] = lambda.entries;
  result.report.exact = false;
  const LaurentPoly<double> yref = to_generator_coords(reference, Symmetry::S);
  std::vector<double> errs;
  bool all_ok = true;
  for (const Rational& eps : sweep.values) {
    SweepRow row;
    row.epsilon = scalar_cast<double>(eps);
    try {
      const auto [kp, s] = make(eps);
      const LaurentPoly<Rational> pk = koornwinder_poly(lambda, kp);
      const double err =
          generator_error(to_generator_coords(pk, Symmetry::W), s, lambda.total(), yref);
      row.max_coeff_err = err;
      row.constructed_ok = true;
      errs.push_back(err);
    } catch (const DomainError&) {
      all_ok = false;
    } catch (const ConsistencyError&) {
      all_ok = false;
    }
    result.rows.push_back(row);
  }
  finish(result, errs, all_ok, tol, clock);
  return result;
}

template <class MakeParams>
SweepResult norm_limit(const std::string& identity, const WeightVector& lambda,
                       const EpsilonSweep& sweep, double tol, nlohmann::json params,
                       double target, MakeParams make) {
  Stopwatch clock;
  sweep.validate();
  SweepResult result;
  result.report.identity = identity;
  result.report.params = std::move(params);
  result.report.params["lambda"] = lambda.entries;
  result.report.params["target_norm"] = target;
  const int l = lambda.size();
  std::vector<double> errs;
  bool all_ok = true;
  for (const Rational& eps : sweep.values) {
    SweepRow row;
    row.epsilon = scalar_cast<double>(eps);
    try {
      const auto [kp, s] = make(eps);
      const LaurentPoly<Complex> p = koornwinder_poly(lambda, kp).template cast<Complex>();
      const KoornwinderParams<Complex> cp = kp.template cast<Complex>();
      const LaurentPoly<Complex> one = LaurentPoly<Complex>::constant(l, Complex(1.0));
      const double nk = (full_inner(p, p, cp) / full_inner(one, one, cp)).real();
      const double rescaled = nk * std::pow(scalar_cast<double>(s), -2 * lambda.total());
      const double err = std::abs(rescaled - target) / target;
      row.norm_err = err;
      row.constructed_ok = true;
      errs.push_back(err);
    } catch (const DomainError&) {
      all_ok = false;
    } catch (const ConvergenceError&) {
      all_ok = false;
    }
    result.rows.push_back(row);
  }
  finish(result, errs, all_ok, tol, clock);
  return result;
}

}  // namespace

SweepResult limit_check_big(const WeightVector& lambda, const BigJacobiParams<Rational>& big,
                            const EpsilonSweep& sweep, double tol) {
  big.validate();
  const LaurentPoly<double> ref = big_jacobi_poly(lambda, big.cast<double>());
  return polynomial_limit("limit_big", lambda, sweep, tol, big_json(big), ref,
                          [&](const Rational& eps) {
                            return std::make_pair(t_B(eps, big), rescale_big(eps, big));
                          });
}

SweepResult limit_check_little(const WeightVector& lambda,
                               const LittleJacobiParams<Rational>& little,
                               const EpsilonSweep& sweep, double tol) {
  little.validate();
  const LaurentPoly<double> ref = little_jacobi_poly(lambda, little.cast<double>());
  return polynomial_limit("limit_little", lambda, sweep, tol, little_json(little), ref,
                          [&](const Rational& eps) {
                            return std::make_pair(t_L(eps, little), rescale_little(eps, little));
                          });
}

SweepResult norm_limit_check_big(const WeightVector& lambda, const BigJacobiParams<Rational>& big,
                                 const EpsilonSweep& sweep, double tol) {
  big.validate();
  const double target = norm_big(lambda, big.cast<double>());
  return norm_limit("norm_limit_big", lambda, sweep, tol, big_json(big), target,
                    [&](const Rational& eps) {
                      return std::make_pair(t_B(eps, big), rescale_big(eps, big));
                    });
}

SweepResult norm_limit_check_little(const WeightVector& lambda,
                                    const LittleJacobiParams<Rational>& little,
                                    const EpsilonSweep& sweep, double tol) {
  little.validate();
  const double target = norm_little(lambda, little.cast<double>());
  return norm_limit("norm_limit_little", lambda, sweep, tol, little_json(little), target,
                    [&](const Rational& eps) {
                      return std::make_pair(t_L(eps, little), rescale_little(eps, little));
                    });
}

KoornwinderParams<double> grassmann_koornwinder_params(int n, int l, double sigma, double tau,
                                                       double q) {
  const GrassmannShape shape(n, l);
  const int m = shape.n - 2 * shape.l;
  KoornwinderParams<double> p{{-std::pow(q, sigma + tau + 1), -std::pow(q, -sigma - tau + 1),
                               std::pow(q, sigma - tau + 1), std::pow(q, -sigma + tau + 2 * m + 1)},
                              q * q,
                              1};
  p.validate();
  return p;
}

BigJacobiParams<double> grassmann_big_params(int n, int l, double tau, double q) {
  const GrassmannShape shape(n, l);
  const int m = shape.n - 2 * shape.l;
  BigJacobiParams<double> p{1.0, std::pow(q, 2 * m), 1.0, std::pow(q, 2 * tau + 2 * m), q * q, 1};
  p.validate();
  return p;
}

LittleJacobiParams<double> grassmann_little_params(int n, int l, double q) {
  const GrassmannShape shape(n, l);
  const int m = shape.n - 2 * shape.l;
  LittleJacobiParams<double> p{std::pow(q, 2 * m), 1.0, q * q, 1};
  p.validate();
  return p;
}

namespace {

double permuted_negation_error(const KoornwinderParams<double>& from,
                               const KoornwinderParams<double>& target) {
  std::array<double, 4> a{};
  std::array<double, 4> b = target.t;
  for (std::size_t i = 0; i < 4; ++i) {
    a[i] = -from.t[i];
  }
  std::sort(a.begin(), a.end());
  std::sort(b.begin(), b.end());
  double worst = 0.0;
  for (std::size_t i = 0; i < 4; ++i) {
    worst = std::max(worst, std::abs(a[i] - b[i]) / std::max(1.0, std::abs(b[i])));
  }
  return worst;
}

}  // namespace

VerificationReport grassmann_consistency_check(int n, int l, double sigma, double tau, double q) {
  Stopwatch clock;
  VerificationReport r;
  r.identity = "grassmann_limit_parameters";
  r.params = {{"n", n}, {"l", l}, {"sigma", sigma}, {"tau", tau}, {"q", q}};
  const KoornwinderParams<double> target = grassmann_koornwinder_params(n, l, sigma, tau, q);
  const int m = n - 2 * l;
  const double eps_b = std::pow(q, sigma - m);
  double err = permuted_negation_error(t_B(eps_b, grassmann_big_params(n, l, tau, q)), target);
  std::string detail = "t_B(q^(sigma-(n-2l))) = -(permuted quadruple)";
  if (sigma == tau) {
    const double eps_l = std::pow(q, 2 * sigma);
    err = std::max(err, permuted_negation_error(t_L(eps_l, grassmann_little_params(n, l, q)),
                                                target));
    detail += "; t_L(q^(2 sigma)) likewise";
  }
  r.residual = err;
  r.passed = err < 1e-12;
  r.detail = detail;
  r.runtime_ms = clock.elapsed_ms();
  return r;
}

VerificationReport grassmann_product_check(int n, int l, double sigma, double tau, double q) {
  Stopwatch clock;
  VerificationReport r;
  r.identity = "grassmann_parameter_product";
  r.params = {{"n", n}, {"l", l}, {"sigma", sigma}, {"tau", tau}, {"q", q}};
  const KoornwinderParams<double> p = grassmann_koornwinder_params(n, l, sigma, tau, q);
  const double product = p.product();
  const double want = std::pow(q, 4 + 2 * (n - 2 * l));
  const double err = std::abs(product - want) / want;
  r.residual = err;
  r.passed = err < 1e-12 && product > 0.0 && product < 1.0;
  r.runtime_ms = clock.elapsed_ms();
  return r;
}

double selberg_classical(double alpha, double beta, double tau, int l) {
  if (!(alpha > -1.0 && beta > -1.0 && tau > 0.0) || l < 1) {
    throw DomainError("Selberg integral needs alpha, beta > -1, tau > 0 and l >= 1");
  }
  double log_value = 0.0;
  for (int j = 1; j <= l; ++j) {
    log_value += std::lgamma(alpha + 1 + (j - 1) * tau) + std::lgamma(beta + 1 + (j - 1) * tau) +
                 std::lgamma(j * tau + 1) - std::lgamma(alpha + beta + 2 + (l + j - 2) * tau) -
                 std::lgamma(tau + 1);
  }
  return std::exp(log_value);
}

VerificationReport q_to_1_check(double alpha, double beta, int k, int l,
                                const std::vector<double>& q_list, double tol) {
  Stopwatch clock;
  VerificationReport r;
  r.identity = "q_selberg_classical_limit";
  r.params = {{"alpha", alpha}, {"beta", beta}, {"k", k}, {"l", l}, {"q", q_list}};
  const double want = selberg_classical(alpha, beta, k, l);
  const TruncationPolicy policy{1e-16, 1000000};
  std::vector<double> errs;
  std::ostringstream detail;
  detail.precision(6);
  detail << "Selberg " << want << ";";
  for (double q : q_list) {
    double log_block = 0.0;
    int sign = 1;
    auto add = [&](double arg, int power) {
      int sg = 1;
      log_block += power * log_abs_qgamma(arg, q, policy, &sg);
      sign *= sg;
    };
    for (int i = 1; i <= l; ++i) {
      add(alpha + 1 + (i - 1) * k, 1);
      add(beta + 1 + (i - 1) * k, 1);
      add(i * k, 1);
      add(alpha + beta + 2 + (l + i - 2) * k, -1);
      add(k, -1);
    }
    double factorial = 1.0;
    for (int i = 2; i <= l; ++i) {
      factorial *= i;
    }
    const double block = sign * factorial * std::exp(log_block);
    const double l2 = l * (l - 1) / 2.0;
    const double l3 = l * (l - 1) * (l - 2) / 6.0;
    const double full = block * std::pow(q, k * (alpha + 1) * l2 + 2.0 * k * k * l3);
    errs.push_back(std::abs(block - want) / want);
    detail << " q=" << q << ": gamma block " << block << ", I_L " << full << ";";
  }
  r.passed = !errs.empty() && decreasing(errs) && errs.back() < tol;
  if (!errs.empty()) {
    r.residual = errs.back();
  }
  r.detail = detail.str();
  r.runtime_ms = clock.elapsed_ms();
  return r;
}

VerificationReport qgamma_limit_check(const std::vector<double>& a_list, double q, double tol) {
  Stopwatch clock;
  VerificationReport r;
  r.identity = "qgamma_classical_limit";
  r.params = {{"a", a_list}, {"q", q}};
  const TruncationPolicy policy{1e-16, 1000000};
  double worst = 0.0;
  for (double a : a_list) {
    const double g = std::tgamma(a);
    worst = std::max(worst, std::abs(qgamma(a, q, policy) - g) / std::abs(g));
  }
  r.residual = worst;
  r.passed = worst < tol;
  r.runtime_ms = clock.elapsed_ms();
  return r;
}

}  // namespace bcq
