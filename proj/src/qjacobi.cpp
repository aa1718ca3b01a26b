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

#include "bcq/qjacobi.hpp"

#include <Eigen/Dense>
#include <cmath>
#include <string>
#include <vector>

#include "bcq/errors.hpp"
#include "bcq/qseries.hpp"
#include "bcq/symmetric.hpp"

namespace bcq {

void SumTruncation::validate() const {
  if (n_max < 1) {
    throw DomainError("n_max must be positive");
  }
  if (!(tail_tol > 0.0 && tail_tol < 1.0)) {
    throw DomainError("tail_tol must lie in (0,1)");
  }
}

namespace {

struct Node {
  double x;
  double weight;  // Jackson weight times the one-variable weight
  int index;      // lattice exponent, used by the little weight
};

// Smallest N with ratio^{N+1} / (1 - ratio) below tail_tol.
int points_needed(double ratio, const SumTruncation& trunc) {
  trunc.validate();
  if (!(ratio > 0.0 && ratio < 1.0)) {
    throw ConvergenceError("Jackson sum does not decay geometrically");
  }
  const int n = static_cast<int>(std::ceil(std::log(trunc.tail_tol * (1.0 - ratio)) /
                                           std::log(ratio)));
  if (n > trunc.n_max) {
    throw ConvergenceError("Jackson sum needs " + std::to_string(n) +
                           " points per variable, above n_max = " + std::to_string(trunc.n_max));
  }
  return std::max(n, 0);
}

double w_big(double x, const BigJacobiParams<double>& p) {
  const double q = p.q;
  const Complex num = qpochhammer_inf(q * x / p.c, q) * qpochhammer_inf(-q * x / p.d, q);
  const Complex den =
      qpochhammer_inf(q * p.a * x / p.c, q) * qpochhammer_inf(-q * p.b * x / p.d, q);
  return (num / den).real();
}

double w_little_at(int m, const LittleJacobiParams<double>& p) {
  const double q = p.q;
  const double x = std::pow(q, m);
  const Complex ratio = qpochhammer_inf(q * x, q) / qpochhammer_inf(q * p.b * x, q);
  return ratio.real() * std::pow(p.a, m);
}

// Delta(x) prod_{i<j} prod_{m=0}^{2k-2} (x_i - q^{1-k+m} x_j).
template <class T>
T vandermonde_cross(std::span<const T> x, double q, int k) {
  T v = 1.0;
  const std::size_t l = x.size();
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i + 1; j < l; ++j) {
      v *= x[i] - x[j];
      T qm = std::pow(static_cast<T>(q), 1 - k);
      for (int m = 0; m <= 2 * k - 2; ++m, qm *= q) {
        v *= x[i] - qm * x[j];
      }
    }
  }
  return v;
}

long double lattice_sum_ld(const LaurentPoly<double>& r, const std::vector<Node>& nodes, double q,
                           int k) {
  const int l = r.vars();
  const auto n = static_cast<int>(nodes.size());
  const LaurentPoly<long double> rl = r.cast<long double>();
  std::vector<int> idx(static_cast<std::size_t>(l), 0);
  std::vector<long double> x(static_cast<std::size_t>(l));
  long double sum = 0.0;
  while (true) {
    long double w = 1.0;
    for (int i = 0; i < l; ++i) {
      const Node& node = nodes[static_cast<std::size_t>(idx[static_cast<std::size_t>(i)])];
      x[static_cast<std::size_t>(i)] = node.x;
      w *= node.weight;
    }
    if (w != 0.0) {
      const long double v = vandermonde_cross<long double>(x, q, k);
      if (v != 0.0) {
        sum += rl.evaluate<long double>(x) * v * w;
      }
    }
    int i = 0;
    while (i < l && ++idx[static_cast<std::size_t>(i)] == n) {
      idx[static_cast<std::size_t>(i)] = 0;
      ++i;
    }
    if (i == l) {
      break;
    }
  }
  return sum;
}

double lattice_sum(const LaurentPoly<double>& r, const std::vector<Node>& nodes, double q, int k) {
  return static_cast<double>(lattice_sum_ld(r, nodes, q, k));
}

void check_symmetric_pair(const LaurentPoly<double>& p, const LaurentPoly<double>& q) {
  if (p.vars() != q.vars() || p.vars() < 1) {
    throw DomainError("inner product of polynomials in different numbers of variables");
  }
  for (const LaurentPoly<double>* f : {&p, &q}) {
    for (int i = 0; i < f->vars(); ++i) {
      if (f->min_degree(i) < 0) {
        throw DomainError("q-Jacobi inner products need ordinary polynomials");
      }
    }
  }
}

std::vector<Node> big_nodes(const BigJacobiParams<double>& p, const SumTruncation& trunc) {
  const int n = points_needed(p.q, trunc);
  std::vector<Node> nodes;
  double qm = 1.0;
  for (int m = 0; m <= n; ++m, qm *= p.q) {
    nodes.push_back({p.c * qm, p.c * (1.0 - p.q) * qm * w_big(p.c * qm, p), m});
    nodes.push_back({-p.d * qm, p.d * (1.0 - p.q) * qm * w_big(-p.d * qm, p), m});
  }
  return nodes;
}

std::vector<Node> little_nodes(const LittleJacobiParams<double>& p, const SumTruncation& trunc) {
  const int n = points_needed(p.a * p.q, trunc);
  std::vector<Node> nodes;
  double qm = 1.0;
  for (int m = 0; m <= n; ++m, qm *= p.q) {
    nodes.push_back({qm, (1.0 - p.q) * qm * w_little_at(m, p), m});
  }
  return nodes;
}

template <class Inner>
LaurentPoly<double> gram_schmidt(const WeightVector& lambda, Inner inner) {
  if (lambda.lattice != Lattice::BC || lambda.size() < 1 || !is_dominant(lambda)) {
    throw DomainError("lambda must be a partition: " + lambda.str());
  }
  std::vector<WeightVector> lower = dominant_downset(lambda);
  lower.pop_back();
  const LaurentPoly<double> top = monomial_symmetric<double>(lambda);
  if (lower.empty()) {
    return top;
  }
  std::vector<LaurentPoly<double>> m;
  for (const WeightVector& mu : lower) {
    m.push_back(monomial_symmetric<double>(mu));
  }
  // Assembled and solved in long double: the monomial Gram matrix is
  // ill-conditioned enough at k = 2 to cost a digit in double.
  using MatrixL = Eigen::Matrix<long double, Eigen::Dynamic, Eigen::Dynamic>;
  using VectorL = Eigen::Matrix<long double, Eigen::Dynamic, 1>;
  const auto n = static_cast<Eigen::Index>(m.size());
  MatrixL gram(n, n);
  VectorL rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      gram(i, j) = gram(j, i) =
          inner(m[static_cast<std::size_t>(j)], m[static_cast<std::size_t>(i)]);
    }
    rhs(i) = inner(top, m[static_cast<std::size_t>(i)]);
  }
  Eigen::FullPivLU<MatrixL> lu(gram);
  if (!lu.isInvertible() || lu.rcond() < 1e-14L) {
    throw ConvergenceError("Gram matrix numerically singular");
  }
  const VectorL c = lu.solve(rhs);
  LaurentPoly<double> p = top;
  for (Eigen::Index j = 0; j < n; ++j) {
    p -= static_cast<double>(c(j)) * m[static_cast<std::size_t>(j)];
  }
  return p;
}

long binom(int n, int r) {
  if (r < 0 || r > n) {
    return 0;
  }
  long v = 1;
  for (int i = 1; i <= r; ++i) {
    v = v * (n - r + i) / i;
  }
  return v;
}

double exponent_of(double a, double q, const char* name) {
  if (!(a > 0.0)) {
    throw DomainError(std::string(name) + " must be positive to write it as a power of q");
  }
  return std::log(a) / std::log(q);
}

// prod_i Gamma_q(alpha+1+(i-1)k) Gamma_q(beta+1+(i-1)k) Gamma_q(ik)
//        / (Gamma_q(alpha+beta+2+(l+i-2)k) Gamma_q(k)), in log space.
double log_gamma_block(int l, double alpha, double beta, int k, double q, int* sign) {
  double log_sum = 0.0;
  int s = 1;
  auto add = [&](double arg, int power) {
    int sg = 1;
    log_sum += power * log_abs_qgamma(arg, q, {}, &sg);
    s *= sg;
  };
  for (int i = 1; i <= l; ++i) {
    add(alpha + 1 + (i - 1) * k, 1);
    add(beta + 1 + (i - 1) * k, 1);
    add(i * k, 1);
    add(alpha + beta + 2 + (l + i - 2) * k, -1);
    add(k, -1);
  }
  *sign = s;
  return log_sum;
}

double factorial(int l) {
  double f = 1.0;
  for (int i = 2; i <= l; ++i) {
    f *= i;
  }
  return f;
}

}  // namespace

double big_weight(std::span<const double> x, const BigJacobiParams<double>& params) {
  params.validate();
  double w = vandermonde_cross<double>(x, params.q, params.k);
  for (double xi : x) {
    w *= w_big(xi, params);
  }
  return w;
}

double little_weight(std::span<const int> lattice_index, const LittleJacobiParams<double>& params) {
  params.validate();
  std::vector<double> x;
  double w = 1.0;
  for (int m : lattice_index) {
    x.push_back(std::pow(params.q, m));
    w *= w_little_at(m, params);
  }
  return w * vandermonde_cross<double>(x, params.q, params.k);
}

double big_inner(const LaurentPoly<double>& p, const LaurentPoly<double>& q,
                 const BigJacobiParams<double>& params, const SumTruncation& trunc) {
  params.validate();
  check_symmetric_pair(p, q);
  return lattice_sum(p * q, big_nodes(params, trunc), params.q, params.k);
}

double little_inner(const LaurentPoly<double>& p, const LaurentPoly<double>& q,
                    const LittleJacobiParams<double>& params, const SumTruncation& trunc) {
  params.validate();
  check_symmetric_pair(p, q);
  return lattice_sum(p * q, little_nodes(params, trunc), params.q, params.k);
}

LaurentPoly<double> big_jacobi_poly(const WeightVector& lambda,
                                    const BigJacobiParams<double>& params,
                                    const SumTruncation& trunc) {
  params.validate();
  const std::vector<Node> nodes = big_nodes(params, trunc);
  return gram_schmidt(lambda, [&](const LaurentPoly<double>& a, const LaurentPoly<double>& b) {
    return lattice_sum_ld(a * b, nodes, params.q, params.k);
  });
}

LaurentPoly<double> little_jacobi_poly(const WeightVector& lambda,
                                       const LittleJacobiParams<double>& params,
                                       const SumTruncation& trunc) {
  params.validate();
  const std::vector<Node> nodes = little_nodes(params, trunc);
  return gram_schmidt(lambda, [&](const LaurentPoly<double>& a, const LaurentPoly<double>& b) {
    return lattice_sum_ld(a * b, nodes, params.q, params.k);
  });
}

double closed_form_big_constant(int l, const BigJacobiParams<double>& p) {
  p.validate();
  const double q = p.q;
  const int k = p.k;
  const double alpha = exponent_of(p.a, q, "a");
  const double beta = exponent_of(p.b, q, "b");
  int sign = 1;
  double log_value = log_gamma_block(l, alpha, beta, k, q, &sign);
  log_value += std::log(factorial(l));
  log_value += static_cast<double>(k * k * binom(l, 3) - binom(k, 2) * binom(l, 2)) * std::log(q);
  for (int i = 1; i <= l; ++i) {
    const double shift = std::pow(q, alpha + 1 + (i - 1) * k);
    const double shift_b = std::pow(q, beta + 1 + (i - 1) * k);
    const Complex num = qpochhammer_inf(-p.d / p.c, q) * qpochhammer_inf(-p.c / p.d, q);
    const Complex den = qpochhammer_inf(-shift * p.d / p.c, q) *
                        qpochhammer_inf(-shift_b * p.c / p.d, q);
    const double ratio = (num / den).real() * std::pow(p.c * p.d, 1 + (i - 1) * k) / (p.c + p.d);
    if (ratio < 0) {
      sign = -sign;
    }
    log_value += std::log(std::abs(ratio));
  }
  return sign * std::exp(log_value);
}

double closed_form_little_constant(int l, const LittleJacobiParams<double>& p) {
  p.validate();
  const double q = p.q;
  const int k = p.k;
  const double alpha = exponent_of(p.a, q, "a");
  const double beta = exponent_of(p.b, q, "b");
  int sign = 1;
  double log_value = log_gamma_block(l, alpha, beta, k, q, &sign);
  log_value += std::log(factorial(l));
  log_value += (k * (alpha + 1) * static_cast<double>(binom(l, 2)) +
                2.0 * k * k * static_cast<double>(binom(l, 3))) *
               std::log(q);
  return sign * std::exp(log_value);
}

double norm_big(const WeightVector& lambda, const BigJacobiParams<double>& params,
                const SumTruncation& trunc) {
  const LaurentPoly<double> p = big_jacobi_poly(lambda, params, trunc);
  const LaurentPoly<double> one = LaurentPoly<double>::constant(lambda.size(), 1.0);
  return big_inner(p, p, params, trunc) / big_inner(one, one, params, trunc);
}

double norm_little(const WeightVector& lambda, const LittleJacobiParams<double>& params,
                   const SumTruncation& trunc) {
  const LaurentPoly<double> p = little_jacobi_poly(lambda, params, trunc);
  const LaurentPoly<double> one = LaurentPoly<double>::constant(lambda.size(), 1.0);
  return little_inner(p, p, params, trunc) / little_inner(one, one, params, trunc);
}

namespace {

nlohmann::json big_params_json(const BigJacobiParams<double>& p) {
  return {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}, {"q", p.q}, {"k", p.k}};
}

nlohmann::json little_params_json(const LittleJacobiParams<double>& p) {
  return {{"a", p.a}, {"b", p.b}, {"q", p.q}, {"k", p.k}};
}

VerificationReport constant_report(const char* identity, nlohmann::json params, double sum,
                                   double closed, double tol, const Stopwatch& watch) {
  const double err = std::abs(sum - closed) / std::abs(closed);
  VerificationReport rep;
  rep.identity = identity;
  rep.params = std::move(params);
  rep.passed = err <= tol;
  rep.residual = err;
  rep.detail = "Jackson sum " + std::to_string(sum) + " vs closed form " + std::to_string(closed) +
               ", rel err " + std::to_string(err);
  rep.runtime_ms = watch.elapsed_ms();
  return rep;
}

template <class Poly, class Inner>
VerificationReport gram_report(const char* identity, nlohmann::json params, int l, int max_degree,
                               Poly poly, Inner inner, double tol, const Stopwatch& watch) {
  const std::vector<WeightVector> weights = dominant_weights_up_to(l, max_degree);
  std::vector<LaurentPoly<double>> polys;
  for (const WeightVector& w : weights) {
    polys.push_back(poly(w));
  }
  const std::size_t m = polys.size();
  std::vector<double> sq(m);
  for (std::size_t i = 0; i < m; ++i) {
    sq[i] = inner(polys[i], polys[i]);
  }
  double worst = 0;
  std::string worst_pair = "none";
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double c = std::abs(inner(polys[i], polys[j])) / std::sqrt(sq[i] * sq[j]);
      if (c > worst) {
        worst = c;
        worst_pair = weights[i].str() + "," + weights[j].str();
      }
    }
  }
  VerificationReport rep;
  rep.identity = identity;
  rep.params = std::move(params);
  rep.params["l"] = l;
  rep.params["max_degree"] = max_degree;
  rep.passed = worst <= tol;
  rep.residual = worst;
  rep.detail = std::to_string(m) + " polynomials, worst normalized inner product " +
               std::to_string(worst) + " at " + worst_pair;
  rep.runtime_ms = watch.elapsed_ms();
  return rep;
}

}  // namespace

VerificationReport selberg_check_big(int l, const BigJacobiParams<double>& params,
                                     const SumTruncation& trunc, double tol) {
  const Stopwatch watch;
  const LaurentPoly<double> one = LaurentPoly<double>::constant(l, 1.0);
  nlohmann::json pj = big_params_json(params);
  pj["l"] = l;
  return constant_report("big_selberg_constant", pj, big_inner(one, one, params, trunc),
                         closed_form_big_constant(l, params), tol, watch);
}

VerificationReport selberg_check_little(int l, const LittleJacobiParams<double>& params,
                                        const SumTruncation& trunc, double tol) {
  const Stopwatch watch;
  const LaurentPoly<double> one = LaurentPoly<double>::constant(l, 1.0);
  nlohmann::json pj = little_params_json(params);
  pj["l"] = l;
  return constant_report("little_selberg_constant", pj, little_inner(one, one, params, trunc),
                         closed_form_little_constant(l, params), tol, watch);
}

VerificationReport orthogonality_check_big(int l, int max_degree,
                                           const BigJacobiParams<double>& params,
                                           const SumTruncation& trunc, double tol) {
  const Stopwatch watch;
  return gram_report(
      "big_orthogonality", big_params_json(params), l, max_degree,
      [&](const WeightVector& w) { return big_jacobi_poly(w, params, trunc); },
      [&](const LaurentPoly<double>& a, const LaurentPoly<double>& b) {
        return big_inner(a, b, params, trunc);
      },
      tol, watch);
}

VerificationReport orthogonality_check_little(int l, int max_degree,
                                              const LittleJacobiParams<double>& params,
                                              const SumTruncation& trunc, double tol) {
  const Stopwatch watch;
  return gram_report(
      "little_orthogonality", little_params_json(params), l, max_degree,
      [&](const WeightVector& w) { return little_jacobi_poly(w, params, trunc); },
      [&](const LaurentPoly<double>& a, const LaurentPoly<double>& b) {
        return little_inner(a, b, params, trunc);
      },
      tol, watch);
}

}  // namespace bcq
