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

#include "bcq/awmeasure.hpp"

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <map>
#include <numbers>
#include <string>
#include <vector>

#include "bcq/errors.hpp"
#include "bcq/koornwinder.hpp"
#include "bcq/symmetric.hpp"

namespace bcq {

void QuadratureGrid::validate() const {
  if (points < 8) {
    throw DomainError("quadrature needs at least 8 points per circle");
  }
  if (max_points < points) {
    throw DomainError("quadrature cap below the starting grid");
  }
  if (!(rel_tol > 0.0)) {
    throw DomainError("quadrature tolerance must be positive");
  }
}

int discrete_truncation(Complex e, double q) {
  const double r = std::abs(e);
  int n = -1;
  double mag = r;
  while (mag > 1.0) {
    if (n >= DiscreteSupport::kMaxIndex) {
      throw DomainError("discrete support of |e| = " + std::to_string(r) + " exceeds " +
                        std::to_string(DiscreteSupport::kMaxIndex) + " points");
    }
    ++n;
    mag *= q;
  }
  return n;
}

DiscreteSupport DiscreteSupport::of(const KoornwinderParams<Complex>& params) {
  DiscreteSupport s;
  for (int i = 0; i < 4; ++i) {
    s.n[static_cast<std::size_t>(i)] = discrete_truncation(params.t[static_cast<std::size_t>(i)],
                                                           params.q.real());
  }
  return s;
}

bool DiscreteSupport::empty() const {
  return std::all_of(n.begin(), n.end(), [](int v) { return v < 0; });
}

Complex aw_weight(Complex x, const std::array<Complex, 4>& t, double q,
                  const TruncationPolicy& policy) {
  const Complex inv = 1.0 / x;
  Complex num = qpochhammer_inf(x * x, q, policy) * qpochhammer_inf(inv * inv, q, policy);
  Complex den(1.0);
  for (const Complex& tm : t) {
    den *= qpochhammer_inf(tm * x, q, policy) * qpochhammer_inf(tm * inv, q, policy);
  }
  return num / den;
}

Complex aw_cross_factor(std::span<const Complex> x, double q, int k) {
  Complex result(1.0);
  const std::size_t l = x.size();
  for (std::size_t i = 0; i < l; ++i) {
    for (std::size_t j = i + 1; j < l; ++j) {
      const Complex xi = x[i];
      const Complex xj = x[j];
      const Complex xi_inv = 1.0 / xi;
      const Complex xj_inv = 1.0 / xj;
      for (const Complex& y : {xi * xj, xi * xj_inv, xi_inv * xj, xi_inv * xj_inv}) {
        result *= qpochhammer(y, q, k);
      }
    }
  }
  return result;
}

Complex contour_residue(const std::function<Complex(Complex)>& f, Complex center, double radius,
                        int points) {
  Complex sum(0.0);
  for (int j = 0; j < points; ++j) {
    const Complex w = std::polar(radius, 2.0 * std::numbers::pi * j / points);
    sum += f(center + w) * w;
  }
  return sum / static_cast<double>(points);
}

Complex residue_weight(Complex e, int i, Complex f, Complex g, Complex h, double q) {
  const std::array<Complex, 4> t{e, f, g, h};
  const Complex x0 = e * std::pow(q, i);
  const double scale = std::max(1.0, std::abs(x0));
  double nearest = std::abs(x0);
  for (std::size_t m = 0; m < 4; ++m) {
    // Poles t_m q^j of (t_m/x;q)_inf.
    Complex p = t[m];
    for (int j = 0; j < 4000 && std::abs(p) > 1e-3 * std::abs(x0); ++j, p *= q) {
      if (m == 0 && j == i) {
        continue;
      }
      nearest = std::min(nearest, std::abs(p - x0));
    }
    // Poles t_m^{-1} q^{-j} of (t_m x;q)_inf.
    if (std::abs(t[m]) > 0.0) {
      Complex r = 1.0 / t[m];
      for (int j = 0; j < 4000 && std::abs(r) < 2.0 * std::abs(x0) + 1.0; ++j, r /= q) {
        nearest = std::min(nearest, std::abs(r - x0));
      }
    }
  }
  if (nearest < 1e-12 * scale) {
    throw DomainError("pole collision of the Askey-Wilson weight at e q^" + std::to_string(i));
  }
  const double radius = 0.25 * nearest;
  return contour_residue([&](Complex x) { return aw_weight(x, t, q) / x; }, x0, radius, 64);
}

namespace {

int binom(int n, int r) {
  long v = 1;
  for (int i = 1; i <= r; ++i) {
    v = v * (n - r + i) / i;
  }
  return static_cast<int>(v);
}

// Torus average over the trailing l - m variables of R(x) prod w_2 cross(x),
// with the leading m coordinates fixed.
class TorusIntegral {
 public:
  TorusIntegral(const LaurentPoly<Complex>& r, const KoornwinderParams<Complex>& params,
                const QuadratureGrid& grid)
      : r_(r), params_(params), grid_(grid) {
    int degree = 0;
    for (int i = 0; i < r.vars(); ++i) {
      degree = std::max({degree, r.max_degree(i), -r.min_degree(i)});
    }
    start_ = grid.points;
    const int needed = 2 * (degree + 2 * params.k * std::max(0, r.vars() - 1) + 2);
    while (start_ < needed) {
      start_ *= 2;
    }
    for (const Complex& tm : params.t) {
      for (Complex p = tm; std::abs(p) > 1e-8; p *= params.q.real()) {
        if (std::abs(std::abs(p) - 1.0) < 1e-8) {
          throw DomainError("a pole of the Askey-Wilson weight lies on the unit circle");
        }
      }
    }
  }

  Complex operator()(const std::vector<Complex>& fixed) const {
    const int d = r_.vars() - static_cast<int>(fixed.size());
    if (d == 0) {
      double ignored = 0.0;
      return evaluate(fixed, 0, ignored);
    }
    double abs_avg = 0.0;
    Complex prev = evaluate(fixed, start_, abs_avg);
    for (int m = 2 * start_; m <= grid_.max_points; m *= 2) {
      if (std::pow(static_cast<double>(m), d) > double(1 << 24)) {
        break;
      }
      const Complex cur = evaluate(fixed, m, abs_avg);
      if (std::abs(cur - prev) <= grid_.rel_tol * std::max(std::abs(cur), abs_avg)) {
        return cur;
      }
      prev = cur;
    }
    throw ConvergenceError("torus quadrature did not converge below the refinement cap");
  }

  Complex evaluate(const std::vector<Complex>& fixed, int points, double& abs_avg) const {
    const int l = r_.vars();
    const int m = static_cast<int>(fixed.size());
    const int d = l - m;
    const double q = params_.q.real();
    auto& [nodes, weights] = nodes_[points];
    if (nodes.empty()) {
      // Offset by half a step so that no node sits on the zeros x = +-1.
      for (int j = 0; j < points; ++j) {
        nodes.push_back(std::polar(1.0, 2.0 * std::numbers::pi * (j + 0.5) / points));
        weights.push_back(aw_weight(nodes.back(), params_.t, q));
      }
    }
    std::vector<Complex> x(fixed);
    x.resize(static_cast<std::size_t>(l));
    std::vector<int> idx(static_cast<std::size_t>(d), 0);
    Complex sum(0.0);
    double abs_sum = 0.0;
    long count = 0;
    while (true) {
      Complex w(1.0);
      for (int s = 0; s < d; ++s) {
        const auto j = static_cast<std::size_t>(idx[static_cast<std::size_t>(s)]);
        x[static_cast<std::size_t>(m + s)] = nodes[j];
        w *= weights[j];
      }
      const Complex v = r_.evaluate<Complex>(x) * w * aw_cross_factor(x, q, params_.k);
      sum += v;
      abs_sum += std::abs(v);
      ++count;
      int s = 0;
      while (s < d && ++idx[static_cast<std::size_t>(s)] == points) {
        idx[static_cast<std::size_t>(s)] = 0;
        ++s;
      }
      if (s == d) {
        break;
      }
    }
    abs_avg = abs_sum / static_cast<double>(count);
    return sum / static_cast<double>(count);
  }

 private:
  const LaurentPoly<Complex>& r_;
  const KoornwinderParams<Complex>& params_;
  QuadratureGrid grid_;
  int start_;
  mutable std::map<int, std::pair<std::vector<Complex>, std::vector<Complex>>> nodes_;
};

void check_pair(const LaurentPoly<Complex>& p, const LaurentPoly<Complex>& q) {
  if (p.vars() != q.vars() || p.vars() < 1) {
    throw DomainError("inner product of polynomials in different numbers of variables");
  }
}

}  // namespace

Complex continuous_inner(const LaurentPoly<Complex>& p, const LaurentPoly<Complex>& q,
                         const KoornwinderParams<Complex>& params, const QuadratureGrid& grid) {
  params.validate();
  grid.validate();
  check_pair(p, q);
  const LaurentPoly<Complex> r = p * q.conj();
  return TorusIntegral(r, params, grid)({});
}

Complex continuous_inner_at(const LaurentPoly<Complex>& p, const LaurentPoly<Complex>& q,
                            const KoornwinderParams<Complex>& params, int points) {
  params.validate();
  check_pair(p, q);
  if (points < 1) {
    throw DomainError("quadrature needs at least one point");
  }
  const LaurentPoly<Complex> r = p * q.conj();
  double abs_avg = 0.0;
  return TorusIntegral(r, params, QuadratureGrid{}).evaluate({}, points, abs_avg);
}

Complex full_inner(const LaurentPoly<Complex>& p, const LaurentPoly<Complex>& q,
                   const KoornwinderParams<Complex>& params, const QuadratureGrid& grid) {
  params.validate();
  grid.validate();
  check_pair(p, q);
  const int l = p.vars();
  const double qq = params.q.real();
  const LaurentPoly<Complex> r = p * q.conj();
  const TorusIntegral torus(r, params, grid);
  const DiscreteSupport support = DiscreteSupport::of(params);

  Complex total = torus({});
  if (support.empty()) {
    return total;
  }

  std::map<std::pair<int, int>, Complex> w1;
  auto residue = [&](int e, int k) {
    auto key = std::make_pair(e, k);
    if (auto it = w1.find(key); it != w1.end()) {
      return it->second;
    }
    std::array<Complex, 3> rest{};
    for (int m = 0, n = 0; m < 4; ++m) {
      if (m != e) {
        rest[static_cast<std::size_t>(n++)] = params.t[static_cast<std::size_t>(m)];
      }
    }
    const Complex v =
        residue_weight(params.t[static_cast<std::size_t>(e)], k, rest[0], rest[1], rest[2], qq);
    w1.emplace(key, v);
    return v;
  };

  // Every discrete point e q^k with k <= N_e.
  std::vector<std::pair<int, int>> atoms;
  for (int e = 0; e < 4; ++e) {
    for (int k = 0; k <= support.n[static_cast<std::size_t>(e)]; ++k) {
      atoms.emplace_back(e, k);
    }
  }
  const auto n_atoms = static_cast<int>(atoms.size());
  for (int m = 1; m <= l; ++m) {
    const double prefactor = std::pow(2.0, m) * binom(l, m);
    std::vector<int> idx(static_cast<std::size_t>(m), 0);
    Complex part(0.0);
    while (true) {
      std::vector<Complex> fixed(static_cast<std::size_t>(m));
      Complex weight(1.0);
      for (int s = 0; s < m; ++s) {
        const auto [e, k] = atoms[static_cast<std::size_t>(idx[static_cast<std::size_t>(s)])];
        fixed[static_cast<std::size_t>(s)] = params.t[static_cast<std::size_t>(e)] * std::pow(qq, k);
        weight *= residue(e, k);
      }
      part += weight * torus(fixed);
      int s = 0;
      while (s < m && ++idx[static_cast<std::size_t>(s)] == n_atoms) {
        idx[static_cast<std::size_t>(s)] = 0;
        ++s;
      }
      if (s == m) {
        break;
      }
    }
    total += prefactor * part;
  }
  return total;
}

Complex gustafson_constant(int l, const KoornwinderParams<Complex>& params,
                           const TruncationPolicy& policy) {
  params.validate();
  if (l < 1) {
    throw DomainError("gustafson_constant needs l >= 1");
  }
  const double q = params.q.real();
  const Complex t = std::pow(q, params.k);
  const Complex prod = params.product();
  double factorial = 1.0;
  for (int i = 2; i <= l; ++i) {
    factorial *= i;
  }
  Complex value = std::pow(2.0, l) * factorial;
  const auto& tt = params.t;
  for (int j = 1; j <= l; ++j) {
    const Complex tj1 = std::pow(t, j - 1);
    Complex num = qpochhammer_inf(t, q, policy) *
                  qpochhammer_inf(std::pow(t, l + j - 2) * prod, q, policy);
    Complex den = qpochhammer_inf(std::pow(t, j), q, policy) * qpochhammer_inf(q, q, policy);
    for (int a = 0; a < 4; ++a) {
      for (int b = a + 1; b < 4; ++b) {
        den *= qpochhammer_inf(tt[static_cast<std::size_t>(a)] * tt[static_cast<std::size_t>(b)] *
                                   tj1,
                               q, policy);
      }
    }
    if (std::abs(den) == 0.0) {
      throw DomainError("pole in the closed-form total mass");
    }
    value *= num / den;
  }
  return value;
}

LaurentPoly<Complex> koornwinder_poly_gram(const WeightVector& lambda,
                                           const KoornwinderParams<Complex>& params,
                                           const QuadratureGrid& grid) {
  params.validate();
  if (lambda.lattice != Lattice::BC || lambda.size() < 1 || !is_dominant(lambda)) {
    throw DomainError("lambda must be a dominant BC weight: " + lambda.str());
  }
  std::vector<WeightVector> lower = dominant_downset(lambda);
  lower.pop_back();
  const LaurentPoly<Complex> top = orbit_sum_W<Complex>(lambda);
  if (lower.empty()) {
    return top;
  }
  std::vector<LaurentPoly<Complex>> m;
  for (const WeightVector& mu : lower) {
    m.push_back(orbit_sum_W<Complex>(mu));
  }
  const auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXcd gram(n, n);
  Eigen::VectorXcd rhs(n);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j <= i; ++j) {
      gram(i, j) = full_inner(m[static_cast<std::size_t>(j)], m[static_cast<std::size_t>(i)],
                              params, grid);
      gram(j, i) = std::conj(gram(i, j));
    }
    rhs(i) = full_inner(top, m[static_cast<std::size_t>(i)], params, grid);
  }
  // <top - sum c_j m_j, m_i> = 0.
  Eigen::FullPivLU<Eigen::MatrixXcd> lu(gram);
  if (!lu.isInvertible() || lu.rcond() < 1e-14) {
    throw ConvergenceError("Gram matrix numerically singular");
  }
  const Eigen::VectorXcd c = lu.solve(rhs);
  LaurentPoly<Complex> p = top;
  for (Eigen::Index j = 0; j < n; ++j) {
    p -= c(j) * m[static_cast<std::size_t>(j)];
  }
  return p;
}

double norm_K(const WeightVector& lambda, const KoornwinderParams<Complex>& params,
              const QuadratureGrid& grid) {
  LaurentPoly<Complex> p(lambda.size());
  try {
    p = koornwinder_poly(lambda, params);
  } catch (const EigenvalueCollision&) {
    p = koornwinder_poly_gram(lambda, params, grid);
  }
  const LaurentPoly<Complex> one = LaurentPoly<Complex>::constant(lambda.size(), Complex(1.0));
  return (full_inner(p, p, params, grid) / full_inner(one, one, params, grid)).real();
}

VerificationReport gustafson_check(int l, const KoornwinderParams<Complex>& params,
                                   const QuadratureGrid& grid, double tol) {
  const Stopwatch watch;
  const LaurentPoly<Complex> one = LaurentPoly<Complex>::constant(l, Complex(1.0));
  const Complex quad = full_inner(one, one, params, grid);
  const Complex closed = gustafson_constant(l, params);
  const double err = std::abs(quad - closed) / std::abs(closed);
  VerificationReport rep;
  rep.identity = "koornwinder_total_mass";
  rep.params = params_json(params);
  rep.params["l"] = l;
  rep.passed = err <= tol;
  rep.residual = err;
  rep.detail = "quadrature " + std::to_string(quad.real()) + " vs closed form " +
               std::to_string(closed.real()) + ", rel err " + std::to_string(err);
  rep.runtime_ms = watch.elapsed_ms();
  return rep;
}

VerificationReport orthogonality_check_K(int l, int max_degree,
                                         const KoornwinderParams<Complex>& params,
                                         const QuadratureGrid& grid, double tol) {
  const Stopwatch watch;
  const std::vector<WeightVector> weights = dominant_weights_up_to(l, max_degree);
  std::vector<LaurentPoly<Complex>> polys;
  for (const WeightVector& w : weights) {
    try {
      polys.push_back(koornwinder_poly(w, params));
    } catch (const EigenvalueCollision&) {
      polys.push_back(koornwinder_poly_gram(w, params, grid));
    }
  }
  const std::size_t m = polys.size();
  std::vector<double> sq(m);
  for (std::size_t i = 0; i < m; ++i) {
    sq[i] = std::abs(full_inner(polys[i], polys[i], params, grid));
  }
  double worst = 0;
  std::string worst_pair = "none";
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = i + 1; j < m; ++j) {
      const double c = std::abs(full_inner(polys[i], polys[j], params, grid)) /
                       std::sqrt(sq[i] * sq[j]);
      if (c > worst) {
        worst = c;
        worst_pair = weights[i].str() + "," + weights[j].str();
      }
    }
  }
  VerificationReport rep;
  rep.identity = "koornwinder_orthogonality";
  rep.params = params_json(params);
  rep.params["l"] = l;
  rep.params["max_degree"] = max_degree;
  rep.passed = worst <= tol;
  rep.residual = worst;
  rep.detail = std::to_string(m) + " polynomials, worst normalized inner product " +
               std::to_string(worst) + " at " + worst_pair;
  rep.runtime_ms = watch.elapsed_ms();
  return rep;
}

}  // namespace bcq
