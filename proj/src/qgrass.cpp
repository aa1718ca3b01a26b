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

#include "bcq/qgrass.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <string>

#include <unsupported/Eigen/KroneckerProduct>

#include "bcq/errors.hpp"
#include "bcq/params.hpp"
#include "bcq/qseries.hpp"

namespace bcq {

namespace {

template <class S>
SquareMatrix<S> identity(int n) {
  return SquareMatrix<S>::Identity(n, n);
}

template <class S>
SquareMatrix<S> inverse(const SquareMatrix<S>& m) {
  const Eigen::FullPivLU<SquareMatrix<S>> lu(m);
  if (!lu.isInvertible()) {
    throw DomainError("matrix is singular");
  }
  return lu.inverse();
}

void require_dim(int n) {
  if (n < 1) {
    throw DomainError("dimension must be positive");
  }
}

template <class S>
void require_positive(const S& q) {
  if (!(q > S(0))) {
    throw DomainError("q must be positive: " + detail::show(q));
  }
}

template <class S>
nlohmann::json base_params(int n, const S& q) {
  return {{"n", n}, {"q", detail::show(q)}};
}

template <class S>
VerificationReport matrix_report(const std::string& identity_name, nlohmann::json params,
                                 const SquareMatrix<S>& lhs, const SquareMatrix<S>& rhs,
                                 const Stopwatch& watch) {
  VerificationReport rep;
  rep.identity = identity_name;
  rep.params = std::move(params);
  rep.exact = is_exact_v<S>;
  double residual = 0;
  double scale = 1;
  for (Eigen::Index i = 0; i < lhs.rows(); ++i) {
    for (Eigen::Index j = 0; j < lhs.cols(); ++j) {
      residual = std::max(residual, magnitude(S(lhs(i, j) - rhs(i, j))));
      scale = std::max(scale, magnitude(lhs(i, j)));
    }
  }
  if constexpr (is_exact_v<S>) {
    rep.passed = (lhs.array() == rhs.array()).all();
    if (!rep.passed) {
      rep.residual = residual;
    }
  } else {
    rep.passed = residual <= 1e-10 * scale;
    rep.residual = residual;
  }
  rep.detail = rep.passed ? "both sides agree" : "max entry difference " + std::to_string(residual);
  rep.runtime_ms = watch.elapsed_ms();
  return rep;
}

template <class S>
double vector_residual(const QExtVector<S>& a, const QExtVector<S>& b) {
  return (a - b).max_abs();
}

template <class S>
bool vectors_agree(const QExtVector<S>& a, const QExtVector<S>& b, double* residual) {
  *residual = vector_residual(a, b);
  if constexpr (is_exact_v<S>) {
    return *residual == 0;
  } else {
    return *residual <= 1e-10 * std::max(1.0, a.max_abs());
  }
}

void require_space(TensorSpace actual, TensorSpace expected, const char* what) {
  if (actual != expected) {
    throw DomainError(std::string(what) + ": input lives in the wrong tensor space");
  }
}

Subset sorted_union(const Subset& a, const Subset& b) {
  Subset out;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
  return out;
}

std::vector<int> concat(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

// Words of signed basis labels: +i stands for v_i and -i for v*_i.
template <class S>
using WordMap = std::map<std::vector<int>, S>;

template <class S>
void add_word(WordMap<S>& m, const std::vector<int>& key, const S& c) {
  auto [it, inserted] = m.emplace(key, c);
  if (!inserted) {
    it->second += c;
    if (scalar_is_zero(it->second)) {
      m.erase(it);
    }
  } else if (scalar_is_zero(c)) {
    m.erase(it);
  }
}

// beta on the adjacent pair (v*_i, v_j) at positions p, p + 1.
template <class S>
WordMap<S> apply_beta_at(const WordMap<S>& words, std::size_t p, const S& q) {
  const S qinv = S(1) / q;
  WordMap<S> out;
  for (const auto& [word, c] : words) {
    const int i = -word[p];
    const int j = word[p + 1];
    std::vector<int> w = word;
    w[p] = j;
    w[p + 1] = -i;
    add_word(out, w, i == j ? S(c * qinv) : c);
    if (i == j) {
      const S corr = c * (qinv - q);
      for (int k = 1; k < j; ++k) {
        w[p] = k;
        w[p + 1] = -k;
        add_word(out, w, corr);
      }
    }
  }
  return out;
}

// All r-subsets of `pool` (ascending).
void subsets_of(const std::vector<int>& pool, int r, std::size_t start, Subset& cur,
                std::vector<Subset>& out) {
  if (static_cast<int>(cur.size()) == r) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < pool.size(); ++i) {
    cur.push_back(pool[i]);
    subsets_of(pool, r, i + 1, cur, out);
    cur.pop_back();
  }
}

// Subsets I of [1,l] u [l',n] with |I| = r and I, I' disjoint, paired with I'.
std::vector<std::pair<Subset, Subset>> mirrored_subsets(const GrassmannShape& shape, int r) {
  const int n = shape.n;
  const int l = shape.l;
  std::vector<int> pool;
  for (int k = 1; k <= l; ++k) {
    pool.push_back(k);
  }
  for (int k = n - l + 1; k <= n; ++k) {
    pool.push_back(k);
  }
  std::vector<Subset> all;
  Subset cur;
  subsets_of(pool, r, 0, cur, all);
  std::vector<std::pair<Subset, Subset>> out;
  for (const Subset& s : all) {
    Subset mirror;
    for (int i : s) {
      mirror.push_back(n - i + 1);
    }
    std::sort(mirror.begin(), mirror.end());
    Subset both;
    std::set_intersection(s.begin(), s.end(), mirror.begin(), mirror.end(),
                          std::back_inserter(both));
    if (both.empty()) {
      out.emplace_back(s, mirror);
    }
  }
  return out;
}

void require_rank(const GrassmannShape& shape, int r, int lowest) {
  if (r < lowest || r > shape.l) {
    throw DomainError("r outside [" + std::to_string(lowest) + ", l]");
  }
}

template <class S>
nlohmann::json shape_params(const GrassmannShape& shape, int r, double sigma, const S& q) {
  return {{"n", shape.n}, {"l", shape.l}, {"r", r}, {"sigma", sigma}, {"q", detail::show(q)}};
}

template <class S>
VerificationReport pair_report(const std::string& name, nlohmann::json params,
                               const QExtVector<S>& lhs, const QExtVector<S>& rhs,
                               const QExtVector<S>& lhs_tilde, const QExtVector<S>& rhs_tilde,
                               const Stopwatch& watch) {
  VerificationReport rep;
  rep.identity = name;
  rep.params = std::move(params);
  rep.exact = is_exact_v<S>;
  double res = 0;
  double res_tilde = 0;
  const bool ok = vectors_agree(lhs, rhs, &res);
  const bool ok_tilde = vectors_agree(lhs_tilde, rhs_tilde, &res_tilde);
  rep.passed = ok && ok_tilde && !rhs.is_zero();
  if (!rep.passed || !is_exact_v<S>) {
    rep.residual = std::max(res, res_tilde);
  }
  rep.detail = "residual " + std::to_string(res) + ", tilde residual " + std::to_string(res_tilde);
  rep.runtime_ms = watch.elapsed_ms();
  return rep;
}

}  // namespace

template <class S>
S q_power(const S& q, double exponent) {
  require_positive(q);
  if constexpr (is_exact_v<S>) {
    if (std::floor(exponent) != exponent || std::abs(exponent) > 1e6) {
      throw DomainError("exact arithmetic needs an integral exponent of q, got " +
                        std::to_string(exponent));
    }
    return ipow(q, static_cast<long>(exponent));
  } else {
    return std::pow(q, static_cast<S>(exponent));
  }
}

template <class S>
SquareMatrix<S> kron(const SquareMatrix<S>& a, const SquareMatrix<S>& b) {
  return Eigen::kroneckerProduct(a, b).eval();
}

template <class S>
SquareMatrix<S> flip(int n) {
  require_dim(n);
  SquareMatrix<S> p = SquareMatrix<S>::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      p(j * n + i, i * n + j) = S(1);
    }
  }
  return p;
}

template <class S>
SquareMatrix<S> partial_transpose_first(const SquareMatrix<S>& m, int n) {
  if (m.rows() != n * n || m.cols() != n * n) {
    throw DomainError("partial transpose needs an n^2 x n^2 matrix");
  }
  SquareMatrix<S> out(n * n, n * n);
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      for (int j = 0; j < n; ++j) {
        for (int l = 0; l < n; ++l) {
          out(i * n + k, j * n + l) = m(j * n + k, i * n + l);
        }
      }
    }
  }
  return out;
}

namespace {

template <class S>
SquareMatrix<S> r_family(int n, const S& diag, const S& offdiag) {
  if (n < 2) {
    throw DomainError("the R-matrix needs n >= 2");
  }
  SquareMatrix<S> r = SquareMatrix<S>::Zero(n * n, n * n);
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) {
      r(i * n + j, i * n + j) = i == j ? diag : S(1);
      if (i > j) {
        // e_ij (x) e_ji maps v_j (x) v_i to v_i (x) v_j.
        r(i * n + j, j * n + i) = offdiag;
      }
    }
  }
  return r;
}

}  // namespace

template <class S>
SquareMatrix<S> r_matrix(int n, const S& q) {
  require_positive(q);
  return r_family<S>(n, q, q - S(1) / q);
}

template <class S>
SquareMatrix<S> r_minus(int n, const S& q) {
  require_positive(q);
  return r_family<S>(n, S(1) / q, S(1) / q - q);
}

template <class S>
SquareMatrix<S> r_plus(int n, const S& q) {
  const SquareMatrix<S> p = flip<S>(n);
  return p * r_matrix(n, q) * p;
}

template <class S>
SquareMatrix<S> j_sigma(const GrassmannShape& shape, double sigma, const S& q) {
  const int n = shape.n;
  const int l = shape.l;
  const S qs = q_power(q, sigma);
  SquareMatrix<S> j = SquareMatrix<S>::Zero(n, n);
  for (int k = 1; k <= l; ++k) {
    const int kp = n - k + 1;
    j(k - 1, k - 1) = S(1) - qs * qs;
    j(k - 1, kp - 1) = -qs;
    j(kp - 1, k - 1) = -qs;
  }
  for (int k = l + 1; k < n - l + 1; ++k) {
    j(k - 1, k - 1) = S(1);
  }
  return j;
}

template <class S>
SquareMatrix<S> j_infty(const GrassmannShape& shape) {
  SquareMatrix<S> j = SquareMatrix<S>::Zero(shape.n, shape.n);
  for (int k = 0; k < shape.n - shape.l; ++k) {
    j(k, k) = S(1);
  }
  return j;
}

template <class S>
SquareMatrix<S> j_tilde_sigma(const GrassmannShape& shape, double sigma, const S& q) {
  const int n = shape.n;
  const int l = shape.l;
  SquareMatrix<S> j = SquareMatrix<S>::Zero(n, n);
  const S diag = S(1) - q_power(q, 2.0 * (n - 2 * l) + 2.0 * sigma);
  for (int k = 1; k <= l; ++k) {
    const int kp = n - k + 1;
    j(k - 1, k - 1) = diag;
    j(k - 1, kp - 1) = -q_power(q, sigma - 1 + 2.0 * (k - l));
    j(kp - 1, k - 1) = -q_power(q, sigma - 1 + 2.0 * (kp - l));
  }
  for (int k = l + 1; k < n - l + 1; ++k) {
    j(k - 1, k - 1) = S(1);
  }
  return j;
}

template <class S>
VerificationReport reflection_check(const SquareMatrix<S>& x, int n, const S& q) {
  const Stopwatch watch;
  if (x.rows() != n || x.cols() != n) {
    throw DomainError("reflection equation needs an n x n matrix");
  }
  const SquareMatrix<S> id = identity<S>(n);
  const SquareMatrix<S> p = flip<S>(n);
  const SquareMatrix<S> r12 = r_matrix(n, q);
  const SquareMatrix<S> r12_inv = r_minus(n, q);
  const SquareMatrix<S> r21 = p * r12 * p;
  const SquareMatrix<S> r21_inv = p * r12_inv * p;
  const SquareMatrix<S> x1 = kron(x, id);
  const SquareMatrix<S> x2 = kron(id, x);
  const SquareMatrix<S> lhs = r12 * x1 * r12_inv * x2;
  const SquareMatrix<S> rhs = x2 * r21_inv * x1 * r21;
  return matrix_report<S>("reflection_equation", base_params(n, q), lhs, rhs, watch);
}

template <class S>
VerificationReport refalt_check(const SquareMatrix<S>& jt, const SquareMatrix<S>& js, int n,
                                const S& q) {
  const Stopwatch watch;
  if (jt.rows() != n || jt.cols() != n || js.rows() != n || js.cols() != n) {
    throw DomainError("linear reflection equation needs n x n matrices");
  }
  const SquareMatrix<S> id = identity<S>(n);
  const SquareMatrix<S> p = flip<S>(n);
  const SquareMatrix<S> a = partial_transpose_first<S>(p * r_minus(n, q) * p, n);
  const SquareMatrix<S> b = partial_transpose_first<S>(r_matrix(n, q), n);
  const SquareMatrix<S> j1 = kron(js, id);
  const SquareMatrix<S> jt2 = kron(id, jt);
  const SquareMatrix<S> lhs = j1 * a * jt2 * inverse(a);
  const SquareMatrix<S> rhs = b * jt2 * inverse(b) * j1;
  return matrix_report<S>("linear_reflection_equation", base_params(n, q), lhs, rhs, watch);
}

template <class S>
VerificationReport qybe_check(int n, const S& q) {
  const Stopwatch watch;
  const SquareMatrix<S> id = identity<S>(n);
  const SquareMatrix<S> r = r_matrix(n, q);
  const SquareMatrix<S> r12 = kron(r, id);
  const SquareMatrix<S> r23 = kron(id, r);
  const SquareMatrix<S> p23 = kron(id, flip<S>(n));
  const SquareMatrix<S> r13 = p23 * r12 * p23;
  const SquareMatrix<S> lhs = r12 * r13 * r23;
  const SquareMatrix<S> rhs = r23 * r13 * r12;
  return matrix_report<S>("quantum_yang_baxter", base_params(n, q), lhs, rhs, watch);
}

template <class S>
VerificationReport braid_check(int n, const S& q) {
  const Stopwatch watch;
  const SquareMatrix<S> id = identity<S>(n);
  const SquareMatrix<S> gamma = flip<S>(n) * r_matrix(n, q);
  const SquareMatrix<S> g1 = kron(gamma, id);
  const SquareMatrix<S> g2 = kron(id, gamma);
  return matrix_report<S>("braid_relation", base_params(n, q), g1 * g2 * g1, g2 * g1 * g2, watch);
}

template <class S>
S qsgn(const Subset& i, const Subset& j, const S& q) {
  long inversions = 0;
  for (int a : i) {
    for (int b : j) {
      if (a == b) {
        return S(0);
      }
      inversions += a > b ? 1 : 0;
    }
  }
  return ipow(S(-q), inversions);
}

template <class S>
WedgeTerm<S> wedge(const Subset& i, const Subset& j, const S& q) {
  const S c = qsgn(i, j, q);
  return scalar_is_zero(c) ? WedgeTerm<S>{S(0), {}} : WedgeTerm<S>{c, sorted_union(i, j)};
}

template <class S>
WedgeTerm<S> wedge_dual(const Subset& i, const Subset& j, const S& q) {
  const S c = qsgn(j, i, q);
  return scalar_is_zero(c) ? WedgeTerm<S>{S(0), {}} : WedgeTerm<S>{c, sorted_union(i, j)};
}

namespace {

template <class S>
WedgeTerm<S> word_normal_form(const std::vector<int>& word, const S& q, bool dual) {
  long count = 0;
  for (std::size_t a = 0; a < word.size(); ++a) {
    for (std::size_t b = a + 1; b < word.size(); ++b) {
      if (word[a] == word[b]) {
        return {S(0), {}};
      }
      count += (dual ? word[a] < word[b] : word[a] > word[b]) ? 1 : 0;
    }
  }
  Subset set = word;
  std::sort(set.begin(), set.end());
  return {ipow(S(-q), count), set};
}

}  // namespace

template <class S>
WedgeTerm<S> wedge_word(const std::vector<int>& word, const S& q) {
  return word_normal_form(word, q, false);
}

template <class S>
WedgeTerm<S> wedge_dual_word(const std::vector<int>& word, const S& q) {
  return word_normal_form(word, q, true);
}

template <class S>
void QExtVector<S>::add(const std::vector<int>& key, const S& c) {
  add_word(coeff, key, c);
}

template <class S>
S QExtVector<S>::at(const std::vector<int>& key) const {
  const auto it = coeff.find(key);
  return it == coeff.end() ? S(0) : it->second;
}

template <class S>
double QExtVector<S>::max_abs() const {
  double m = 0;
  for (const auto& [k, c] : coeff) {
    m = std::max(m, magnitude(c));
  }
  return m;
}

template <class S>
QExtVector<S>& QExtVector<S>::operator+=(const QExtVector& o) {
  if (o.space != space || o.n != n || o.r != r) {
    throw ConsistencyError("adding vectors from different tensor spaces");
  }
  for (const auto& [k, c] : o.coeff) {
    add(k, c);
  }
  return *this;
}

template <class S>
QExtVector<S>& QExtVector<S>::operator*=(const S& c) {
  if (scalar_is_zero(c)) {
    coeff.clear();
    return *this;
  }
  for (auto& [k, v] : coeff) {
    v *= c;
  }
  return *this;
}

template <class S>
QExtVector<S> pair_vector(const SquareMatrix<S>& m) {
  QExtVector<S> out(TensorSpace::Pairs, static_cast<int>(m.rows()), 1);
  for (int i = 0; i < m.rows(); ++i) {
    for (int j = 0; j < m.cols(); ++j) {
      out.add({i + 1, j + 1}, m(i, j));
    }
  }
  return out;
}

template <class S>
QExtVector<S> tensor_power(const QExtVector<S>& t, int r) {
  require_space(t.space, TensorSpace::Pairs, "tensor_power");
  if (r < 1) {
    throw DomainError("tensor power needs r >= 1");
  }
  QExtVector<S> out = t;
  for (int step = 1; step < r; ++step) {
    QExtVector<S> next(TensorSpace::Pairs, t.n, out.r + t.r);
    for (const auto& [ka, ca] : out.coeff) {
      for (const auto& [kb, cb] : t.coeff) {
        next.add(concat(ka, kb), ca * cb);
      }
    }
    out = std::move(next);
  }
  return out;
}

template <class S>
QExtVector<S> beta_map(const QExtVector<S>& t, const S& q) {
  require_space(t.space, TensorSpace::DualPair, "beta_map");
  WordMap<S> words;
  for (const auto& [k, c] : t.coeff) {
    add_word(words, {-k[0], k[1]}, c);
  }
  QExtVector<S> out(TensorSpace::Pairs, t.n, 1);
  for (const auto& [w, c] : apply_beta_at(words, 0, q)) {
    out.add({w[0], -w[1]}, c);
  }
  return out;
}

template <class S>
QExtVector<S> psi_r(const QExtVector<S>& t, const S& q) {
  require_space(t.space, TensorSpace::Pairs, "psi_r");
  const int r = t.r;
  WordMap<S> words;
  for (const auto& [k, c] : t.coeff) {
    std::vector<int> w(k.size());
    for (std::size_t a = 0; a < k.size(); ++a) {
      w[a] = a % 2 == 0 ? k[a] : -k[a];
    }
    add_word(words, w, c);
  }
  // Stage j moves the j-th V factor left past V*_{j-1}, ..., V*_1.
  for (int j = 2; j <= r; ++j) {
    for (int p = 2 * j - 3; p >= j - 1; --p) {
      words = apply_beta_at(words, static_cast<std::size_t>(p), q);
    }
  }
  QExtVector<S> out(TensorSpace::Split, t.n, r);
  for (const auto& [w, c] : words) {
    std::vector<int> key(w.size());
    for (std::size_t a = 0; a < w.size(); ++a) {
      key[a] = std::abs(w[a]);
    }
    out.add(key, c);
  }
  return out;
}

template <class S>
QExtVector<S> psi_hat_r(const QExtVector<S>& t, const S& q) {
  const QExtVector<S> split = psi_r(t, q);
  const auto r = static_cast<std::ptrdiff_t>(t.r);
  QExtVector<S> out(TensorSpace::Exterior, t.n, t.r);
  for (const auto& [k, c] : split.coeff) {
    const WedgeTerm<S> a = wedge_word(std::vector<int>(k.begin(), k.begin() + r), q);
    if (scalar_is_zero(a.coeff)) {
      continue;
    }
    const WedgeTerm<S> b = wedge_dual_word(std::vector<int>(k.begin() + r, k.end()), q);
    if (scalar_is_zero(b.coeff)) {
      continue;
    }
    out.add(concat(a.set, b.set), c * a.coeff * b.coeff);
  }
  return out;
}

template <class S>
std::vector<PhiTerm<S>> phi_hat(const Subset& i, int j, const S& q) {
  if (!std::binary_search(i.begin(), i.end(), j)) {
    return {{S(1), j, i}};
  }
  const S qinv = S(1) / q;
  std::vector<PhiTerm<S>> out{{qinv, j, i}};
  Subset rest;
  std::copy_if(i.begin(), i.end(), std::back_inserter(rest), [j](int x) { return x != j; });
  const S denom = qsgn(rest, Subset{j}, q);
  for (int m = 1; m < j; ++m) {
    const S num = qsgn(rest, Subset{m}, q);
    if (scalar_is_zero(num)) {
      continue;
    }
    out.push_back({S(-(q - qinv) * num / denom), m, sorted_union(rest, Subset{m})});
  }
  return out;
}

template <class S>
QExtVector<S> theta_hat_r(const QExtVector<S>& u, const QExtVector<S>& w, const S& q) {
  require_space(u.space, TensorSpace::Exterior, "theta_hat_r");
  require_space(w.space, TensorSpace::Pairs, "theta_hat_r");
  if (w.r != 1 || u.r < 1 || u.n != w.n) {
    throw DomainError("theta_hat_r needs u of degree >= 1 and w in V (x) V*");
  }
  const auto d = static_cast<std::ptrdiff_t>(u.r);
  QExtVector<S> out(TensorSpace::Exterior, u.n, u.r + 1);
  for (const auto& [ku, cu] : u.coeff) {
    const Subset iset(ku.begin(), ku.begin() + d);
    const Subset jset(ku.begin() + d, ku.end());
    for (const auto& [kw, cw] : w.coeff) {
      for (const PhiTerm<S>& term : phi_hat(jset, kw[0], q)) {
        const WedgeTerm<S> a = wedge(iset, Subset{term.m}, q);
        if (scalar_is_zero(a.coeff)) {
          continue;
        }
        const WedgeTerm<S> b = wedge_dual(term.set, Subset{kw[1]}, q);
        if (scalar_is_zero(b.coeff)) {
          continue;
        }
        out.add(concat(a.set, b.set), cu * cw * term.coeff * a.coeff * b.coeff);
      }
    }
  }
  return out;
}

template <class S>
QExtVector<S> principal_term(const QExtVector<S>& v, const GrassmannShape& shape) {
  if (v.space == TensorSpace::Pairs && v.r == 1) {
    // V (x) V* is L^1(V) (x) L^1(V*) with the same keys.
    QExtVector<S> as_exterior = v;
    as_exterior.space = TensorSpace::Exterior;
    return principal_term(as_exterior, shape);
  }
  require_space(v.space, TensorSpace::Exterior, "principal_term");
  const int n = shape.n;
  const int l = shape.l;
  if (v.n != n) {
    throw DomainError("principal_term: dimension mismatch");
  }
  require_rank(shape, v.r, 1);
  QExtVector<S> out(TensorSpace::Exterior, n, v.r);
  std::vector<int> weight(static_cast<std::size_t>(n));
  for (const auto& [k, c] : v.coeff) {
    std::fill(weight.begin(), weight.end(), 0);
    for (std::size_t a = 0; a < k.size(); ++a) {
      weight[static_cast<std::size_t>(k[a] - 1)] += a < static_cast<std::size_t>(v.r) ? 1 : -1;
    }
    bool on_orbit = true;
    int nonzero = 0;
    for (int i = 0; i < n && on_orbit; ++i) {
      const int wi = weight[static_cast<std::size_t>(i)];
      const int mirror = weight[static_cast<std::size_t>(n - 1 - i)];
      if (i < l) {
        on_orbit = std::abs(wi) <= 1 && mirror == -wi;
        nonzero += wi != 0 ? 1 : 0;
      } else if (i < n - l) {
        on_orbit = wi == 0;
      }
    }
    if (on_orbit && nonzero == v.r) {
      out.add(k, c);
    }
  }
  return out;
}

template <class S>
QExtVector<S> u_vector(const GrassmannShape& shape, int r) {
  require_rank(shape, r, 1);
  QExtVector<S> out(TensorSpace::Exterior, shape.n, r);
  for (const auto& [i, mirror] : mirrored_subsets(shape, r)) {
    out.add(concat(i, mirror), S(1));
  }
  return out;
}

template <class S>
QExtVector<S> u_tilde_vector(const GrassmannShape& shape, int r, const S& q) {
  require_rank(shape, r, 1);
  QExtVector<S> out(TensorSpace::Exterior, shape.n, r);
  for (const auto& [i, mirror] : mirrored_subsets(shape, r)) {
    long e = 0;
    for (int x : mirror) {
      e += 2L * (shape.n - x);
    }
    out.add(concat(i, mirror), ipow(q, e));
  }
  return out;
}

template <class S>
FixedVectors<S> w_vectors(const GrassmannShape& shape, double sigma, const S& q) {
  return {pair_vector(j_sigma(shape, sigma, q)), pair_vector(j_tilde_sigma(shape, sigma, q)),
          pair_vector(j_infty<S>(shape))};
}

template <class S>
S intertwiner_constant(int r, double sigma, const S& q) {
  const S q2 = q * q;
  return ipow(S(q_power(q, sigma) / (q2 - S(1))), r) * qpochhammer_exact(q2, q2, r);
}

template <class S>
S intertwiner_constant_tilde(const GrassmannShape& shape, int r, double sigma, const S& q) {
  const S q2 = q * q;
  const S lead = q_power(q, sigma - 1 + 2.0 * (1 - shape.l));
  return ipow(S(lead / (q2 - S(1))), r) * qpochhammer_exact(q2, q2, r);
}

template <class S>
S theta_constant(int r, double sigma, const S& q) {
  const S q2 = q * q;
  return -q_power(q, sigma) * (S(1) - ipow(q2, r)) / (S(1) - q2);
}

template <class S>
S theta_constant_tilde(const GrassmannShape& shape, int r, double sigma, const S& q) {
  const S q2 = q * q;
  return -q_power(q, sigma - 1 + 2.0 * (1 - shape.l)) * (S(1) - ipow(q2, r)) / (S(1) - q2);
}

template <class S>
VerificationReport intertwiner_check(const GrassmannShape& shape, int r, double sigma,
                                     const S& q) {
  const Stopwatch watch;
  require_rank(shape, r, 1);
  const FixedVectors<S> fv = w_vectors(shape, sigma, q);
  const QExtVector<S> lhs = principal_term(psi_hat_r(tensor_power(fv.w_sigma, r), q), shape);
  const QExtVector<S> rhs = u_vector<S>(shape, r) * intertwiner_constant(r, sigma, q);
  const QExtVector<S> lhs_t = principal_term(psi_hat_r(tensor_power(fv.w_tilde, r), q), shape);
  const QExtVector<S> rhs_t =
      u_tilde_vector(shape, r, q) * intertwiner_constant_tilde(shape, r, sigma, q);
  return pair_report("intertwiner_principal_term", shape_params(shape, r, sigma, q), lhs, rhs,
                     lhs_t, rhs_t, watch);
}

template <class S>
VerificationReport theta_check(const GrassmannShape& shape, int r, double sigma, const S& q) {
  const Stopwatch watch;
  require_rank(shape, r, 2);
  const FixedVectors<S> fv = w_vectors(shape, sigma, q);
  const QExtVector<S> lhs =
      principal_term(theta_hat_r(u_vector<S>(shape, r - 1), fv.w_sigma, q), shape);
  const QExtVector<S> rhs = u_vector<S>(shape, r) * theta_constant(r, sigma, q);
  const QExtVector<S> lhs_t =
      principal_term(theta_hat_r(u_tilde_vector(shape, r - 1, q), fv.w_tilde, q), shape);
  const QExtVector<S> rhs_t = u_tilde_vector(shape, r, q) * theta_constant_tilde(shape, r, sigma, q);
  return pair_report("theta_principal_term", shape_params(shape, r, sigma, q), lhs, rhs, lhs_t,
                     rhs_t, watch);
}

template <class S>
VerificationReport factorization_check(int n, int r, const S& q, std::uint32_t seed, int terms) {
  const Stopwatch watch;
  if (r < 2 || n < 1 || terms < 1) {
    throw DomainError("factorization check needs r >= 2, n >= 1 and terms >= 1");
  }
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> index(1, n);
  std::uniform_int_distribution<int> value(-3, 3);
  QExtVector<S> t(TensorSpace::Pairs, n, r);
  for (int a = 0; a < terms; ++a) {
    std::vector<int> key(static_cast<std::size_t>(2 * r));
    for (int& x : key) {
      x = index(gen);
    }
    t.add(key, S(value(gen)));
  }
  const QExtVector<S> lhs = psi_hat_r(t, q);
  QExtVector<S> rhs(TensorSpace::Exterior, n, r);
  for (const auto& [k, c] : t.coeff) {
    QExtVector<S> head(TensorSpace::Pairs, n, r - 1);
    head.add(std::vector<int>(k.begin(), k.end() - 2), c);
    QExtVector<S> tail(TensorSpace::Pairs, n, 1);
    tail.add({k[k.size() - 2], k.back()}, S(1));
    rhs += theta_hat_r(psi_hat_r(head, q), tail, q);
  }
  VerificationReport rep;
  rep.identity = "psi_factorization";
  rep.params = {{"n", n}, {"r", r}, {"q", detail::show(q)}, {"seed", seed}, {"terms", terms}};
  rep.exact = is_exact_v<S>;
  double res = 0;
  rep.passed = vectors_agree(lhs, rhs, &res);
  if (!rep.passed || !is_exact_v<S>) {
    rep.residual = res;
  }
  rep.detail = std::to_string(lhs.coeff.size()) + " exterior terms, residual " + std::to_string(res);
  rep.runtime_ms = watch.elapsed_ms();
  return rep;
}

template <class S>
S casimir_eigenvalue(const WeightVector& lambda, const S& q) {
  const int n = lambda.size();
  S sum(0);
  for (int k = 1; k <= n; ++k) {
    sum += ipow(q, 2L * (lambda[k - 1] + n - k));
  }
  return sum;
}

#define BCQ_QGRASS_INSTANTIATE(S)                                                         \
  template S q_power<S>(const S&, double);                                               \
  template SquareMatrix<S> kron<S>(const SquareMatrix<S>&, const SquareMatrix<S>&);      \
  template SquareMatrix<S> flip<S>(int);                                                 \
  template SquareMatrix<S> partial_transpose_first<S>(const SquareMatrix<S>&, int);      \
  template SquareMatrix<S> r_matrix<S>(int, const S&);                                   \
  template SquareMatrix<S> r_minus<S>(int, const S&);                                    \
  template SquareMatrix<S> r_plus<S>(int, const S&);                                     \
  template SquareMatrix<S> j_sigma<S>(const GrassmannShape&, double, const S&);          \
  template SquareMatrix<S> j_infty<S>(const GrassmannShape&);                            \
  template SquareMatrix<S> j_tilde_sigma<S>(const GrassmannShape&, double, const S&);    \
  template VerificationReport reflection_check<S>(const SquareMatrix<S>&, int, const S&); \
  template VerificationReport refalt_check<S>(const SquareMatrix<S>&, const SquareMatrix<S>&, \
                                              int, const S&);                            \
  template VerificationReport qybe_check<S>(int, const S&);                              \
  template VerificationReport braid_check<S>(int, const S&);                             \
  template S qsgn<S>(const Subset&, const Subset&, const S&);                            \
  template WedgeTerm<S> wedge<S>(const Subset&, const Subset&, const S&);                \
  template WedgeTerm<S> wedge_dual<S>(const Subset&, const Subset&, const S&);           \
  template WedgeTerm<S> wedge_word<S>(const std::vector<int>&, const S&);                \
  template WedgeTerm<S> wedge_dual_word<S>(const std::vector<int>&, const S&);           \
  template struct QExtVector<S>;                                                         \
  template QExtVector<S> pair_vector<S>(const SquareMatrix<S>&);                         \
  template QExtVector<S> tensor_power<S>(const QExtVector<S>&, int);                     \
  template QExtVector<S> beta_map<S>(const QExtVector<S>&, const S&);                    \
  template QExtVector<S> psi_r<S>(const QExtVector<S>&, const S&);                       \
  template QExtVector<S> psi_hat_r<S>(const QExtVector<S>&, const S&);                   \
  template std::vector<PhiTerm<S>> phi_hat<S>(const Subset&, int, const S&);             \
  template QExtVector<S> theta_hat_r<S>(const QExtVector<S>&, const QExtVector<S>&,      \
                                        const S&);                                       \
  template QExtVector<S> principal_term<S>(const QExtVector<S>&, const GrassmannShape&); \
  template QExtVector<S> u_vector<S>(const GrassmannShape&, int);                        \
  template QExtVector<S> u_tilde_vector<S>(const GrassmannShape&, int, const S&);        \
  template FixedVectors<S> w_vectors<S>(const GrassmannShape&, double, const S&);        \
  template S intertwiner_constant<S>(int, double, const S&);                             \
  template S intertwiner_constant_tilde<S>(const GrassmannShape&, int, double, const S&); \
  template S theta_constant<S>(int, double, const S&);                                   \
  template S theta_constant_tilde<S>(const GrassmannShape&, int, double, const S&);      \
  template VerificationReport intertwiner_check<S>(const GrassmannShape&, int, double,   \
                                                   const S&);                            \
  template VerificationReport theta_check<S>(const GrassmannShape&, int, double, const S&); \
  template VerificationReport factorization_check<S>(int, int, const S&, std::uint32_t, int); \
  template S casimir_eigenvalue<S>(const WeightVector&, const S&);

BCQ_QGRASS_INSTANTIATE(Rational)
BCQ_QGRASS_INSTANTIATE(double)

}  // namespace bcq
