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

#include "bcq/weights.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

#include "bcq/errors.hpp"

namespace bcq {

int WeightVector::total() const { return std::accumulate(entries.begin(), entries.end(), 0); }

std::string WeightVector::str() const {
  std::ostringstream out;
  out << '(';
  for (std::size_t i = 0; i < entries.size(); ++i) {
    out << (i ? "," : "") << entries[i];
  }
  out << ')';
  return out.str();
}

GrassmannShape::GrassmannShape(int n_, int l_) : n(n_), l(l_) {
  if (n < 2 || l < 1 || 2 * l > n) {
    throw DomainError("invalid Grassmannian shape n=" + std::to_string(n) +
                      ", l=" + std::to_string(l) + " (need n >= 2, 1 <= l <= n/2)");
  }
}

bool is_dominant(const WeightVector& mu) {
  for (int i = 0; i + 1 < mu.size(); ++i) {
    if (mu[i] < mu[i + 1]) {
      return false;
    }
  }
  if (mu.lattice == Lattice::BC && mu.size() > 0 && mu[mu.size() - 1] < 0) {
    return false;
  }
  return true;
}

bool dominance_leq(const WeightVector& mu, const WeightVector& lambda) {
  if (mu.lattice != lambda.lattice || mu.size() != lambda.size()) {
    throw DomainError("dominance comparison between " + mu.str() + " and " + lambda.str() +
                      " of different lattices");
  }
  long a = 0;
  long b = 0;
  const int last = mu.lattice == Lattice::A ? mu.size() - 1 : mu.size();
  for (int j = 0; j < last; ++j) {
    a += mu[j];
    b += lambda[j];
    if (a > b) {
      return false;
    }
  }
  if (mu.lattice == Lattice::A) {
    return mu.total() == lambda.total();
  }
  return true;
}

bool dominance_less(const WeightVector& mu, const WeightVector& lambda) {
  return mu != lambda && dominance_leq(mu, lambda);
}

bool extension_less(const WeightVector& mu, const WeightVector& lambda) {
  const int a = mu.total();
  const int b = lambda.total();
  if (a != b) {
    return a < b;
  }
  return mu.entries < lambda.entries;
}

std::vector<WeightVector> weyl_orbit(const WeightVector& mu) {
  if (mu.lattice != Lattice::BC) {
    throw DomainError("Weyl orbit is defined here for BC weights only");
  }
  std::vector<int> base(mu.entries);
  for (int& x : base) {
    x = std::abs(x);
  }
  std::sort(base.begin(), base.end());
  std::set<std::vector<int>> orbit;
  const int l = mu.size();
  do {
    for (unsigned mask = 0; mask < (1u << l); ++mask) {
      std::vector<int> v(base);
      for (int i = 0; i < l; ++i) {
        if (mask & (1u << i)) {
          v[i] = -v[i];
        }
      }
      orbit.insert(v);
    }
  } while (std::next_permutation(base.begin(), base.end()));
  std::vector<WeightVector> out;
  out.reserve(orbit.size());
  for (const auto& v : orbit) {
    out.push_back({v, Lattice::BC});
  }
  return out;
}

WeightVector dominant_representative(const WeightVector& mu) {
  WeightVector d = mu;
  for (int& x : d.entries) {
    x = std::abs(x);
  }
  std::sort(d.entries.begin(), d.entries.end(), std::greater<>());
  d.lattice = Lattice::BC;
  return d;
}

WeightVector natural_map(const WeightVector& lambda, const GrassmannShape& shape) {
  if (lambda.lattice != Lattice::A || lambda.size() != shape.n) {
    throw DomainError("natural map needs an A(" + std::to_string(shape.n) + ") weight, got " +
                      lambda.str());
  }
  const int n = shape.n;
  const int l = shape.l;
  for (int k = l; k < n - l; ++k) {
    if (lambda[k] != 0) {
      throw DomainError(lambda.str() + " has a nonzero middle block");
    }
  }
  for (int k = 0; k < l; ++k) {
    if (lambda[n - 1 - k] != -lambda[k]) {
      throw DomainError(lambda.str() + " lacks the mirrored tail");
    }
  }
  return {std::vector<int>(lambda.entries.begin(), lambda.entries.begin() + l), Lattice::BC};
}

WeightVector flat_map(const WeightVector& mu, const GrassmannShape& shape) {
  if (mu.lattice != Lattice::BC || mu.size() != shape.l) {
    throw DomainError("flat map needs a BC(" + std::to_string(shape.l) + ") weight, got " +
                      mu.str());
  }
  std::vector<int> out(static_cast<std::size_t>(shape.n), 0);
  for (int k = 0; k < shape.l; ++k) {
    out[k] = mu[k];
    out[shape.n - 1 - k] = -mu[k];
  }
  return {out, Lattice::A};
}

bool is_spherical(const WeightVector& lambda, const GrassmannShape& shape) {
  if (lambda.lattice != Lattice::A || lambda.size() != shape.n || !is_dominant(lambda)) {
    throw DomainError("is_spherical needs a dominant A(" + std::to_string(shape.n) +
                      ") weight, got " + lambda.str());
  }
  try {
    const WeightVector nat = natural_map(lambda, shape);
    return is_dominant(nat);
  } catch (const DomainError&) {
    return false;
  }
}

std::vector<WeightVector> strict_convex_hull(const WeightVector& mu) {
  if (mu.lattice != Lattice::BC || !is_dominant(mu)) {
    throw DomainError("strict convex hull needs a dominant BC weight, got " + mu.str());
  }
  const int l = mu.size();
  const int bound = l > 0 ? mu[0] : 0;
  std::vector<WeightVector> out;
  std::vector<int> v(static_cast<std::size_t>(l), -bound);
  while (true) {
    WeightVector nu{v, Lattice::BC};
    bool inside = true;
    for (const WeightVector& w : weyl_orbit(nu)) {
      if (!dominance_less(w, mu)) {
        inside = false;
        break;
      }
    }
    if (inside) {
      out.push_back(nu);
    }
    int i = l - 1;
    while (i >= 0 && v[i] == bound) {
      v[i] = -bound;
      --i;
    }
    if (i < 0) {
      break;
    }
    ++v[i];
  }
  return out;
}

WeightVector fundamental_spherical(int r, const GrassmannShape& shape) {
  if (r < 1 || r > shape.l) {
    throw DomainError("fundamental spherical weight index " + std::to_string(r) +
                      " outside [1," + std::to_string(shape.l) + "]");
  }
  std::vector<int> nat(static_cast<std::size_t>(shape.l), 0);
  std::fill(nat.begin(), nat.begin() + r, 1);
  return flat_map({nat, Lattice::BC}, shape);
}

namespace {

void downset_rec(const WeightVector& lambda, std::vector<int>& cur, int pos, int prefix,
                 int lambda_prefix, std::vector<WeightVector>& out) {
  const int l = lambda.size();
  if (pos == l) {
    out.push_back({cur, Lattice::BC});
    return;
  }
  const int cap = pos == 0 ? lambda[0] : cur[pos - 1];
  const int lp = lambda_prefix + lambda[pos];
  for (int x = 0; x <= cap; ++x) {
    if (prefix + x > lp) {
      break;
    }
    cur[pos] = x;
    downset_rec(lambda, cur, pos + 1, prefix + x, lp, out);
  }
}

}  // namespace

std::vector<WeightVector> dominant_downset(const WeightVector& lambda) {
  if (lambda.lattice != Lattice::BC || !is_dominant(lambda)) {
    throw DomainError("downset needs a dominant BC weight, got " + lambda.str());
  }
  std::vector<WeightVector> out;
  std::vector<int> cur(static_cast<std::size_t>(lambda.size()), 0);
  if (lambda.size() == 0) {
    return {lambda};
  }
  downset_rec(lambda, cur, 0, 0, 0, out);
  std::sort(out.begin(), out.end(), extension_less);
  return out;
}

std::vector<int> parse_entries(const std::string& text) {
  std::vector<int> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stoi(item, &used));
      if (item.find_first_not_of(" \t", used) != std::string::npos) {
        throw DomainError("");
      }
    } catch (const std::exception&) {
      throw DomainError("malformed integer list '" + text + "'");
    }
  }
  return out;
}

std::vector<WeightVector> dominant_weights_up_to(int l, int max_total) {
  if (l < 1 || max_total < 0) {
    throw DomainError("dominant_weights_up_to needs l >= 1 and max_total >= 0");
  }
  std::vector<WeightVector> out;
  std::vector<int> cur;
  auto rec = [&](auto&& self, int upper, int budget) -> void {
    if (static_cast<int>(cur.size()) == l) {
      out.push_back({cur, Lattice::BC});
      return;
    }
    for (int v = 0; v <= std::min(upper, budget); ++v) {
      cur.push_back(v);
      self(self, v, budget - v);
      cur.pop_back();
    }
  };
  rec(rec, max_total, max_total);
  std::sort(out.begin(), out.end(), extension_less);
  return out;
}

}  // namespace bcq
