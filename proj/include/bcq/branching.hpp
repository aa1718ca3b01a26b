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

#ifndef BCQ_BRANCHING_HPP
#define BCQ_BRANCHING_HPP

#include <map>
#include <utility>
#include <vector>

#include "bcq/report.hpp"
#include "bcq/weights.hpp"

namespace bcq {

/// (mu, nu) -> c^lambda_{mu,nu}, the multiplicity of s_mu(z_1..z_{n-l}) s_nu(z_{n-l+1}..z_n)
/// in s_lambda(z_1..z_n).
using BranchingTable = std::map<std::pair<WeightVector, WeightVector>, long>;

/// Restriction of the GL(n) irreducible lambda to GL(n-l) x GL(l), by
/// repeatedly removing the lex-largest block-dominant monomial. Negative
/// entries are allowed; the determinant twist shifts both blocks alike.
BranchingTable branching_coeffs(const WeightVector& lambda, const GrassmannShape& shape);

/// Multiplicity of the trivial block type (0, 0).
long trivial_multiplicity(const WeightVector& lambda, const GrassmannShape& shape);

/// sum c^lambda_{mu,nu} dim(mu) dim(nu) = dim(lambda).
VerificationReport branching_dimension_check(const WeightVector& lambda,
                                             const GrassmannShape& shape);

/// All dominant A(n) weights with every |lambda_i| <= bound, increasing.
std::vector<WeightVector> bounded_dominant_weights(int n, int bound);

/// For every dominant lambda with |lambda_i| <= entry_bound, the trivial block
/// multiplicity is at most one, and it is one exactly for spherical lambda.
VerificationReport gelfand_check(const GrassmannShape& shape, int entry_bound);

}  // namespace bcq

#endif  // BCQ_BRANCHING_HPP
