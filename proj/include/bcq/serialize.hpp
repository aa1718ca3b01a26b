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

#ifndef BCQ_SERIALIZE_HPP
#define BCQ_SERIALIZE_HPP

#include <json.hpp>

#include "bcq/laurent.hpp"

namespace bcq {

/// {"vars": l, "domain": "rational"|"complex",
///  "terms": [{"exp": [...], "coef": "p/q" | [re, im]}]}
template <class S>
nlohmann::json to_json(const LaurentPoly<S>& p);

LaurentPoly<Rational> rational_poly_from_json(const nlohmann::json& j);
LaurentPoly<Complex> complex_poly_from_json(const nlohmann::json& j);

}  // namespace bcq

#endif  // BCQ_SERIALIZE_HPP
