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

#include "bcq/serialize.hpp"

namespace bcq {

template <class S>
nlohmann::json to_json(const LaurentPoly<S>& p) {
  nlohmann::json j;
  j["vars"] = p.vars();
  j["domain"] = is_exact_v<S> ? "rational" : "complex";
  nlohmann::json terms = nlohmann::json::array();
  for (const auto& [e, c] : p.terms()) {
    nlohmann::json t;
    t["exp"] = e.to_vector();
    if constexpr (is_exact_v<S>) {
      t["coef"] = c.str();
    } else {
      const Complex z = scalar_cast<Complex>(c);
      t["coef"] = {z.real(), z.imag()};
    }
    terms.push_back(std::move(t));
  }
  j["terms"] = std::move(terms);
  return j;
}

namespace {

template <class S, class Coef>
LaurentPoly<S> poly_from_json(const nlohmann::json& j, const char* domain, Coef coef) {
  if (j.at("domain").get<std::string>() != domain) {
    throw DomainError(std::string("expected a ") + domain + " polynomial");
  }
  LaurentPoly<S> p(j.at("vars").get<int>());
  for (const auto& t : j.at("terms")) {
    const std::vector<int> e = t.at("exp").get<std::vector<int>>();
    if (static_cast<int>(e.size()) != p.vars()) {
      throw DomainError("exponent length does not match vars");
    }
    p.add_term(Exponent::from(e), coef(t.at("coef")));
  }
  return p;
}

}  // namespace

LaurentPoly<Rational> rational_poly_from_json(const nlohmann::json& j) {
  return poly_from_json<Rational>(j, "rational", [](const nlohmann::json& c) {
    return parse_rational(c.get<std::string>());
  });
}

LaurentPoly<Complex> complex_poly_from_json(const nlohmann::json& j) {
  return poly_from_json<Complex>(j, "complex", [](const nlohmann::json& c) {
    return Complex(c.at(0).get<double>(), c.at(1).get<double>());
  });
}

template nlohmann::json to_json(const LaurentPoly<Rational>&);
template nlohmann::json to_json(const LaurentPoly<double>&);
template nlohmann::json to_json(const LaurentPoly<long double>&);
template nlohmann::json to_json(const LaurentPoly<Complex>&);

}  // namespace bcq
