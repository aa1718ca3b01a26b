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

#include <cctype>
#include <regex>

#include "bcq/scalar.hpp"

namespace bcq {

namespace {

const std::regex kRationalPattern(R"(\s*([+-]?\d+)(\s*/\s*(\d+))?\s*)");
const std::regex kDecimalPattern(R"(\s*([+-]?)(\d*)(\.(\d*))?([eE]([+-]?\d+))?\s*)");

}  // namespace

bool looks_rational(const std::string& text) {
  return std::regex_match(text, kRationalPattern);
}

Rational parse_rational(const std::string& text) {
  std::smatch m;
  if (std::regex_match(text, m, kRationalPattern)) {
    Integer num(m[1].str());
    Integer den(1);
    if (m[3].matched) {
      den = Integer(m[3].str());
    }
    if (den == 0) {
      throw DomainError("zero denominator in '" + text + "'");
    }
    return Rational(num, den);
  }
  if (std::regex_match(text, m, kDecimalPattern) && (m[2].length() > 0 || m[4].length() > 0)) {
    const std::string digits = m[2].str() + m[4].str();
    Integer num(digits.empty() ? std::string("0") : digits);
    long exponent = -static_cast<long>(m[4].length());
    if (m[6].matched) {
      exponent += std::stol(m[6].str());
    }
    Rational value(num);
    const Rational ten(10);
    value *= ipow(ten, exponent);
    return m[1].str() == "-" ? Rational(-value) : value;
  }
  throw DomainError("not a number: '" + text + "'");
}

std::optional<Rational> exact_sqrt(const Rational& x) {
  if (x < 0) {
    return std::nullopt;
  }
  const Integer num = numerator(x);
  const Integer den = denominator(x);
  const Integer rn = boost::multiprecision::sqrt(num);
  const Integer rd = boost::multiprecision::sqrt(den);
  if (rn * rn != num || rd * rd != den) {
    return std::nullopt;
  }
  return Rational(rn, rd);
}

std::string to_string(const Rational& x) { return x.str(); }

}  // namespace bcq
