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

// bcq command-line front end: polynomial tables, verification suites and
// Grassmannian parameter tables. Exit codes: 0 pass, 1 verification failure,
// 2 invalid input, 3 numerical non-convergence.

#include <cstdlib>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bcq/awmeasure.hpp"
#include "bcq/branching.hpp"
#include "bcq/errors.hpp"
#include "bcq/koornwinder.hpp"
#include "bcq/limits.hpp"
#include "bcq/params.hpp"
#include "bcq/qgrass.hpp"
#include "bcq/qjacobi.hpp"
#include "bcq/report.hpp"
#include "bcq/serialize.hpp"
#include "bcq/weights.hpp"

namespace {

using namespace bcq;
using nlohmann::json;

enum ExitCode { kPass = 0, kFail = 1, kInvalid = 2, kNonConvergence = 3 };

/// Parsed command line; empty strings mean "not given".
struct RunConfig {
  std::string suite;
  std::string family;
  std::string mode = "auto";
  std::string format;
  std::string lambda, q, t, a, b, c, d, sigma, tau, eps;
  int n = 0;
  int l = 0;
  int k = 1;
  int r = 0;
  int degree = 2;
  int bound = 2;
  bool timings = false;
};

enum class Precision { Double, Extended };

Precision precision_from_env() {
  const char* v = std::getenv("BCQ_PRECISION");
  if (v == nullptr || std::string(v) == "double") {
    return Precision::Double;
  }
  if (std::string(v) == "extended") {
    return Precision::Extended;
  }
  throw DomainError("BCQ_PRECISION must be 'double' or 'extended', got '" + std::string(v) + "'");
}

std::vector<std::string> split(const std::string& text) {
  std::vector<std::string> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    out.push_back(item);
  }
  return out;
}

long double parse_decimal(const std::string& text) {
  try {
    std::size_t used = 0;
    const long double v = std::stold(text, &used);
    if (text.find_first_not_of(" \t", used) == std::string::npos) {
      return v;
    }
  } catch (const std::exception&) {
  }
  throw DomainError("malformed number '" + text + "'");
}

/// "p/q" strings become exact rationals, decimals are read as floating point.
template <class S>
S value_as(const std::string& text) {
  if constexpr (std::is_same_v<S, Rational>) {
    if (!looks_rational(text)) {
      throw DomainError("'" + text + "' is not an exact rational");
    }
    return parse_rational(text);
  } else {
    if (looks_rational(text)) {
      return scalar_cast<S>(parse_rational(text));
    }
    return static_cast<S>(parse_decimal(text));
  }
}

template <class S>
S value_or(const std::string& text, const std::string& fallback) {
  return value_as<S>(text.empty() ? fallback : text);
}

/// Exact arithmetic unless a value is a decimal or float mode is forced.
bool use_exact(const RunConfig& cfg, const std::vector<std::string>& values) {
  bool rational = true;
  for (const std::string& v : values) {
    rational = rational && looks_rational(v);
  }
  if (cfg.mode == "exact" && !rational) {
    throw DomainError("exact mode needs rational inputs");
  }
  return cfg.mode != "float" && rational;
}

bool is_infinite(const std::string& text) { return text == "inf"; }

WeightVector bc_weight(const std::string& text, int l) {
  const WeightVector w{parse_entries(text), Lattice::BC};
  if (w.size() != l) {
    throw DomainError("lambda needs " + std::to_string(l) + " entries");
  }
  if (!is_dominant(w)) {
    throw DomainError("lambda " + w.str() + " is not dominant");
  }
  return w;
}

// ---- parameter sets --------------------------------------------------------

template <class S>
KoornwinderParams<S> koornwinder_params(const RunConfig& cfg, const std::string& t_default,
                                        const std::string& q_default) {
  const std::vector<std::string> t = split(cfg.t.empty() ? t_default : cfg.t);
  if (t.size() != 4) {
    throw DomainError("t needs four entries");
  }
  KoornwinderParams<S> p{{value_as<S>(t[0]), value_as<S>(t[1]), value_as<S>(t[2]), value_as<S>(t[3])},
                         value_or<S>(cfg.q, q_default),
                         cfg.k};
  p.validate();
  return p;
}

template <class S>
BigJacobiParams<S> big_params(const RunConfig& cfg, const std::array<const char*, 5>& fallback) {
  BigJacobiParams<S> p{value_or<S>(cfg.a, fallback[0]), value_or<S>(cfg.b, fallback[1]),
                       value_or<S>(cfg.c, fallback[2]), value_or<S>(cfg.d, fallback[3]),
                       value_or<S>(cfg.q, fallback[4]), cfg.k};
  p.validate();
  return p;
}

template <class S>
LittleJacobiParams<S> little_params(const RunConfig& cfg, const std::array<const char*, 3>& fallback) {
  LittleJacobiParams<S> p{value_or<S>(cfg.a, fallback[0]), value_or<S>(cfg.b, fallback[1]),
                          value_or<S>(cfg.q, fallback[2]), cfg.k};
  p.validate();
  return p;
}

// Float defaults for measure suites; exact defaults for limit suites, chosen
// so that every square root in the limit parameter maps stays rational.
constexpr const char* kKoornwinderT = "2.5,0.3,-0.2,0.1";
constexpr const char* kKoornwinderQ = "0.5";
constexpr std::array<const char*, 5> kBigFloat{"0.4", "0.3", "1", "0.7", "0.5"};
constexpr std::array<const char*, 3> kLittleFloat{"0.6", "0.25", "0.5"};
constexpr std::array<const char*, 5> kBigExact{"1/2", "1/3", "1", "1", "1/4"};
constexpr std::array<const char*, 3> kLittleExact{"1/2", "1/3", "1/4"};
constexpr const char* kSymmetryT = "1/3,1/5,-1/7,-1/11";

json big_json(const BigJacobiParams<double>& p) {
  return {{"a", p.a}, {"b", p.b}, {"c", p.c}, {"d", p.d}, {"q", p.q}, {"k", p.k}};
}

json little_json(const LittleJacobiParams<double>& p) {
  return {{"a", p.a}, {"b", p.b}, {"q", p.q}, {"k", p.k}};
}

// ---- poly ------------------------------------------------------------------

template <class S>
json koornwinder_table(const RunConfig& cfg, const WeightVector& lambda) {
  const KoornwinderParams<S> p = koornwinder_params<S>(cfg, "", "");
  return {{"params", params_json(p)}, {"polynomial", to_json(koornwinder_poly(lambda, p))}};
}

int cmd_poly(const RunConfig& cfg) {
  const WeightVector lambda = bc_weight(cfg.lambda, cfg.l);
  json out{{"family", cfg.family}, {"basis", "laurent_monomial"}, {"lambda", lambda.entries}};
  if (cfg.family == "koornwinder") {
    if (cfg.t.empty() || cfg.q.empty()) {
      throw DomainError("koornwinder needs --q and --t");
    }
    std::vector<std::string> values = split(cfg.t);
    values.push_back(cfg.q);
    json table;
    if (use_exact(cfg, values)) {
      table = koornwinder_table<Rational>(cfg, lambda);
    } else if (precision_from_env() == Precision::Extended) {
      table = koornwinder_table<long double>(cfg, lambda);
    } else {
      table = koornwinder_table<double>(cfg, lambda);
    }
    out.update(table);
  } else if (cfg.family == "big") {
    const BigJacobiParams<double> p = big_params<double>(cfg, kBigFloat);
    out["params"] = big_json(p);
    out["polynomial"] = to_json(big_jacobi_poly(lambda, p));
  } else {
    const LittleJacobiParams<double> p = little_params<double>(cfg, kLittleFloat);
    out["params"] = little_json(p);
    out["polynomial"] = to_json(little_jacobi_poly(lambda, p));
  }
  std::cout << out.dump(2) << '\n';
  return kPass;
}

// ---- verify ----------------------------------------------------------------

struct CaseResult {
  std::vector<VerificationReport> reports;
  std::vector<SweepRow> rows;
  json extra;
};

using Case = std::function<CaseResult()>;

CaseResult single(VerificationReport r) { return {{std::move(r)}, {}, {}}; }

CaseResult from_sweep(SweepResult s) { return {{std::move(s.report)}, std::move(s.rows), {}}; }

/// Runs every case on its own thread and returns results in case order, so
/// output does not depend on scheduling. The first failing case, in order,
/// rethrows.
std::vector<CaseResult> run_cases(const std::vector<Case>& cases) {
  std::vector<std::future<CaseResult>> futures;
  futures.reserve(cases.size());
  for (const Case& c : cases) {
    futures.push_back(std::async(std::launch::async, c));
  }
  std::vector<CaseResult> out;
  for (auto& f : futures) {
    out.push_back(f.get());
  }
  return out;
}

std::vector<std::string> families(const RunConfig& cfg) {
  if (cfg.family.empty()) {
    return {"koornwinder", "big", "little"};
  }
  return {cfg.family};
}

KoornwinderParams<Complex> measure_params(const RunConfig& cfg) {
  return koornwinder_params<double>(cfg, kKoornwinderT, kKoornwinderQ).template cast<Complex>();
}

std::vector<Case> measure_cases(const RunConfig& cfg, bool orthogonality) {
  const int l = cfg.l > 0 ? cfg.l : 1;
  const int deg = cfg.degree;
  std::vector<Case> cases;
  for (const std::string& fam : families(cfg)) {
    if (fam == "koornwinder") {
      const KoornwinderParams<Complex> p = measure_params(cfg);
      cases.push_back([=] {
        return single(orthogonality ? orthogonality_check_K(l, deg, p) : gustafson_check(l, p));
      });
    } else if (fam == "big") {
      const BigJacobiParams<double> p = big_params<double>(cfg, kBigFloat);
      cases.push_back([=] {
        return single(orthogonality ? orthogonality_check_big(l, deg, p) : selberg_check_big(l, p));
      });
    } else {
      const LittleJacobiParams<double> p = little_params<double>(cfg, kLittleFloat);
      cases.push_back([=] {
        return single(orthogonality ? orthogonality_check_little(l, deg, p)
                                    : selberg_check_little(l, p));
      });
    }
  }
  return cases;
}

std::vector<int> shape_ranks(const RunConfig& cfg) {
  if (cfg.l > 0) {
    return {cfg.l};
  }
  std::vector<int> ls;
  for (int l = 1; 2 * l <= cfg.n; ++l) {
    ls.push_back(l);
  }
  return ls;
}

std::vector<std::string> sigma_values(const RunConfig& cfg, std::vector<std::string> fallback) {
  return cfg.sigma.empty() ? fallback : split(cfg.sigma);
}

/// Matrix checks only see X; record which J produced it.
VerificationReport tagged(VerificationReport r, int l, const json& sigma) {
  r.params["l"] = l;
  r.params["sigma"] = sigma;
  return r;
}

template <class S>
std::vector<Case> reflection_cases(const RunConfig& cfg, const S& q) {
  std::vector<Case> cases;
  for (int l : shape_ranks(cfg)) {
    const GrassmannShape shape(cfg.n, l);
    for (const std::string& s : sigma_values(cfg, {"-1", "0", "1", "2"})) {
      if (is_infinite(s)) {
        cases.push_back([=] {
          return single(tagged(reflection_check(j_infty<S>(shape), shape.n, q), shape.l, "inf"));
        });
        continue;
      }
      const double sigma = static_cast<double>(parse_decimal(s));
      cases.push_back([=] {
        const SquareMatrix<S> js = j_sigma(shape, sigma, q);
        return CaseResult{
            {tagged(reflection_check(js, shape.n, q), shape.l, sigma),
             tagged(refalt_check(j_tilde_sigma(shape, sigma, q), js, shape.n, q), shape.l, sigma)},
                          {},
                          {}};
      });
    }
  }
  return cases;
}

template <class S>
std::vector<Case> qybe_cases(const RunConfig& cfg, const S& q) {
  std::vector<int> ns;
  if (cfg.n > 0) {
    ns.push_back(cfg.n);
  } else {
    ns = {2, 3, 4};
  }
  std::vector<Case> cases;
  for (int n : ns) {
    cases.push_back([=] { return CaseResult{{qybe_check(n, q), braid_check(n, q)}, {}, {}}; });
  }
  return cases;
}

template <class S>
std::vector<Case> intertwiner_cases(const RunConfig& cfg, const S& q) {
  std::vector<Case> cases;
  for (int l : shape_ranks(cfg)) {
    const GrassmannShape shape(cfg.n, l);
    for (const std::string& s : sigma_values(cfg, {"0", "1"})) {
      const double sigma = static_cast<double>(parse_decimal(s));
      for (int r = 1; r <= l; ++r) {
        if (cfg.r > 0 && r != cfg.r) {
          continue;
        }
        cases.push_back([=] {
          CaseResult out{{intertwiner_check(shape, r, sigma, q)}, {}, {}};
          if (r >= 2) {
            out.reports.push_back(theta_check(shape, r, sigma, q));
          }
          return out;
        });
      }
    }
  }
  return cases;
}

/// Exact when q is rational (and not forced to float), otherwise double.
template <template <class> class Build>
std::vector<Case> in_q_mode(const RunConfig& cfg, const std::string& q_default) {
  const std::string q = cfg.q.empty() ? q_default : cfg.q;
  if (use_exact(cfg, {q})) {
    return Build<Rational>::make(cfg, value_as<Rational>(q));
  }
  return Build<double>::make(cfg, value_as<double>(q));
}

template <class S>
struct ReflectionBuild {
  static std::vector<Case> make(const RunConfig& c, const S& q) { return reflection_cases(c, q); }
};
template <class S>
struct QybeBuild {
  static std::vector<Case> make(const RunConfig& c, const S& q) { return qybe_cases(c, q); }
};
template <class S>
struct IntertwinerBuild {
  static std::vector<Case> make(const RunConfig& c, const S& q) { return intertwiner_cases(c, q); }
};

json branching_table_json(const BranchingTable& table) {
  json rows = json::array();
  for (const auto& [key, mult] : table) {
    rows.push_back({{"block_a", key.first.entries}, {"block_b", key.second.entries},
                    {"multiplicity", mult}});
  }
  return rows;
}

std::vector<Case> branching_cases(const RunConfig& cfg) {
  const GrassmannShape shape(cfg.n, cfg.l > 0 ? cfg.l : 1);
  const int bound = cfg.bound;
  std::vector<Case> cases;
  cases.push_back([=] { return single(gelfand_check(shape, bound)); });
  if (!cfg.lambda.empty()) {
    const WeightVector lambda{parse_entries(cfg.lambda), Lattice::A};
    if (lambda.size() != shape.n || !is_dominant(lambda)) {
      throw DomainError("lambda must be a dominant GL(n) weight with n entries");
    }
    cases.push_back([=] {
      CaseResult out = single(branching_dimension_check(lambda, shape));
      out.extra = {{"lambda", lambda.entries},
                   {"branching", branching_table_json(branching_coeffs(lambda, shape))},
                   {"trivial_multiplicity", trivial_multiplicity(lambda, shape)},
                   {"spherical", is_spherical(lambda, shape)}};
      return out;
    });
  }
  return cases;
}

EpsilonSweep sweep_or(const RunConfig& cfg, EpsilonSweep fallback) {
  return cfg.eps.empty() ? fallback : EpsilonSweep::parse(cfg.eps);
}

std::vector<Case> limit_cases(const RunConfig& cfg, const std::string& family, bool norms) {
  const int l = cfg.l > 0 ? cfg.l : 1;
  const WeightVector lambda = bc_weight(cfg.lambda.empty() ? "1" : cfg.lambda, l);
  const EpsilonSweep sweep =
      sweep_or(cfg, norms ? EpsilonSweep::norms() : EpsilonSweep::standard());
  if (family == "big") {
    const BigJacobiParams<Rational> p = big_params<Rational>(cfg, kBigExact);
    return {[=] {
      return from_sweep(norms ? norm_limit_check_big(lambda, p, sweep)
                              : limit_check_big(lambda, p, sweep));
    }};
  }
  const LittleJacobiParams<Rational> p = little_params<Rational>(cfg, kLittleExact);
  return {[=] {
    return from_sweep(norms ? norm_limit_check_little(lambda, p, sweep)
                            : limit_check_little(lambda, p, sweep));
  }};
}

template <class S>
std::vector<Case> symmetry_cases_in(const RunConfig& cfg, const WeightVector& lambda) {
  const KoornwinderParams<S> p = koornwinder_params<S>(cfg, kSymmetryT, "1/2");
  return {[=] {
    return CaseResult{{check_symmetries(lambda, p), check_eigen_identity(lambda, p)}, {}, {}};
  }};
}

std::vector<Case> symmetry_cases(const RunConfig& cfg) {
  const int l = cfg.l > 0 ? cfg.l : 1;
  const WeightVector lambda = bc_weight(cfg.lambda.empty() ? "1" : cfg.lambda, l);
  std::vector<std::string> values = split(cfg.t.empty() ? kSymmetryT : cfg.t);
  values.push_back(cfg.q.empty() ? "1/2" : cfg.q);
  if (use_exact(cfg, values)) {
    return symmetry_cases_in<Rational>(cfg, lambda);
  }
  if (precision_from_env() == Precision::Extended) {
    return symmetry_cases_in<long double>(cfg, lambda);
  }
  return symmetry_cases_in<double>(cfg, lambda);
}

void require_shape(const RunConfig& cfg) {
  if (cfg.n < 2) {
    throw DomainError("this suite needs --n >= 2");
  }
}

std::vector<Case> suite_cases(const RunConfig& cfg) {
  const std::string& s = cfg.suite;
  if (s == "orthogonality" || s == "selberg-constants") {
    return measure_cases(cfg, s == "orthogonality");
  }
  if (s == "reflection") {
    require_shape(cfg);
    return in_q_mode<ReflectionBuild>(cfg, "1/2");
  }
  if (s == "intertwiner") {
    require_shape(cfg);
    return in_q_mode<IntertwinerBuild>(cfg, "1/2");
  }
  if (s == "qybe") {
    return in_q_mode<QybeBuild>(cfg, "1/2");
  }
  if (s == "branching") {
    require_shape(cfg);
    return branching_cases(cfg);
  }
  if (s == "limit-big" || s == "limit-little") {
    return limit_cases(cfg, s == "limit-big" ? "big" : "little", false);
  }
  if (s == "norm-limit") {
    if (cfg.family != "big" && cfg.family != "little") {
      throw DomainError("norm-limit needs --family big or --family little");
    }
    return limit_cases(cfg, cfg.family, true);
  }
  return symmetry_cases(cfg);
}

json report_json(const VerificationReport& r, bool timings) {
  json j = to_json(r);
  if (!timings) {
    j.erase("runtime_ms");
  }
  return j;
}

int cmd_verify(const RunConfig& cfg) {
  const std::vector<CaseResult> results = run_cases(suite_cases(cfg));
  const bool sweep = cfg.suite == "limit-big" || cfg.suite == "limit-little" ||
                     cfg.suite == "norm-limit";
  const std::string format = cfg.format.empty() ? (sweep ? "csv" : "json") : cfg.format;
  bool all = true;
  json reports = json::array();
  json extras = json::array();
  std::vector<SweepRow> rows;
  for (const CaseResult& res : results) {
    for (const VerificationReport& r : res.reports) {
      all = all && r.passed;
      reports.push_back(report_json(r, cfg.timings));
    }
    rows.insert(rows.end(), res.rows.begin(), res.rows.end());
    if (!res.extra.is_null()) {
      extras.push_back(res.extra);
    }
  }
  if (format == "csv") {
    if (!sweep) {
      throw DomainError("csv output is only available for sweep suites");
    }
    std::cout << sweep_csv(rows);
    for (const json& r : reports) {
      std::cerr << (r["passed"].get<bool>() ? "PASS " : "FAIL ") << r.dump() << '\n';
    }
  } else if (format == "pretty") {
    for (const json& r : reports) {
      std::cout << (r["passed"].get<bool>() ? "PASS  " : "FAIL  ") << r["identity"].get<std::string>()
                << "  residual=" << r["residual"].dump() << "  " << r["params"].dump() << '\n';
      if (r.contains("detail")) {
        std::cout << "      " << r["detail"].get<std::string>() << '\n';
      }
    }
  } else {
    json out{{"suite", cfg.suite}, {"passed", all}, {"reports", reports}};
    if (!extras.empty()) {
      out["tables"] = extras;
    }
    if (sweep) {
      json js = json::array();
      for (const SweepRow& row : rows) {
        js.push_back({{"epsilon", row.epsilon},
                      {"max_coeff_err", row.max_coeff_err ? json(*row.max_coeff_err) : json()},
                      {"norm_err", row.norm_err ? json(*row.norm_err) : json()},
                      {"constructed_ok", row.constructed_ok}});
      }
      out["rows"] = js;
    }
    std::cout << out.dump(2) << '\n';
  }
  return all ? kPass : kFail;
}

// ---- grassmann -------------------------------------------------------------

json weight_entry(const WeightVector& a_weight, double q) {
  return {{"weight", a_weight.entries}, {"casimir", casimir_eigenvalue(a_weight, q)}};
}

int cmd_grassmann(const RunConfig& cfg) {
  const GrassmannShape shape(cfg.n, cfg.l);
  const double q = value_or<double>(cfg.q, "1/2");
  const std::string sigma_text = cfg.sigma.empty() ? "inf" : cfg.sigma;
  const std::string tau_text = cfg.tau.empty() ? "inf" : cfg.tau;
  const bool sigma_inf = is_infinite(sigma_text);
  const bool tau_inf = is_infinite(tau_text);
  auto token = [](const std::string& text) {
    return is_infinite(text) ? json("inf") : json(static_cast<double>(parse_decimal(text)));
  };
  json out{{"n", shape.n}, {"l", shape.l}, {"q", q}, {"base", q * q},
           {"sigma", token(sigma_text)}, {"tau", token(tau_text)}};
  json checks = json::array();
  bool all = true;
  if (!sigma_inf && !tau_inf) {
    const double sigma = static_cast<double>(parse_decimal(sigma_text));
    const double tau = static_cast<double>(parse_decimal(tau_text));
    const KoornwinderParams<double> p =
        grassmann_koornwinder_params(shape.n, shape.l, sigma, tau, q);
    out["family"] = "koornwinder";
    out["params"] = params_json(p);
    for (const VerificationReport& r : {grassmann_product_check(shape.n, shape.l, sigma, tau, q),
                                        grassmann_consistency_check(shape.n, shape.l, sigma, tau, q)}) {
      all = all && r.passed;
      checks.push_back(report_json(r, cfg.timings));
    }
  } else if (sigma_inf && !tau_inf) {
    const double tau = static_cast<double>(parse_decimal(tau_text));
    out["family"] = "big";
    out["params"] = big_json(grassmann_big_params(shape.n, shape.l, tau, q));
  } else if (sigma_inf && tau_inf) {
    out["family"] = "little";
    out["params"] = little_json(grassmann_little_params(shape.n, shape.l, q));
  } else {
    throw DomainError("sigma finite with tau = inf has no parameter family; swap sigma and tau");
  }
  json spherical = json::array();
  for (int r = 1; r <= shape.l; ++r) {
    json e = weight_entry(fundamental_spherical(r, shape), q);
    e["r"] = r;
    spherical.push_back(e);
  }
  out["fundamental_spherical"] = spherical;
  if (!cfg.lambda.empty()) {
    const WeightVector lambda = bc_weight(cfg.lambda, shape.l);
    json e = weight_entry(flat_map(lambda, shape), q);
    e["lambda"] = lambda.entries;
    out["requested"] = e;
  }
  if (!checks.empty()) {
    out["checks"] = checks;
  }
  std::cout << out.dump(2) << '\n';
  return all ? kPass : kFail;
}

void add_values(CLI::App* app, RunConfig& cfg) {
  app->add_option("--q", cfg.q, "base q, as p/q or a decimal");
  app->add_option("--k", cfg.k, "t = q^k")->check(CLI::PositiveNumber);
  app->add_option("--t", cfg.t, "Koornwinder t0,t1,t2,t3");
  app->add_option("--a", cfg.a);
  app->add_option("--b", cfg.b);
  app->add_option("--c", cfg.c);
  app->add_option("--d", cfg.d);
  app->add_option("--mode", cfg.mode, "arithmetic")->check(CLI::IsMember({"auto", "exact", "float"}));
}

int run(int argc, char** argv) {
  CLI::App app{"BC-type q-orthogonal polynomials and quantum Grassmannian identities"};
  app.require_subcommand(1);
  RunConfig cfg;

  CLI::App* poly = app.add_subcommand("poly", "print a monic orthogonal polynomial as JSON");
  poly->add_option("--family", cfg.family)
      ->required()
      ->check(CLI::IsMember({"koornwinder", "big", "little"}));
  poly->add_option("--l", cfg.l, "number of variables")->required();
  poly->add_option("--lambda", cfg.lambda, "dominant weight, comma separated")->required();
  add_values(poly, cfg);

  CLI::App* verify = app.add_subcommand("verify", "run a verification suite");
  verify->add_option("suite", cfg.suite)
      ->required()
      ->check(CLI::IsMember({"orthogonality", "selberg-constants", "reflection", "intertwiner",
                             "branching", "limit-big", "limit-little", "norm-limit", "symmetry",
                             "qybe"}));
  verify->add_option("--family", cfg.family)->check(CLI::IsMember({"koornwinder", "big", "little"}));
  verify->add_option("--n", cfg.n);
  verify->add_option("--l", cfg.l);
  verify->add_option("--r", cfg.r, "restrict to one exterior degree");
  verify->add_option("--lambda", cfg.lambda);
  verify->add_option("--sigma", cfg.sigma, "comma separated, or inf");
  verify->add_option("--degree", cfg.degree, "largest |lambda| in orthogonality suites");
  verify->add_option("--bound", cfg.bound, "largest |lambda_i| in the Gelfand suite");
  verify->add_option("--eps", cfg.eps, "epsilon sweep, comma separated");
  verify->add_option("--format", cfg.format)->check(CLI::IsMember({"json", "csv", "pretty"}));
  verify->add_flag("--timings", cfg.timings, "include runtime_ms in reports");
  add_values(verify, cfg);

  CLI::App* grass = app.add_subcommand("grassmann", "spherical parameter table");
  grass->add_option("--n", cfg.n)->required();
  grass->add_option("--l", cfg.l)->required();
  grass->add_option("--sigma", cfg.sigma, "finite or inf");
  grass->add_option("--tau", cfg.tau, "finite or inf");
  grass->add_option("--q", cfg.q, "Grassmannian q; polynomials use base q^2");
  grass->add_option("--lambda", cfg.lambda, "spherical weight in natural coordinates");
  grass->add_flag("--timings", cfg.timings);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kPass : kInvalid;
  }

  try {
    if (*poly) {
      return cmd_poly(cfg);
    }
    if (*verify) {
      return cmd_verify(cfg);
    }
    return cmd_grassmann(cfg);
  } catch (const DomainError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kInvalid;
  } catch (const ConvergenceError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kNonConvergence;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kFail;
  }
}

}  // namespace

int main(int argc, char** argv) { return run(argc, argv); }
