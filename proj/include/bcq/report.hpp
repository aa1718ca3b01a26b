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

#ifndef BCQ_REPORT_HPP
#define BCQ_REPORT_HPP

#include <chrono>
#include <cstdint>
#include <optional>
#include <string>

#include <json.hpp>

namespace bcq {

/// Outcome of one verification case.
///
/// `exact` records whether the comparison ran in exact arithmetic. For an
/// exact pass `residual` is empty; otherwise it carries the largest observed
/// discrepancy.
struct VerificationReport {
  std::string identity;
  nlohmann::json params = nlohmann::json::object();
  bool exact = false;
  bool passed = false;
  std::optional<double> residual;
  std::int64_t runtime_ms = 0;
  std::string detail;
};

nlohmann::json to_json(const VerificationReport& report);

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  std::int64_t elapsed_ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

}  // namespace bcq

#endif  // BCQ_REPORT_HPP
