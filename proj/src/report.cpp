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

#include "bcq/report.hpp"

namespace bcq {

nlohmann::json to_json(const VerificationReport& report) {
  nlohmann::json j;
  j["identity"] = report.identity;
  j["params"] = report.params;
  j["exact"] = report.exact;
  j["passed"] = report.passed;
  j["residual"] = report.residual ? nlohmann::json(*report.residual) : nlohmann::json(nullptr);
  j["runtime_ms"] = report.runtime_ms;
  if (!report.detail.empty()) {
    j["detail"] = report.detail;
  }
  return j;
}

}  // namespace bcq
