/*
Copyright (C) 2026 The tdlab Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
*/

#pragma once

#include <cstddef>
#include <iomanip>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "json.hpp"

namespace tdlab {

using ordered_json = nlohmann::ordered_json;

/// One named verdict inside a certification report.
struct CheckResult {
  std::string id;
  bool pass = true;
  ordered_json details = ordered_json::object();

  /// Records a failure message under details["failures"] and clears pass.
  void fail(std::string message) {
    pass = false;
    details["failures"].push_back(std::move(message));
  }
};

struct CertReport {
  std::string label;
  std::vector<CheckResult> verdicts;

  bool summary() const {
    for (const auto& v : verdicts) {
      if (!v.pass) return false;
    }
    return true;
  }

  void add(CheckResult r) { verdicts.push_back(std::move(r)); }

  ordered_json to_json() const {
    ordered_json j;
    j["label"] = label;
    j["verdicts"] = ordered_json::array();
    for (const auto& v : verdicts) {
      ordered_json e;
      e["check"] = v.id;
      e["pass"] = v.pass;
      e["details"] = v.details;
      j["verdicts"].push_back(std::move(e));
    }
    j["summary"] = summary() ? "pass" : "fail";
    return j;
  }

  std::string to_text() const {
    std::ostringstream os;
    os << "report: " << label << "\n";
    os << std::left << std::setw(28) << "check" << std::setw(8) << "result" << "details\n";
    for (const auto& v : verdicts) {
      os << std::left << std::setw(28) << v.id << std::setw(8) << (v.pass ? "pass" : "FAIL")
         << v.details.dump() << "\n";
    }
    os << "summary: " << (summary() ? "pass" : "fail") << "\n";
    return os.str();
  }
};

}  // namespace tdlab
