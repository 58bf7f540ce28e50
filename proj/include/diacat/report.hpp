/* Copyright 2026 The diacat Authors. All Rights Reserved.
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *    http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 * ========================================================================= */

#ifndef DIACAT_REPORT_HPP
#define DIACAT_REPORT_HPP

#include <string>
#include <vector>

namespace diacat {

struct Check {
  std::string name;
  bool pass = true;
  std::string detail; // first counterexample, empty on PASS
};

/// Ordered list of named verdicts.
class Report {
public:
  void add(std::string name, bool pass, std::string detail = {}) {
    items_.push_back({std::move(name), pass, std::move(detail)});
  }
  /// Appends other's entries with "prefix." prepended to each name.
  void merge(const std::string &prefix, const Report &other) {
    for (const auto &c : other.items_)
      items_.push_back({prefix.empty() ? c.name : prefix + "." + c.name, c.pass, c.detail});
  }

  bool ok() const noexcept {
    for (const auto &c : items_)
      if (!c.pass)
        return false;
    return true;
  }
  const Check *first_failure() const noexcept {
    for (const auto &c : items_)
      if (!c.pass)
        return &c;
    return nullptr;
  }
  const std::vector<Check> &items() const noexcept { return items_; }

  /// "name: detail" of the first failure, or "PASS".
  std::string summary() const {
    auto f = first_failure();
    return f ? f->name + ": " + f->detail : std::string("PASS");
  }

private:
  std::vector<Check> items_;
};

} // namespace diacat

#endif
