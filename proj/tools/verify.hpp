// Copyright 2026 The dwigner Authors
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

#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace dwigner::cli {

struct SuiteResult {
  int n;
  std::string suite;
  double max_error;
  bool pass;
};

/// Runs every invariant suite for one N; each suite passes when its largest
/// deviation is below 1e-10.
std::vector<SuiteResult> verify_dimension(int n);

/// Prints the result table for all ns; returns true when every suite passed.
bool run_verify(const std::vector<int> &ns, std::ostream &out);

}  // namespace dwigner::cli
