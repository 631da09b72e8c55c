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

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "dwigner/linalg.hpp"
#include "dwigner/phase_space.hpp"

namespace dwigner::cli {

inline constexpr const char *kToolVersion = "0.1.0";

/// Process exit codes.
enum ExitCode : int {
  kOk = 0,
  kVerifyFailed = 1,
  kUsageError = 2,
  kDataError = 3,
};

/// Malformed command line or state/point syntax (exit 2).
class UsageError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Input data inconsistent with the request (exit 3).
class DataError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/**
 * Parsed --state argument:
 *   pos:Q       position eigenstate |Q>
 *   mom:K       momentum eigenstate |K>
 *   bell:Q,P    Bell state |Theta_(Q,P)> on two systems
 *   random:S    Gaussian random pure state from seed S
 *   file:PATH   JSON ket ([[re,im],...]) or density matrix ([[[re,im],...],...])
 */
struct StateSpec {
  enum class Kind { Position, Momentum, Bell, Random, File };

  Kind kind = Kind::Position;
  int a = 0;
  int b = 0;
  std::uint64_t seed = 0;
  std::string path;
  std::string text;  // the original spec string

  /// Throws UsageError.
  static StateSpec parse(const std::string &text);
};

/// Builds the state for grid N. A random spec yields a bipartite state when
/// composite is set. Throws UsageError for out-of-range indices and
/// DataError for unreadable or invalid files.
DensityOperator build_state(const StateSpec &spec, const GridSpec &g, bool composite = false);

/// Reads a ket or density matrix from JSON text; throws DataError.
DensityOperator parse_state_json(const std::string &json_text);

enum class GridKind { Single, Composite };

/**
 * Wigner grid in export form. values are in lexicographic order of
 * (q, p) or (q1, p1, q2, p2), each coordinate in [0, 2N). Entries with
 * magnitude below the clamp threshold are stored as exactly 0.
 */
struct GridExport {
  int n = 2;
  GridKind kind = GridKind::Single;
  std::vector<double> values;
  std::string state;
  std::string tool_version = kToolVersion;

  friend bool operator==(const GridExport &, const GridExport &) = default;
};

/// Export of W for a state of dimension N (single) or N^2 (composite).
GridExport make_export(const DensityOperator &rho, const GridSpec &g, const std::string &state);

std::string to_json(const GridExport &e);
/// Throws DataError on malformed input.
GridExport from_json(const std::string &text);
std::string to_csv(const GridExport &e);

/// Report threshold: DWIGNER_TOLERANCE if set, otherwise 1e-9. Throws UsageError.
double report_tolerance();

/// Parses "2,3,4"; throws UsageError.
std::vector<int> parse_int_list(const std::string &text);
/// Parses "q1,p1,q2,p2"; throws UsageError.
std::pair<PhasePoint, PhasePoint> parse_point_pair(const std::string &text, const GridSpec &g);

/// Entry point shared by the executable and the tests. args excludes argv[0].
int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err);

}  // namespace dwigner::cli
