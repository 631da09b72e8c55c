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

#include "cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <ostream>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "dwigner/bell.hpp"
#include "dwigner/random.hpp"
#include "dwigner/teleport.hpp"
#include "dwigner/tomography.hpp"
#include "dwigner/wigner.hpp"
#include "verify.hpp"

namespace dwigner::cli {

namespace {

using nlohmann::json;

constexpr double kClampThreshold = 1e-10;
constexpr double kDefaultTolerance = 1e-9;

std::string format(const char *fmt, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, fmt, v);
  return buf;
}

long parse_long(const std::string &text, const std::string &what) {
  std::size_t used = 0;
  long v = 0;
  try {
    v = std::stol(text, &used);
  } catch (const std::exception &) {
    throw UsageError("invalid integer in " + what + ": '" + text + "'");
  }
  if (used != text.size()) throw UsageError("invalid integer in " + what + ": '" + text + "'");
  return v;
}

std::vector<std::string> split(const std::string &text, char sep) {
  std::vector<std::string> parts;
  std::string item;
  std::istringstream in(text);
  while (std::getline(in, item, sep)) parts.push_back(item);
  if (!text.empty() && text.back() == sep) parts.emplace_back();
  return parts;
}

int checked_index(long v, const GridSpec &g, const std::string &what) {
  if (v < 0 || v >= g.n())
    throw UsageError(what + " must lie in [0, " + std::to_string(g.n()) + "), got " +
                     std::to_string(v));
  return static_cast<int>(v);
}

Complex parse_complex(const json &j) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (j.is_array() && j.size() == 2 && j[0].is_number() && j[1].is_number())
    return {j[0].get<double>(), j[1].get<double>()};
  throw DataError("expected a number or [re, im] pair, got " + j.dump());
}

bool is_amplitude(const json &j) {
  return j.is_number() || (j.is_array() && j.size() == 2 && j[0].is_number());
}

std::string read_file(const std::string &path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DataError("cannot open '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

GridSpec grid_for(int n) {
  if (n < 2) throw UsageError("--n must be >= 2, got " + std::to_string(n));
  return GridSpec(n);
}

const char *kind_name(GridKind k) { return k == GridKind::Single ? "single" : "composite"; }

// Single-system states are promoted to rho (x) rho.
DensityOperator as_composite(const DensityOperator &rho, const GridSpec &g) {
  return rho.dim() == g.dim() ? tensor(rho, rho) : rho;
}

int run_grid(const GridSpec &g, const std::string &state, const std::string &fmt,
             bool composite, const std::string &out_path, std::ostream &out) {
  const StateSpec spec = StateSpec::parse(state);
  const DensityOperator rho = build_state(spec, g, composite);
  const GridExport e = make_export(rho, g, spec.text);
  const std::string text = fmt == "csv" ? to_csv(e) : to_json(e) + "\n";
  if (out_path.empty()) {
    out << text;
  } else {
    std::ofstream f(out_path, std::ios::binary);
    if (!f || !(f << text)) throw DataError("cannot write '" + out_path + "'");
  }
  return kOk;
}

int run_teleport(const GridSpec &g, const std::string &state, std::uint64_t seed, int trials,
                 std::ostream &out) {
  if (trials < 1) throw UsageError("--trials must be >= 1");
  const StateSpec spec = StateSpec::parse(state);
  if (spec.kind == StateSpec::Kind::Bell) throw UsageError("teleport needs a single-system state");
  const DensityOperator rho1 = build_state(spec, g);
  if (rho1.dim() != g.dim())
    throw DataError("teleport needs a state of dimension " + std::to_string(g.n()));

  const double tol = report_tolerance();
  const bool mixed = rho1.purity() < 1.0 - kTolerance;
  double min_fid = 1.0;
  char line[256];
  for (int i = 0; i < trials; ++i) {
    const TeleportRun run =
        teleport(rho1, derive_seed(seed, static_cast<std::uint64_t>(i)), g);
    min_fid = std::min(min_fid, run.fidelity);
    std::snprintf(line, sizeof line, "trial %d: beta=(%d,%d) probability=%.6f fidelity=%.6f", i,
                  run.outcome.q, run.outcome.p, run.outcome_probability, run.fidelity);
    out << line;
    if (mixed) out << format(" trace_distance=%.3e", run.trace_distance);
    out << "\n";
  }
  const bool ok = min_fid >= 1.0 - tol;
  std::snprintf(line, sizeof line, "teleport: %d trial(s), min fidelity=%.12f, %s\n", trials,
                min_fid, ok ? "ok" : "FAILED");
  out << line;
  return ok ? kOk : kVerifyFailed;
}

int run_tomo(const GridSpec &g, const std::string &state, const std::string &point,
             std::ostream &out) {
  const auto [a1, a2] = parse_point_pair(point, g);
  const DensityOperator rho = as_composite(build_state(StateSpec::parse(state), g), g);
  const double circuit = measure_wigner_point(rho, a1, a2, g);
  const double direct = composite_wigner(rho, a1, a2);
  const double diff = std::abs(circuit - direct);
  const bool ok = diff < report_tolerance();
  out << format("circuit  = %.15e\n", circuit) << format("direct   = %.15e\n", direct)
      << format("abs_diff = %.3e\n", diff) << (ok ? "tomo: ok\n" : "tomo: FAILED\n");
  return ok ? kOk : kVerifyFailed;
}

int run_verify_command(const std::string &ns_text, std::ostream &out) {
  const std::vector<int> ns = parse_int_list(ns_text);
  for (int n : ns) grid_for(n);
  return run_verify(ns, out) ? kOk : kVerifyFailed;
}

}  // namespace

StateSpec StateSpec::parse(const std::string &text) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw UsageError("state '" + text + "' lacks a kind prefix");
  const std::string kind = text.substr(0, colon);
  const std::string rest = text.substr(colon + 1);
  StateSpec s;
  s.text = text;
  if (kind == "pos" || kind == "mom") {
    s.kind = kind == "pos" ? Kind::Position : Kind::Momentum;
    s.a = static_cast<int>(parse_long(rest, "state"));
  } else if (kind == "bell") {
    const auto parts = split(rest, ',');
    if (parts.size() != 2) throw UsageError("bell state needs 'bell:Q,P', got '" + text + "'");
    s.kind = Kind::Bell;
    s.a = static_cast<int>(parse_long(parts[0], "state"));
    s.b = static_cast<int>(parse_long(parts[1], "state"));
  } else if (kind == "random") {
    s.kind = Kind::Random;
    const long v = parse_long(rest, "state");
    if (v < 0) throw UsageError("random seed must be non-negative");
    s.seed = static_cast<std::uint64_t>(v);
  } else if (kind == "file") {
    if (rest.empty()) throw UsageError("file state needs a path");
    s.kind = Kind::File;
    s.path = rest;
  } else {
    throw UsageError("unknown state kind '" + kind + "'");
  }
  return s;
}

DensityOperator parse_state_json(const std::string &json_text) {
  json j;
  try {
    j = json::parse(json_text);
  } catch (const json::exception &e) {
    throw DataError(std::string("malformed state JSON: ") + e.what());
  }
  if (!j.is_array() || j.empty()) throw DataError("state JSON must be a non-empty array");

  if (is_amplitude(j[0])) {
    std::vector<Complex> amps;
    for (const auto &x : j) amps.push_back(parse_complex(x));
    const StateVector psi(std::move(amps));
    if (!psi.is_normalized(kTolerance))
      throw DataError("ket is not normalized (norm " + format("%.12g", psi.norm()) + ")");
    return DensityOperator::pure(psi);
  }

  const std::size_t d = j.size();
  Operator op(d);
  for (std::size_t r = 0; r < d; ++r) {
    if (!j[r].is_array() || j[r].size() != d) throw DataError("density matrix must be square");
    for (std::size_t c = 0; c < d; ++c) op(r, c) = parse_complex(j[r][c]);
  }
  try {
    return DensityOperator(std::move(op));
  } catch (const InvalidState &e) {
    throw DataError(std::string("invalid density matrix: ") + e.what());
  }
}

DensityOperator build_state(const StateSpec &spec, const GridSpec &g, bool composite) {
  std::optional<DensityOperator> rho;
  switch (spec.kind) {
    case StateSpec::Kind::Position:
      rho = DensityOperator::pure(position_state(g, checked_index(spec.a, g, "position index")));
      break;
    case StateSpec::Kind::Momentum:
      rho = DensityOperator::pure(momentum_state(g, checked_index(spec.a, g, "momentum index")));
      break;
    case StateSpec::Kind::Bell:
      return DensityOperator::pure(bell_state(
          g, {checked_index(spec.a, g, "bell q index"), checked_index(spec.b, g, "bell p index")}));
    case StateSpec::Kind::Random: {
      Engine rng(spec.seed);
      return DensityOperator::pure(random_state(composite ? g.dim() * g.dim() : g.dim(), rng));
    }
    case StateSpec::Kind::File: {
      rho = parse_state_json(read_file(spec.path));
      if (rho->dim() != g.dim() && rho->dim() != g.dim() * g.dim())
        throw DataError("state dimension " + std::to_string(rho->dim()) + " matches neither N=" +
                        std::to_string(g.n()) + " nor N^2");
      break;
    }
  }
  return composite ? as_composite(*rho, g) : *rho;
}

GridExport make_export(const DensityOperator &rho, const GridSpec &g, const std::string &state) {
  GridExport e;
  e.n = g.n();
  e.state = state;
  const WignerEvaluator eval(g);
  const auto pts = g.points(GridRegion::Full);
  auto clamp = [](double v) { return std::abs(v) < kClampThreshold ? 0.0 : v; };
  if (rho.dim() == g.dim()) {
    e.kind = GridKind::Single;
    for (const auto &a : pts) e.values.push_back(clamp(eval.single(rho.op(), a)));
  } else if (rho.dim() == g.dim() * g.dim()) {
    e.kind = GridKind::Composite;
    e.values.reserve(pts.size() * pts.size());
    for (const auto &a1 : pts)
      for (const auto &a2 : pts) e.values.push_back(clamp(eval.composite(rho.op(), a1, a2)));
  } else {
    throw DataError("state dimension " + std::to_string(rho.dim()) + " does not fit N=" +
                    std::to_string(g.n()));
  }
  return e;
}

std::string to_json(const GridExport &e) {
  const int side = 2 * e.n;
  json j;
  j["n"] = e.n;
  j["grid_kind"] = kind_name(e.kind);
  if (e.kind == GridKind::Single) {
    j["shape"] = {side, side};
    j["index_order"] = {"q", "p"};
  } else {
    j["shape"] = {side, side, side, side};
    j["index_order"] = {"q1", "p1", "q2", "p2"};
  }
  j["values"] = e.values;
  j["metadata"] = {{"state", e.state}, {"tool_version", e.tool_version}};
  return j.dump();
}

GridExport from_json(const std::string &text) {
  try {
    const json j = json::parse(text);
    GridExport e;
    e.n = j.at("n").get<int>();
    const auto kind = j.at("grid_kind").get<std::string>();
    if (kind != "single" && kind != "composite") throw DataError("unknown grid_kind " + kind);
    e.kind = kind == "single" ? GridKind::Single : GridKind::Composite;
    e.values = j.at("values").get<std::vector<double>>();
    const auto &meta = j.at("metadata");
    e.state = meta.at("state").get<std::string>();
    e.tool_version = meta.at("tool_version").get<std::string>();
    const std::size_t side = 2 * static_cast<std::size_t>(std::max(e.n, 0));
    const std::size_t expect = e.kind == GridKind::Single ? side * side : side * side * side * side;
    if (e.n < 2 || e.values.size() != expect) throw DataError("grid size does not match n");
    return e;
  } catch (const json::exception &ex) {
    throw DataError(std::string("malformed grid JSON: ") + ex.what());
  }
}

std::string to_csv(const GridExport &e) {
  const int side = 2 * e.n;
  std::string s = e.kind == GridKind::Single ? "q,p,value\n" : "q1,p1,q2,p2,value\n";
  char buf[128];
  std::size_t i = 0;
  if (e.kind == GridKind::Single) {
    for (int q = 0; q < side; ++q)
      for (int p = 0; p < side; ++p) {
        std::snprintf(buf, sizeof buf, "%d,%d,%.17g\n", q, p, e.values[i++]);
        s += buf;
      }
  } else {
    for (int q1 = 0; q1 < side; ++q1)
      for (int p1 = 0; p1 < side; ++p1)
        for (int q2 = 0; q2 < side; ++q2)
          for (int p2 = 0; p2 < side; ++p2) {
            std::snprintf(buf, sizeof buf, "%d,%d,%d,%d,%.17g\n", q1, p1, q2, p2, e.values[i++]);
            s += buf;
          }
  }
  return s;
}

double report_tolerance() {
  const char *env = std::getenv("DWIGNER_TOLERANCE");
  if (env == nullptr || *env == '\0') return kDefaultTolerance;
  char *end = nullptr;
  const double v = std::strtod(env, &end);
  if (*end != '\0' || !(v > 0.0) || !std::isfinite(v))
    throw UsageError(std::string("invalid DWIGNER_TOLERANCE '") + env + "'");
  return v;
}

std::vector<int> parse_int_list(const std::string &text) {
  std::vector<int> out;
  for (const auto &part : split(text, ','))
    out.push_back(static_cast<int>(parse_long(part, "list")));
  if (out.empty()) throw UsageError("empty list");
  return out;
}

std::pair<PhasePoint, PhasePoint> parse_point_pair(const std::string &text, const GridSpec &g) {
  const auto parts = split(text, ',');
  if (parts.size() != 4) throw UsageError("--point needs 'q1,p1,q2,p2', got '" + text + "'");
  int v[4];
  for (int i = 0; i < 4; ++i) {
    const long x = parse_long(parts[static_cast<std::size_t>(i)], "--point");
    if (x < 0 || x >= g.side())
      throw UsageError("--point coordinates must lie in [0, " + std::to_string(g.side()) + ")");
    v[i] = static_cast<int>(x);
  }
  return {{v[0], v[1]}, {v[2], v[3]}};
}

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
  CLI::App app{"Discrete Wigner functions on the 2N x 2N phase-space grid", "dwigner"};
  app.set_version_flag("--version", kToolVersion);
  app.require_subcommand(1);

  int n = 0;
  std::string state, fmt = "json", out_path, point, ns_text;
  bool composite = false;
  std::uint64_t seed = 0;
  int trials = 1;

  auto *grid = app.add_subcommand("grid", "Export the Wigner function of a state");
  grid->add_option("--n", n, "Hilbert-space dimension N")->required();
  grid->add_option("--state", state, "pos:Q | mom:K | bell:Q,P | random:S | file:PATH")
      ->required();
  grid->add_option("--format", fmt, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  grid->add_flag("--composite", composite, "Bipartite grid (random state, or rho (x) rho)");
  grid->add_option("--out", out_path, "Output file (default stdout)");

  auto *tele = app.add_subcommand("teleport", "Run the teleportation protocol");
  tele->add_option("--n", n, "Hilbert-space dimension N")->required();
  tele->add_option("--state", state, "Single-system input state")->required();
  tele->add_option("--seed", seed, "Base seed for the measurement outcomes");
  tele->add_option("--trials", trials, "Number of independent runs");

  auto *tomo = app.add_subcommand("tomo", "Measure a composite Wigner value by ancilla circuit");
  tomo->add_option("--n", n, "Hilbert-space dimension N")->required();
  tomo->add_option("--state", state, "Bipartite state (single states become rho (x) rho)")
      ->required();
  tomo->add_option("--point", point, "q1,p1,q2,p2")->required();

  auto *ver = app.add_subcommand("verify", "Check the phase-space invariants numerically");
  ver->add_option("--n", ns_text, "Comma-separated dimensions, e.g. 2,3,4")->required();

  std::vector<const char *> argv{"dwigner"};
  for (const auto &a : args) argv.push_back(a.c_str());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
    if (*grid) return run_grid(grid_for(n), state, fmt, composite, out_path, out);
    if (*tele) return run_teleport(grid_for(n), state, seed, trials, out);
    if (*tomo) return run_tomo(grid_for(n), state, point, out);
    return run_verify_command(ns_text, out);
  } catch (const CLI::ParseError &e) {
    return app.exit(e, out, err) == 0 ? kOk : kUsageError;
  } catch (const UsageError &e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const DimensionMismatch &e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const InvalidState &e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  } catch (const std::invalid_argument &e) {
    err << "error: " << e.what() << "\n";
    return kUsageError;
  } catch (const std::exception &e) {
    err << "error: " << e.what() << "\n";
    return kDataError;
  }
}

}  // namespace dwigner::cli
