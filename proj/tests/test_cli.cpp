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

#include <gtest/gtest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <set>
#include <sstream>

#include "cli.hpp"
#include "dwigner/wigner.hpp"
#include "verify.hpp"

namespace dwigner::cli {
namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(const std::vector<std::string> &args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

std::vector<std::string> lines_of(const std::string &text) {
  std::vector<std::string> v;
  std::istringstream in(text);
  for (std::string l; std::getline(in, l);) v.push_back(l);
  return v;
}

std::string temp_file(const std::string &name, const std::string &content) {
  const std::string path = ::testing::TempDir() + name;
  std::ofstream(path) << content;
  return path;
}

TEST(StateSpec, ParsesEveryKind) {
  EXPECT_EQ(StateSpec::parse("pos:2").kind, StateSpec::Kind::Position);
  EXPECT_EQ(StateSpec::parse("mom:1").a, 1);
  const auto b = StateSpec::parse("bell:1,2");
  EXPECT_EQ(b.kind, StateSpec::Kind::Bell);
  EXPECT_EQ(b.a, 1);
  EXPECT_EQ(b.b, 2);
  EXPECT_EQ(StateSpec::parse("random:99").seed, 99u);
  EXPECT_EQ(StateSpec::parse("file:/x/y.json").path, "/x/y.json");
}

TEST(StateSpec, RejectsMalformed) {
  for (const char *s : {"pos", "pos:", "pos:1x", "bell:1", "bell:1,2,3", "random:-1", "file:",
                        "qubit:0", ""})
    EXPECT_THROW(StateSpec::parse(s), UsageError) << s;
}

TEST(BuildState, IndexRangeAndDimensions) {
  const GridSpec g(3);
  EXPECT_THROW(build_state(StateSpec::parse("pos:3"), g), UsageError);
  EXPECT_THROW(build_state(StateSpec::parse("bell:0,-1"), g), UsageError);
  EXPECT_EQ(build_state(StateSpec::parse("bell:1,2"), g).dim(), 9u);
  EXPECT_EQ(build_state(StateSpec::parse("random:1"), g).dim(), 3u);
  EXPECT_EQ(build_state(StateSpec::parse("random:1"), g, true).dim(), 9u);
  EXPECT_EQ(build_state(StateSpec::parse("pos:1"), g, true).dim(), 9u);
}

TEST(ParseStateJson, KetAndDensityMatrix) {
  const DensityOperator ket = parse_state_json("[[0.6,0],[0,0.8]]");
  EXPECT_NEAR(ket(1, 1).real(), 0.64, 1e-15);
  EXPECT_NEAR(ket(0, 1).imag(), -0.48, 1e-15);  // 0.6 * conj(0.8i)
  const DensityOperator dm = parse_state_json("[[[0.5,0],[0,0]],[[0,0],[0.5,0]]]");
  EXPECT_NEAR(dm.purity(), 0.5, 1e-15);
}

TEST(ParseStateJson, RejectsInvalidData) {
  EXPECT_THROW(parse_state_json("[[1,0],[1,0]]"), DataError);           // unnormalized ket
  EXPECT_THROW(parse_state_json("[[[1,0],[0,0]],[[0,0],[1,0]]]"), DataError);  // trace 2
  EXPECT_THROW(parse_state_json("[[[1,0],[0,0]]]"), DataError);         // not square
  EXPECT_THROW(parse_state_json("{\"a\":1}"), DataError);
  EXPECT_THROW(parse_state_json("[1,"), DataError);
}

TEST(GridExport, JsonRoundTripIsExact) {
  const GridSpec g(3);
  for (const char *s : {"random:5", "pos:2", "mom:1"}) {
    const GridExport e = make_export(build_state(StateSpec::parse(s), g), g, s);
    const GridExport back = from_json(to_json(e));
    EXPECT_EQ(back, e) << s;
  }
  const GridExport c = make_export(build_state(StateSpec::parse("bell:1,1"), g), g, "bell:1,1");
  EXPECT_EQ(c.kind, GridKind::Composite);
  EXPECT_EQ(c.values.size(), 6u * 6 * 6 * 6);
  EXPECT_EQ(from_json(to_json(c)), c);
}

TEST(GridExport, ValuesMatchWignerFunctionAndAreClamped) {
  const GridSpec g(4);
  const DensityOperator rho = build_state(StateSpec::parse("random:3"), g);
  const GridExport e = make_export(rho, g, "random:3");
  const WignerGrid w = wigner_grid(rho);
  ASSERT_EQ(e.values.size(), w.values().size());
  for (std::size_t i = 0; i < e.values.size(); ++i) {
    if (std::abs(w.values()[i]) < 1e-10) EXPECT_EQ(e.values[i], 0.0);
    else EXPECT_NEAR(e.values[i], w.values()[i], 1e-14);
  }
}

TEST(GridExport, FromJsonRejectsMalformed) {
  EXPECT_THROW(from_json("nope"), DataError);
  EXPECT_THROW(from_json("{\"n\":2}"), DataError);
  EXPECT_THROW(from_json(R"({"n":2,"grid_kind":"single","values":[0],)"
                         R"("metadata":{"state":"x","tool_version":"0"}})"),
               DataError);
}

TEST(Cli, GridCsvShapeForPositionState) {
  const Result r = run({"grid", "--n", "3", "--state", "pos:1", "--format", "csv"});
  ASSERT_EQ(r.code, kOk) << r.err;
  const auto rows = lines_of(r.out);
  ASSERT_EQ(rows.size(), 37u);
  EXPECT_EQ(rows[0], "q,p,value");
  std::set<int> nonzero_q;
  for (std::size_t i = 1; i < rows.size(); ++i) {
    int q = 0, p = 0;
    double v = 0.0;
    ASSERT_EQ(std::sscanf(rows[i].c_str(), "%d,%d,%lf", &q, &p, &v), 3);
    if (v != 0.0) {
      nonzero_q.insert(q);
      EXPECT_NEAR(std::abs(v), 1.0 / 6.0, 1e-15);
    }
  }
  EXPECT_EQ(nonzero_q, (std::set<int>{2, 5}));
}

TEST(Cli, GridCompositeCsvHeader) {
  const Result r = run({"grid", "--n", "2", "--state", "bell:0,0", "--format", "csv"});
  ASSERT_EQ(r.code, kOk);
  const auto rows = lines_of(r.out);
  EXPECT_EQ(rows[0], "q1,p1,q2,p2,value");
  EXPECT_EQ(rows.size(), 257u);
}

TEST(Cli, GridIsBitStableAcrossRuns) {
  const std::vector<std::string> args{"grid", "--n", "4", "--state", "random:17"};
  const Result a = run(args), b = run(args);
  ASSERT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
}

TEST(Cli, GridWritesOutputFile) {
  const std::string path = ::testing::TempDir() + "grid.json";
  ASSERT_EQ(run({"grid", "--n", "2", "--state", "mom:1", "--out", path}).code, kOk);
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  const GridExport e = from_json(ss.str());
  EXPECT_EQ(e.n, 2);
  EXPECT_EQ(e.state, "mom:1");
}

TEST(Cli, GridFromFileState) {
  const std::string path = temp_file("ket.json", "[[0,0],[1,0],[0,0]]");
  const Result f = run({"grid", "--n", "3", "--state", "file:" + path});
  const Result p = run({"grid", "--n", "3", "--state", "pos:1"});
  ASSERT_EQ(f.code, kOk) << f.err;
  EXPECT_EQ(from_json(f.out).values, from_json(p.out).values);
  EXPECT_EQ(run({"grid", "--n", "4", "--state", "file:" + path}).code, kDataError);
}

TEST(Cli, TeleportIsDeterministicPerSeed) {
  const std::vector<std::string> args{"teleport", "--n", "3", "--state", "random:4",
                                      "--seed", "123", "--trials", "5"};
  const Result a = run(args), b = run(args);
  ASSERT_EQ(a.code, kOk) << a.err;
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(lines_of(a.out).size(), 6u);
  EXPECT_NE(a.out.find("fidelity=1.000000"), std::string::npos);
  const Result c = run({"teleport", "--n", "3", "--state", "random:4", "--seed", "124",
                        "--trials", "5"});
  EXPECT_NE(a.out, c.out);
}

TEST(Cli, TeleportRejectsBipartiteInput) {
  EXPECT_EQ(run({"teleport", "--n", "2", "--state", "bell:0,0"}).code, kUsageError);
  EXPECT_EQ(run({"teleport", "--n", "2", "--state", "pos:0", "--trials", "0"}).code, kUsageError);
}

TEST(Cli, TomoBellAtOrigin) {
  const Result r = run({"tomo", "--n", "3", "--state", "bell:0,0", "--point", "0,0,0,0"});
  ASSERT_EQ(r.code, kOk) << r.err;
  EXPECT_NE(r.out.find("tomo: ok"), std::string::npos);
  // Theta_0 at the origin: 1/(4N^2).
  EXPECT_NE(r.out.find("2.777777777777778e-02"), std::string::npos);
}

TEST(Cli, TomoRejectsBadPoint) {
  EXPECT_EQ(run({"tomo", "--n", "2", "--state", "bell:0,0", "--point", "0,0,0"}).code,
            kUsageError);
  EXPECT_EQ(run({"tomo", "--n", "2", "--state", "bell:0,0", "--point", "0,0,0,4"}).code,
            kUsageError);
}

TEST(Cli, VerifyPassesAndRejectsSmallN) {
  const Result r = run({"verify", "--n", "2,3,4,6"});
  EXPECT_EQ(r.code, kOk) << r.out;
  EXPECT_EQ(r.out.find("FAIL"), std::string::npos);
  EXPECT_EQ(lines_of(r.out).size(), 1u + 4u * 9u + 1u);
  EXPECT_EQ(run({"verify", "--n", "1"}).code, kUsageError);
  EXPECT_EQ(run({"verify", "--n", "2,x"}).code, kUsageError);
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}).code, kUsageError);
  EXPECT_EQ(run({"bogus"}).code, kUsageError);
  EXPECT_EQ(run({"grid", "--n", "3"}).code, kUsageError);
  EXPECT_EQ(run({"grid", "--n", "3", "--state", "pos:0", "--format", "xml"}).code, kUsageError);
  EXPECT_EQ(run({"grid", "--n", "1", "--state", "pos:0"}).code, kUsageError);
  EXPECT_EQ(run({"grid", "--n", "3", "--state", "pos:9"}).code, kUsageError);
  EXPECT_EQ(run({"--help"}).code, kOk);
}

TEST(Cli, DataErrors) {
  EXPECT_EQ(run({"grid", "--n", "3", "--state", "file:/does/not/exist.json"}).code, kDataError);
  const std::string bad = temp_file("bad.json", "[[1,0],[1,0]]");
  EXPECT_EQ(run({"grid", "--n", "2", "--state", "file:" + bad}).code, kDataError);
  const std::string junk = temp_file("junk.json", "{");
  EXPECT_EQ(run({"grid", "--n", "2", "--state", "file:" + junk}).code, kDataError);
}

TEST(Cli, ToleranceFromEnvironment) {
  ::setenv("DWIGNER_TOLERANCE", "1e-6", 1);
  EXPECT_DOUBLE_EQ(report_tolerance(), 1e-6);
  ::setenv("DWIGNER_TOLERANCE", "-1", 1);
  EXPECT_THROW(report_tolerance(), UsageError);
  ::unsetenv("DWIGNER_TOLERANCE");
  EXPECT_DOUBLE_EQ(report_tolerance(), 1e-9);
}

TEST(Verify, EverySuiteReportsForEachN) {
  const auto rs = verify_dimension(3);
  EXPECT_EQ(rs.size(), 9u);
  for (const auto &r : rs) EXPECT_TRUE(r.pass) << r.suite << " " << r.max_error;
}

}  // namespace
}  // namespace dwigner::cli
