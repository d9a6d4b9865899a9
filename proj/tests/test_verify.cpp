// Copyright 2026 The chaingeo Authors.
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

#include "chaingeo/error.hpp"
#include "chaingeo/verify.hpp"

namespace chaingeo {
namespace {

const char* kQ = "z_field = Q\nlambda1 = 0\nmu1 = 1\nlambda2 = 0\nmu2 = 1\n";
const char* kF2 = "# comment\nz_field = F2T\nlambda1 = 0\nmu1 = t\nlambda2 = 1\nmu2 = 1\nheight = 3\n";

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::ContextMismatch;
}

TEST(RunConfig, Parses) {
  const RunConfig q = RunConfig::parse(std::string(kQ) + "samples = 5\nseed = 9 # trailing\n");
  EXPECT_EQ(q.z_kind, ZKind::Q);
  EXPECT_EQ(q.samples, 5u);
  EXPECT_EQ(q.seed, 9u);
  EXPECT_TRUE(q.build()->galois());
  const RunConfig f = RunConfig::parse(kF2);
  EXPECT_EQ(f.height, 3);
  EXPECT_FALSE(f.build()->galois());
  EXPECT_EQ(code_of([] { RunConfig::parse("z_field = Q\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { RunConfig::parse(std::string(kQ) + "colour = red\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { RunConfig::parse(std::string(kQ) + "seed = -1\n"); }), Errc::ParseError);
  EXPECT_EQ(code_of([] { RunConfig::parse(std::string(kQ) + "suites = T-NOPE\n"); }), Errc::UnknownTheorem);
  EXPECT_EQ(code_of([] { RunConfig::parse("z_field = Q\nlambda1 = 0\nmu1 = 2/4\nlambda2 = 0\nmu2 = 1\n").build(); }),
            Errc::NotCanonical);
}

TEST(Report, JsonRoundTrip) {
  VerificationReport r;
  r.theorem_id = "T-CIRCLE-EQ";
  r.context = "z_field=Q";
  r.seed = 7;
  r.samples_requested = 3;
  r.samples_run = 2;
  r.skipped = 1;
  r.failures.push_back({"k0=1+a0", "true", "false"});
  r.elapsed_ms = 12;
  EXPECT_EQ(VerificationReport::from_json(r.to_json()), r);
  EXPECT_EQ(r.to_json().at("schema_version"), "1");
  EXPECT_EQ(code_of([] { VerificationReport::from_json(nlohmann::json::object()); }), Errc::ParseError);
  EXPECT_FALSE(strip_timing(r.to_json()).contains("elapsed_ms"));
}

TEST(Verify, SuitesAndErrors) {
  const RunConfig q = RunConfig::parse(kQ);
  const RunConfig f = RunConfig::parse(kF2);
  EXPECT_EQ(theorem_ids().size(), 16u);
  const VerificationReport r = cmd_verify(q, "T-CIRCLE-EQ", 1, 20);
  EXPECT_TRUE(r.passed);
  EXPECT_EQ(r.samples_requested, r.samples_run + r.skipped);
  EXPECT_EQ(code_of([&] { cmd_verify(q, "T-NOPE"); }), Errc::UnknownTheorem);
  EXPECT_EQ(code_of([&] { cmd_verify(f, "T-MIDLINE"); }), Errc::ContextUnsupported);
  EXPECT_EQ(code_of([&] { cmd_verify(f, "T-HERMITIAN"); }), Errc::ContextUnsupported);
  // Same seed, same report.
  EXPECT_EQ(strip_timing(cmd_verify(f, "T-ORBIT", 3, 3).to_json()), strip_timing(cmd_verify(f, "T-ORBIT", 3, 3).to_json()));
}

TEST(Verify, AllWithSuiteList) {
  RunConfig f = RunConfig::parse(std::string(kF2) + "samples = 2\nsuites = T-CIRCLE-EQ, T-MIDLINE\n");
  const Summary s = cmd_all(f, 5);
  ASSERT_EQ(s.reports.size(), 1u);
  EXPECT_EQ(s.reports[0].theorem_id, "T-CIRCLE-EQ");
  ASSERT_EQ(s.unsupported.size(), 1u);
  EXPECT_EQ(s.unsupported[0].theorem_id, "T-MIDLINE");
  EXPECT_TRUE(s.passed());
  f.suites = std::vector<std::string>{};
  const Summary empty = cmd_all(f);
  EXPECT_TRUE(empty.reports.empty());
  EXPECT_EQ(empty.to_json().at("suites"), 0);
}

TEST(Classify, Examples) {
  const RunConfig q = RunConfig::parse(kQ);
  EXPECT_EQ(cmd_classify(q, "1,0,0,0;0,1,0,1").substr(0, 35), "nondegenerate; regular points 0, 1\n");
  EXPECT_EQ(cmd_classify(q, "1,0,0,0;1,0,1,0").substr(0, 7), "line K\n");
  EXPECT_EQ(cmd_classify(q, "0+a1,1,0,0;0,0,0+a1,1").substr(0, 10), "degenerate");
  EXPECT_EQ(code_of([&] { cmd_classify(q, "0,0,1,0;0,0,0,1"); }), Errc::TransversalIsSpreadLine);
  EXPECT_EQ(code_of([&] { cmd_classify(q, "1,0,0;0,1,0"); }), Errc::ParseError);
  EXPECT_EQ(code_of([&] { cmd_classify(q, "1,0,0,0;2,0,0,0"); }), Errc::ParseError);
}

}  // namespace
}  // namespace chaingeo
