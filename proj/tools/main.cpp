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


#include <CLI11.hpp>
#include <cstdint>
#include <iostream>
#include <optional>
#include <string>

#include "chaingeo/error.hpp"
#include "chaingeo/verify.hpp"

namespace {

void print_report(const chaingeo::VerificationReport& r) {
  std::cout << r.theorem_id << ": " << (r.passed ? "passed" : "FAILED") << " (" << r.samples_run << " run, "
            << r.skipped << " skipped, " << r.elapsed_ms << " ms)\n";
  for (const auto& f : r.failures) {
    std::cout << "  inputs:   " << f.inputs << "\n  expected: " << f.expected << "\n  got:      " << f.got << "\n";
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Exact verification suites for chain geometries over quaternion skew fields"};
  app.require_subcommand(1);

  std::string config, theorem, trans;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> samples;
  bool json = false;

  auto* verify = app.add_subcommand("verify", "run one theorem suite");
  verify->add_option("--config", config, "algebra config file")->required();
  verify->add_option("--theorem", theorem, "suite id, e.g. T-CIRCLE-EQ")->required();
  verify->add_option("--seed", seed, "master seed");
  verify->add_option("--samples", samples, "sample count");
  verify->add_flag("--json", json, "print the JSON report");

  auto* classify = app.add_subcommand("classify", "classify the chain of a transversal line");
  classify->add_option("--config", config, "algebra config file")->required();
  classify->add_option("--trans", trans, "two rows of K^4, e.g. \"1,0,0,0;0,1,0,1\"")->required();

  auto* all = app.add_subcommand("all", "run every suite valid for the context");
  all->add_option("--config", config, "algebra config file")->required();
  all->add_option("--seed", seed, "master seed");
  all->add_flag("--json", json, "print the JSON summary");

  CLI11_PARSE(app, argc, argv);

  try {
    const chaingeo::RunConfig cfg = chaingeo::RunConfig::load(config);
    if (verify->parsed()) {
      const auto r = chaingeo::cmd_verify(cfg, theorem, seed, samples);
      if (json) {
        std::cout << r.to_json().dump(2) << "\n";
      } else {
        print_report(r);
      }
      return r.passed ? 0 : 1;
    }
    if (classify->parsed()) {
      std::cout << chaingeo::cmd_classify(cfg, trans);
      return 0;
    }
    const auto s = chaingeo::cmd_all(cfg, seed);
    if (json) {
      std::cout << s.to_json().dump(2) << "\n";
    } else {
      for (const auto& r : s.reports) print_report(r);
      for (const auto& u : s.unsupported) std::cout << u.theorem_id << ": skipped (" << u.reason << ")\n";
      std::cout << (s.passed() ? "all passed" : "FAILURES") << "\n";
    }
    return s.passed() ? 0 : 1;
  } catch (const chaingeo::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
}
