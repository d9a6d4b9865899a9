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


#pragma once

#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "chaingeo/field_tower.hpp"

namespace chaingeo {

struct Failure {
  std::string inputs;
  std::string expected;
  std::string got;
  bool operator==(const Failure&) const = default;
};

struct VerificationReport {
  std::string theorem_id;
  std::string context;
  std::uint64_t seed = 0;
  std::size_t samples_requested = 0;
  std::size_t samples_run = 0;
  std::size_t skipped = 0;
  bool passed = false;
  std::vector<Failure> failures;
  std::int64_t elapsed_ms = 0;

  nlohmann::json to_json() const;
  static VerificationReport from_json(const nlohmann::json& j);
  bool operator==(const VerificationReport&) const = default;
};

struct RunConfig {
  ZKind z_kind = ZKind::Q;
  std::string lambda1 = "0", mu1 = "1", lambda2 = "0", mu2 = "1";
  std::optional<std::size_t> samples;
  std::uint64_t seed = 1;
  int height = 8;
  /// Unset: every suite.
  std::optional<std::vector<std::string>> suites;

  /// key = value lines, '#' starts a comment.
  static RunConfig parse(std::string_view text);
  static RunConfig load(const std::string& path);
  std::shared_ptr<const AlgebraContext> build() const;
};

/// Suite names in their fixed order.
const std::vector<std::string>& theorem_ids();
std::size_t default_samples(std::string_view theorem_id);
bool needs_galois(std::string_view theorem_id);

/// seed: master seed, each suite draws from derive_seed(seed, id).
VerificationReport run_suite(const AlgebraContext& ctx, std::string_view theorem_id, std::uint64_t seed,
                             std::optional<std::size_t> samples = std::nullopt, int height = 8);

VerificationReport cmd_verify(const RunConfig& cfg, std::string_view theorem_id,
                              std::optional<std::uint64_t> seed = std::nullopt,
                              std::optional<std::size_t> samples = std::nullopt);

struct SkippedSuite {
  std::string theorem_id;
  std::string reason;
};

struct Summary {
  std::string context;
  std::uint64_t seed = 0;
  std::vector<VerificationReport> reports;
  std::vector<SkippedSuite> unsupported;
  bool passed() const;
  nlohmann::json to_json() const;
};

Summary cmd_all(const RunConfig& cfg, std::optional<std::uint64_t> seed = std::nullopt);

/// trans: two rows of four K-entries, "r0;r1".
std::string cmd_classify(const RunConfig& cfg, std::string_view trans);

/// Drops elapsed_ms everywhere in a report or summary.
nlohmann::json strip_timing(nlohmann::json j);

}  // namespace chaingeo
