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
#include <random>

#include "chaingeo/quaternion.hpp"

namespace chaingeo {

/// Deterministic generator. Integer ranges are drawn by rejection so that a
/// seed yields the same stream with every standard library.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform integer in [lo, hi].
  long uniform(long lo, long hi);
  bool coin() { return (engine_() >> 63) != 0; }
  /// True with probability num/den.
  bool chance(unsigned num, unsigned den) { return uniform(0, den - 1) < static_cast<long>(num); }

 private:
  std::mt19937_64 engine_;
};

/// Mixes a master seed with a label (e.g. a theorem id) into a child seed.
std::uint64_t derive_seed(std::uint64_t master, std::string_view label);

/// Default bound on numerators/denominators (Q) or polynomial degrees (F2T).
inline constexpr int kDefaultHeight = 8;

ZScalar random_z(const AlgebraContext& ctx, Rng& rng, int height = kDefaultHeight);
ZScalar random_nonzero_z(const AlgebraContext& ctx, Rng& rng, int height = kDefaultHeight);
KElement random_k(const AlgebraContext& ctx, Rng& rng, int height = kDefaultHeight);
KElement random_nonzero_k(const AlgebraContext& ctx, Rng& rng, int height = kDefaultHeight);
KElement random_k_outside_Z(const AlgebraContext& ctx, Rng& rng, int height = kDefaultHeight);
LElement random_l(const AlgebraContext& ctx, Rng& rng, int height = kDefaultHeight);
LElement random_nonzero_l(const AlgebraContext& ctx, Rng& rng, int height = kDefaultHeight);
LElement random_l_circ(const AlgebraContext& ctx, Rng& rng, int height = kDefaultHeight);

}  // namespace chaingeo
