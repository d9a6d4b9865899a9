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

#include "chaingeo/klein.hpp"
#include "chaingeo/sampling.hpp"

namespace chaingeo {

// Random geometric objects over a context, for sampling-based checks.

KVec random_k4(const AlgebraContext& ctx, Rng& rng, int height = kDefaultHeight);
PointP3K random_point(const AlgebraContext& ctx, Rng& rng, int height = kDefaultHeight);
LineP3K random_line(const AlgebraContext& ctx, Rng& rng, int height = kDefaultHeight);
/// Spread line through a random point; may be the line at infinity.
LineP3K random_spread_line(const AlgebraContext& ctx, Rng& rng, int height = kDefaultHeight);
/// A random line that is not a spread line.
LineP3K random_transversal(const AlgebraContext& ctx, Rng& rng, int height = kDefaultHeight);
/// Transversal through the affine point m with direction l (lK + m).
LineP3K affine_line_transversal(const LElement& direction, const LElement& offset);
Chain random_chain(const AlgebraContext& ctx, Rng& rng, int height = kDefaultHeight);
Chain random_chain_of_kind(const AlgebraContext& ctx, Rng& rng, ChainKind kind, int height = kDefaultHeight);

}  // namespace chaingeo
