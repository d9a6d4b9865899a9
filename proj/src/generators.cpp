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

#include "chaingeo/generators.hpp"

namespace chaingeo {

KVec random_k4(const AlgebraContext& ctx, Rng& rng, int height) {
  for (;;) {
    KVec x{random_k(ctx, rng, height), random_k(ctx, rng, height), random_k(ctx, rng, height),
           random_k(ctx, rng, height)};
    if (!is_zero_vector(x)) return x;
  }
}

PointP3K random_point(const AlgebraContext& ctx, Rng& rng, int height) {
  return PointP3K(random_k4(ctx, rng, height));
}

LineP3K random_line(const AlgebraContext& ctx, Rng& rng, int height) {
  for (;;) {
    KMatrix m = subspace({random_k4(ctx, rng, height), random_k4(ctx, rng, height)});
    if (m.rows() == 2) return LineP3K(std::move(m));
  }
}

LineP3K random_spread_line(const AlgebraContext& ctx, Rng& rng, int height) {
  return spread_line(random_point(ctx, rng, height));
}

LineP3K random_transversal(const AlgebraContext& ctx, Rng& rng, int height) {
  for (;;) {
    LineP3K l = random_line(ctx, rng, height);
    if (!is_spread_line(l)) return l;
  }
}

LineP3K affine_line_transversal(const LElement& direction, const LElement& offset) {
  const AlgebraContext& ctx = direction.ctx();
  const KElement o = ctx.k_zero(), e = ctx.k_one();
  return LineP3K::through({e, o, offset.u(), offset.v()}, {o, o, direction.u(), direction.v()});
}

Chain random_chain(const AlgebraContext& ctx, Rng& rng, int height) {
  return Chain::from_transversal(random_transversal(ctx, rng, height));
}

Chain random_chain_of_kind(const AlgebraContext& ctx, Rng& rng, ChainKind kind, int height) {
  const KElement o = ctx.k_zero();
  switch (kind) {
    case ChainKind::Line:
      return Chain::from_transversal(
          affine_line_transversal(random_nonzero_l(ctx, rng, height), random_l(ctx, rng, height)));
    case ChainKind::Degenerate: {
      // Through a point of the line at infinity and a point with x0, x1 both
      // nonzero, so that neither the line nor its iota-image lies in x1 = 0.
      const KVec at_inf{o, o, random_nonzero_k(ctx, rng, height), random_k(ctx, rng, height)};
      const KVec p{random_nonzero_k(ctx, rng, height), random_nonzero_k(ctx, rng, height),
                   random_k(ctx, rng, height), random_k(ctx, rng, height)};
      return Chain::from_transversal(LineP3K::through(at_inf, p));
    }
    case ChainKind::Nondegenerate:
      for (;;) {
        LineP3K t = random_transversal(ctx, rng, height);
        if (!lines_meet(t, infinity_line(ctx))) return Chain::from_transversal(std::move(t));
      }
  }
  raise(Errc::DimensionError, "unknown chain kind");
}

}  // namespace chaingeo
