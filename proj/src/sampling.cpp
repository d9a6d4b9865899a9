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

#include "chaingeo/sampling.hpp"

namespace chaingeo {

long Rng::uniform(long lo, long hi) {
  const std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
  if (span == 0) return static_cast<long>(engine_());
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t draw;
  do {
    draw = engine_();
  } while (draw >= limit);
  return lo + static_cast<long>(draw % span);
}

std::uint64_t derive_seed(std::uint64_t master, std::string_view label) {
  // FNV-1a over the label, then a splitmix64 finalizer.
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char c : label) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  std::uint64_t z = master ^ h;
  z += 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

namespace {

F2Poly random_poly(Rng& rng, int max_degree) {
  F2Poly p;
  for (int k = 0; k <= max_degree; ++k) {
    if (rng.coin()) p.flip(static_cast<unsigned>(k));
  }
  return p;
}

}  // namespace

ZScalar random_z(const AlgebraContext& ctx, Rng& rng, int height) {
  if (ctx.z_kind() == ZKind::Q) {
    const long num = rng.uniform(-height, height);
    const long den = rng.coin() ? 1 : rng.uniform(1, height);
    return ZScalar(mpq_class(num, den));
  }
  F2Poly num = random_poly(rng, rng.uniform(0, height));
  F2Poly den = F2Poly::one();
  if (rng.chance(1, 4)) {
    do {
      den = random_poly(rng, rng.uniform(0, height / 2));
    } while (den.is_zero());
  }
  return ZScalar(F2RatFunc(std::move(num), std::move(den)));
}

ZScalar random_nonzero_z(const AlgebraContext& ctx, Rng& rng, int height) {
  for (;;) {
    ZScalar z = random_z(ctx, rng, height);
    if (!z.is_zero()) return z;
  }
}

KElement random_k(const AlgebraContext& ctx, Rng& rng, int height) {
  return ctx.k(random_z(ctx, rng, height), random_z(ctx, rng, height));
}

KElement random_nonzero_k(const AlgebraContext& ctx, Rng& rng, int height) {
  for (;;) {
    KElement k = random_k(ctx, rng, height);
    if (!k.is_zero()) return k;
  }
}

KElement random_k_outside_Z(const AlgebraContext& ctx, Rng& rng, int height) {
  return ctx.k(random_z(ctx, rng, height), random_nonzero_z(ctx, rng, height));
}

LElement random_l(const AlgebraContext& ctx, Rng& rng, int height) {
  return LElement(random_k(ctx, rng, height), random_k(ctx, rng, height));
}

LElement random_nonzero_l(const AlgebraContext& ctx, Rng& rng, int height) {
  for (;;) {
    LElement x = random_l(ctx, rng, height);
    if (!x.is_zero()) return x;
  }
}

LElement random_l_circ(const AlgebraContext& ctx, Rng& rng, int height) {
  for (;;) {
    LElement x = random_l(ctx, rng, height);
    if (in_L_circ(x)) return x;
  }
}

}  // namespace chaingeo
