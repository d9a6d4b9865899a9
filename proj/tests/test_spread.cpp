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
#include "chaingeo/generators.hpp"
#include "chaingeo/spread.hpp"
#include "common.hpp"
#include "context_params.hpp"

namespace chaingeo {
namespace {

using testing::ctx_f2;
using testing::ctx_q;

KVec v4(const AlgebraContext&, KElement x0, KElement x1, KElement x2, KElement x3) { return {x0, x1, x2, x3}; }

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::ParseError;
}

Chain chain0(const AlgebraContext& c) {
  const KElement o = c.k_zero(), e = c.k_one();
  return Chain::from_transversal(LineP3K::through(v4(c, e, o, o, o), v4(c, o, e, o, e)));
}

TEST(SpreadLine, Examples) {
  const auto& c = ctx_q();
  const KElement o = c.k_zero(), e = c.k_one(), a = c.a();
  EXPECT_EQ(spread_line(PointP3K(v4(c, o, o, e, o))), infinity_line(c));
  EXPECT_EQ(spread_line(PointP3K::from_l2(l_one(c), LElement(a, e))),
            LineP3K::through(v4(c, e, o, a, e), v4(c, o, e, -e, -a)));
  EXPECT_EQ(spread_line(PointP3K(v4(c, e, o, o, o))), LineP3K::through(v4(c, e, o, o, o), v4(c, o, e, o, o)));
  EXPECT_TRUE(is_spread_line(infinity_line(c)));
  EXPECT_FALSE(is_spread_line(LineP3K::through(v4(c, e, o, o, o), v4(c, o, o, e, o))));
}

TEST(SpreadLine, Incidence) {
  const auto& c = ctx_q();
  const KElement o = c.k_zero(), e = c.k_one();
  const LineP3K s0 = spread_line_of(l_one(c), l_zero(c));
  EXPECT_FALSE(meet(infinity_line(c), s0).has_value());
  const LineP3K t0 = chain0(c).transversal();
  EXPECT_EQ(*meet(t0, s0), PointP3K(v4(c, e, o, o, o)));
  const KVec p = v4(c, e, o, o, o);
  const LineP3K l1 = LineP3K::through(p, v4(c, o, e, o, o));
  const LineP3K l2 = LineP3K::through(p, v4(c, o, o, e, o));
  const LineP3K l3 = LineP3K::through(p, v4(c, o, e, e, o));
  EXPECT_TRUE(pencil_test(l1, l2, l3));
  EXPECT_FALSE(pencil_test(l1, l2, LineP3K::through(p, v4(c, o, o, o, e))));
}

class SpreadProperties : public ::testing::TestWithParam<const AlgebraContext*> {};

TEST_P(SpreadProperties, PartitionOfPoints) {
  const AlgebraContext& c = *GetParam();
  Rng rng(31);
  for (int s = 0; s < 60; ++s) {
    const PointP3K p = random_point(c, rng);
    const LineP3K l = spread_line(p);
    EXPECT_TRUE(l.contains(p));
    EXPECT_TRUE(is_spread_line(l));
    // Any spread line through p is spanned by a lift of p and its i-multiple.
    const PointP3K q(right_mul(p.coords(), random_nonzero_l(c, rng)));
    EXPECT_EQ(spread_line(q), l);
    const LineP3K other = random_spread_line(c, rng);
    if (other != l) {
      EXPECT_FALSE(lines_meet(other, l));
    }
  }
}

TEST_P(SpreadProperties, ChainsAndTransversals) {
  const AlgebraContext& c = *GetParam();
  Rng rng(32);
  for (int s = 0; s < 20; ++s) {
    const Chain ch = random_chain(c, rng);
    const auto ts = chain_transversals(ch);
    EXPECT_EQ(ts.size(), c.galois() ? 2u : 1u);
    const auto members = chain_sample(ch, 6, 100 + s);
    EXPECT_EQ(members.front(), spread_line(PointP3K(ch.transversal().row(0))));
    EXPECT_EQ(members, chain_sample(ch, 6, 100 + s));
    for (const LineP3K& m : members) {
      EXPECT_TRUE(chain_contains(ch, m));
      for (const LineP3K& t : ts) EXPECT_TRUE(lines_meet(t, m));
      EXPECT_TRUE(chains_tangent_at(ch, ch, m));
    }
    if (c.galois()) {
      const Chain swapped = Chain::from_transversal(ts[1]);
      EXPECT_TRUE(same_chain(ch, swapped));
      EXPECT_NE(ts[0], ts[1]);
      for (int k = 0; k < 10; ++k) {
        const LineP3K sl = random_spread_line(c, rng);
        EXPECT_EQ(chain_contains(ch, sl), chain_contains(swapped, sl));
        EXPECT_EQ(iota(sl), sl);
      }
      const PointP3K p = random_point(c, rng);
      EXPECT_EQ(iota(iota(p)), p);
    }
  }
  EXPECT_EQ(code_of([&] { Chain::from_transversal(infinity_line(c)); }), Errc::TransversalIsSpreadLine);
  EXPECT_EQ(code_of([&] { chain_contains(chain0(c), chain0(c).transversal()); }), Errc::NotSpreadLine);
}

TEST_P(SpreadProperties, TangencyIsSymmetric) {
  const AlgebraContext& c = *GetParam();
  Rng rng(33);
  for (int s = 0; s < 15; ++s) {
    // Two chains through a common member.
    const Chain c0 = random_chain(c, rng);
    const LineP3K p = chain_sample(c0, 1, s).front();
    const PointP3K on_p(right_mul(p.row(0), random_nonzero_l(c, rng)));
    const Chain c1 = Chain::from_transversal(LineP3K::through(on_p.coords(), random_k4(c, rng)));
    EXPECT_EQ(chains_tangent_at(c0, c1, p), chains_tangent_at(c1, c0, p));
  }
}

INSTANTIATE_TEST_SUITE_P(Contexts, SpreadProperties, ::testing::Values(&ctx_q(), &ctx_f2()), chaingeo::testing::ContextName());

TEST(Chains, ReferenceChain) {
  const auto& c = ctx_q();
  const KElement o = c.k_zero(), e = c.k_one();
  const Chain ch = chain0(c);
  const auto ts = chain_transversals(ch);
  ASSERT_EQ(ts.size(), 2u);
  EXPECT_EQ(ts[1], LineP3K::through(v4(c, o, e, o, o), v4(c, e, o, e, o)));
  EXPECT_TRUE(chain_contains(ch, spread_line_of(l_one(c), l_zero(c))));
  EXPECT_TRUE(chain_contains(ch, spread_line_of(l_one(c), l_one(c))));
  EXPECT_FALSE(chain_contains(ch, infinity_line(c)));
  EXPECT_EQ(iota(PointP3K(v4(c, e, o, o, o))), PointP3K(v4(c, o, e, o, o)));
  EXPECT_EQ(code_of([&] { iota(PointP3K(v4(ctx_f2(), ctx_f2().k_one(), ctx_f2().k_zero(), ctx_f2().k_zero(),
                                           ctx_f2().k_zero()))); }),
            Errc::NotGalois);
}

TEST(Chains, TangencyExamples) {
  const auto& c = ctx_q();
  const LElement zero = l_zero(c), one = l_one(c), i = l_i(c);
  // Parallel lines K and K + i are tangent at infinity.
  const Chain lk = Chain::from_transversal(affine_line_transversal(one, zero));
  const Chain lki = Chain::from_transversal(affine_line_transversal(one, i));
  const Chain lik = Chain::from_transversal(affine_line_transversal(i, zero));
  EXPECT_TRUE(chains_tangent_at(lk, lki, infinity_line(c)));
  EXPECT_FALSE(chains_tangent_at(lk, lik, spread_line_of(one, zero)));
  EXPECT_TRUE(chains_tangent_at(chain0(c), lik, spread_line_of(one, zero)));
  EXPECT_EQ(code_of([&] { chains_tangent_at(chain0(c), lk, infinity_line(c)); }), Errc::PointNotOnBothChains);
}

TEST(Chains, OrthogonalityExamples) {
  const auto& c = ctx_q();
  const LElement zero = l_zero(c), one = l_one(c), i = l_i(c);
  const Chain lk = Chain::from_transversal(affine_line_transversal(one, zero));
  const Chain lki = Chain::from_transversal(affine_line_transversal(one, i));
  const Chain lik = Chain::from_transversal(affine_line_transversal(i, zero));
  EXPECT_TRUE(chains_orthogonal(lk, lik));
  EXPECT_TRUE(chains_orthogonal(lik, lk));
  EXPECT_FALSE(chains_orthogonal(lk, lki));
  const LineP3K& t0 = lk.transversal();
  const LineP3K& t1 = lik.transversal();
  const std::vector<LineP3K> quad{t0, t1, iota(t0), iota(t1)};
  for (std::size_t x = 0; x < 4; ++x) {
    for (std::size_t y = x + 1; y < 4; ++y) EXPECT_NE(quad[x], quad[y]);
  }
  EXPECT_TRUE(lines_meet(t0, t1) && lines_meet(t1, iota(t0)) && lines_meet(iota(t0), iota(t1)) &&
              lines_meet(iota(t1), t0));
  EXPECT_EQ(code_of([&] {
              const auto& f = ctx_f2();
              const Chain x = Chain::from_transversal(affine_line_transversal(l_one(f), l_zero(f)));
              chains_orthogonal(x, x);
            }),
            Errc::NotGalois);
}

}  // namespace
}  // namespace chaingeo
