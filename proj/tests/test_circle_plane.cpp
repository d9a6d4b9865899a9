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

#include "chaingeo/circle_plane.hpp"
#include "chaingeo/error.hpp"
#include "chaingeo/generators.hpp"
#include "common.hpp"
#include "context_params.hpp"

namespace chaingeo {
namespace {

using testing::ctx_f2;
using testing::ctx_q;
using testing::ctx_q_eisenstein;

Errc code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  return Errc::ParseError;
}

ZScalar q(const char* s) { return ZScalar::parse(ZKind::Q, s); }

struct Q {
  const AlgebraContext& c = ctx_q();
  LElement zero = l_zero(c), one = l_one(c), i = l_i(c), a = LElement(c.a());
  LElement half_l(const char* u, const char* v) const { return LElement(c.k(q(u)), c.k(q(v))); }
};

TEST(Rho, Examples) {
  Q h;
  EXPECT_EQ(rho(spread_line_of(h.one, h.zero)), h.zero);
  EXPECT_EQ(rho(rho_inv(h.a + h.i)), h.a + h.i);
  EXPECT_EQ(code_of([&] { rho(infinity_line(h.c)); }), Errc::InfinityLine);
  EXPECT_EQ(code_of([&] { rho(gamma0_chain(h.c).transversal()); }), Errc::NotSpreadLine);
}

TEST(CircleClassify, Examples) {
  Q h;
  const KElement o = h.c.k_zero(), e = h.c.k_one();
  const Chain k_line = Chain::from_transversal(LineP3K::through({e, o, o, o}, {e, o, e, o}));
  const auto r = circle_classify(k_line);
  ASSERT_TRUE(std::holds_alternative<AffLine>(r));
  EXPECT_EQ(std::get<AffLine>(r), AffLine(h.one, h.zero));
  EXPECT_EQ(std::get<AffLine>(r).pretty(), "K");
  EXPECT_EQ(kind_of(circle_classify(gamma0_chain(h.c))), ChainKind::Nondegenerate);
  const auto d = circle_classify(deg_circle(h.a + h.i).chain);
  ASSERT_EQ(kind_of(d), ChainKind::Degenerate);
  // Recovered generator defines the same set.
  const LElement g = *std::get<Circle>(d).generator;
  EXPECT_EQ((g.inv() * h.i * g).in_K(), true);
}

TEST(AffineMaps, Examples) {
  Q h;
  const Conjugator id{h.one, false};
  EXPECT_EQ(apply_map(AffMap{h.one, h.one, h.one, id}, h.zero), h.one);
  EXPECT_EQ(apply_map(AffMap{h.a, h.one, h.zero, id}, h.a + h.i), LElement(h.c.k(-1), h.c.k(0, -1)));
  EXPECT_EQ(apply_map(AffMap{h.one, h.i, h.zero, id}, h.one), h.i);
  EXPECT_TRUE(is_affinity(AffMap{h.one, h.i, h.zero, id}));
  EXPECT_FALSE(is_affinity(AffMap{h.one, h.one + h.i, h.zero, id}));
  EXPECT_FALSE(is_affinity(AffMap{h.one, h.one, h.zero, Conjugator{h.one, true}}));
  EXPECT_FALSE(is_affinity(AffMap{h.one, h.one, h.zero, Conjugator{h.one + h.i, false}}));
  EXPECT_TRUE(is_affinity(AffMap{h.one, h.one, h.zero, Conjugator{h.i, false}}));
}

class AffinityProperties : public ::testing::TestWithParam<const AlgebraContext*> {};

TEST_P(AffinityProperties, AffinitiesMapLineChainsToLineChains) {
  const AlgebraContext& c = *GetParam();
  Rng rng(51);
  for (int s = 0; s < 20; ++s) {
    const LElement m0 = s % 3 == 0 ? random_nonzero_l(c, rng, 3)
                        : s % 3 == 1 ? LElement(random_nonzero_k(c, rng, 3))
                                     : l_i(c) * random_nonzero_k(c, rng, 3);
    const AffMap f{random_nonzero_l(c, rng, 3), m0, random_l(c, rng, 3), Conjugator{l_one(c), false}};
    bool lines_to_lines = true;
    for (int k = 0; k < 3; ++k) {
      const AffLine l(random_nonzero_l(c, rng, 3), random_l(c, rng, 3));
      const Chain img = map_chain(f, line_chain(l));
      for (const AffinePoint& x : {l.offset(), l.offset() + l.direction() * random_k(c, rng, 3)}) {
        EXPECT_TRUE(chain_has_point(img, apply_map(f, x)));
      }
      lines_to_lines = lines_to_lines && kind_of(circle_classify(img)) == ChainKind::Line;
    }
    EXPECT_EQ(is_affinity(f), lines_to_lines) << f.str();
    if (is_affinity(f)) {
      const Chain g = random_chain(c, rng, 3);
      EXPECT_EQ(kind_of(circle_classify(map_chain(f, g))), kind_of(circle_classify(g)));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Contexts, AffinityProperties, chaingeo::testing::all_contexts(), chaingeo::testing::ContextName());

TEST(DegenerateCircles, ConjugateOfKByAPlusI) {
  Q h;
  const LElement c = h.a + h.i;
  EXPECT_EQ(c * h.a * c.inv(), h.i);
  const Circle d = deg_circle(c);
  EXPECT_TRUE(deg_contains(d, h.zero));
  EXPECT_TRUE(deg_contains(d, h.one));
  // cKc^-1 = Q + Qi, which does not contain a + i.
  EXPECT_TRUE(deg_contains(d, h.i));
  EXPECT_TRUE(deg_contains(d, h.half_l("3/2", "0") + h.i * h.c.k(-7)));
  EXPECT_FALSE(deg_contains(d, h.a + h.i));
  EXPECT_FALSE(deg_contains(d, h.a));
  for (const AffinePoint& x : circle_points(d, 20, 3)) EXPECT_TRUE(deg_contains(d, x));
  EXPECT_EQ(code_of([&] { deg_circle(h.a); }), Errc::NotInLCirc);
  const auto dirs = absolute_directions(d);
  EXPECT_EQ(dirs.size(), 2u);
  EXPECT_TRUE(std::find(dirs.begin(), dirs.end(), PointP3K::from_l2(h.zero, c)) != dirs.end());
  EXPECT_TRUE(stabilizer_check(d, h.one, h.zero));
  EXPECT_TRUE(stabilizer_check(d, c * h.a * c.inv(), h.zero));
  EXPECT_FALSE(stabilizer_check(d, h.a, h.zero));
  EXPECT_EQ(code_of([&] { absolute_directions(Circle{gamma0_chain(h.c), ChainKind::Nondegenerate, {}}); }),
            Errc::NotDegenerate);
}

class DegenerateProperties : public ::testing::TestWithParam<const AlgebraContext*> {};

TEST_P(DegenerateProperties, BaerParametrization) {
  const AlgebraContext& c = *GetParam();
  Rng rng(52);
  for (int s = 0; s < 5; ++s) {
    const Circle d = deg_circle(random_l_circ(c, rng, 3));
    EXPECT_EQ(absolute_directions(d).size(), c.galois() ? 2u : 1u);
    const BaerParam p = baer_param(d);
    EXPECT_FALSE((p.b0.u() * p.b1.v() - p.b0.v() * p.b1.u()).is_zero());
    for (int k = 0; k < 20; ++k) {
      const KElement kk = random_k(c, rng, 4);
      const LElement x = p.point(kk);
      EXPECT_EQ(x, p.c * LElement(kk) * p.c.inv());
      EXPECT_EQ(x, p.combination(kk.xi(), kk.eta()));
      EXPECT_TRUE(deg_contains(d, x));
      EXPECT_TRUE(chain_has_point(d.chain, x));
      const ZScalar w = random_z(c, rng, 4);
      const LElement y = p.point(random_k(c, rng, 4));
      EXPECT_TRUE(deg_contains(d, x * c.k(w) + y * c.k(c.z_one() - w)));
    }
    for (const PointP3K& dir : absolute_directions(d)) {
      // Directions are fixed by stabilizer maps.
      const LElement m1 = p.point(random_nonzero_k(c, rng, 3));
      if (m1.is_zero()) continue;
      EXPECT_TRUE(stabilizer_check(d, m1, p.point(random_k(c, rng, 3)), s, 10));
      const AffMap f = AffMap::agl(m1, l_zero(c));
      const LineP3K through_dir = LineP3K::through(dir.coords(), to_k4(l_one(c), l_zero(c)));
      const LineP3K mapped = map_chain(f, Chain::from_transversal(through_dir)).transversal();
      EXPECT_TRUE(mapped.contains(dir));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Contexts, DegenerateProperties, chaingeo::testing::all_contexts(), chaingeo::testing::ContextName());

TEST(Gamma0, Examples) {
  Q h;
  const auto& c = h.c;
  EXPECT_EQ(gamma0_point(c.k(1), c.k(0)), h.zero);
  EXPECT_EQ(gamma0_point(c.k(0), c.k(1)), h.one);
  EXPECT_EQ(gamma0_point(c.k(1), c.k(1)), h.half_l("1/2", "1/2"));
  EXPECT_EQ(code_of([&] { gamma0_point(c.k(0), c.k(0)); }), Errc::BothZero);
  EXPECT_TRUE(gamma0_contains(h.zero));
  EXPECT_TRUE(gamma0_contains(h.half_l("1/2", "1/2")));
  EXPECT_FALSE(gamma0_contains(LElement(c.k(q("1/2"), q("1/2")))));
  EXPECT_EQ(gamma0_params(h.zero), std::make_pair(c.k(1), c.k(0)));
  EXPECT_EQ(gamma0_params(h.half_l("1/2", "1/2")), std::make_pair(c.k(1), c.k(1)));
  EXPECT_EQ(gamma0_params(h.one), std::make_pair(c.k(0), c.k(1)));
  EXPECT_EQ(code_of([&] { gamma0_params(h.a); }), Errc::NotOnGamma0);
}

class Gamma0Properties : public ::testing::TestWithParam<const AlgebraContext*> {};

TEST_P(Gamma0Properties, EquationBothWays) {
  const AlgebraContext& c = *GetParam();
  const Chain g0 = gamma0_chain(c);
  Rng rng(53);
  for (int s = 0; s < 50; ++s) {
    const KElement k0 = random_k(c, rng), k1 = random_k(c, rng);
    if (k0.is_zero() && k1.is_zero()) continue;
    const AffinePoint x = gamma0_point(k0, k1);
    EXPECT_TRUE(gamma0_contains(x));
    EXPECT_TRUE(chain_has_point(g0, x));
    const auto [p0, p1] = gamma0_params(x);
    EXPECT_EQ(gamma0_point(p0, p1), x);
    const AffinePoint y = gamma0_solution_from(random_nonzero_l(c, rng));
    EXPECT_TRUE(gamma0_contains(y));
    const auto [r0, r1] = gamma0_params(y);
    EXPECT_EQ(gamma0_point(r0, r1), y);
    EXPECT_TRUE(chain_has_point(g0, y));
  }
}

TEST_P(Gamma0Properties, RegularPointsAndOrbit) {
  const AlgebraContext& c = *GetParam();
  const Circle g0{gamma0_chain(c), ChainKind::Nondegenerate, {}};
  const auto reg = regular_points(g0);
  if (c.galois()) {
    EXPECT_EQ(reg, (std::vector<AffinePoint>{l_zero(c), l_one(c)}));
  } else {
    EXPECT_EQ(reg, (std::vector<AffinePoint>{l_zero(c)}));
  }
  EXPECT_EQ(tangent_line(g0, l_zero(c)), AffLine(l_i(c), l_zero(c)));
  Rng rng(54);
  for (int s = 0; s < 8; ++s) {
    const Chain ch = random_chain_of_kind(c, rng, ChainKind::Nondegenerate, 4);
    const Circle g{ch, ChainKind::Nondegenerate, {}};
    const AffMap f = normalize_to_gamma0(g);
    EXPECT_TRUE(is_affinity(f));
    EXPECT_TRUE(same_chain(map_chain(f, ch), gamma0_chain(c))) << f.str();
    for (const AffinePoint& x : circle_points(g, 5, s)) EXPECT_TRUE(gamma0_contains(apply_map(f, x)));
    // Regular points follow affinities.
    const AffMap h = AffMap::agl(random_nonzero_l(c, rng, 3), random_l(c, rng, 3));
    const Circle img{map_chain(h, ch), ChainKind::Nondegenerate, {}};
    std::vector<AffinePoint> mapped;
    for (const AffinePoint& p : regular_points(g)) mapped.push_back(apply_map(h, p));
    auto got = regular_points(img);
    EXPECT_TRUE(std::is_permutation(got.begin(), got.end(), mapped.begin(), mapped.end()));
    for (const AffinePoint& p : regular_points(g)) {
      const AffLine tl = tangent_line(g, p);
      EXPECT_TRUE(chains_tangent_at(ch, line_chain(tl), rho_inv(p)));
    }
  }
  EXPECT_EQ(code_of([&] { normalize_to_gamma0(deg_circle(l_i(c) + LElement(c.a()))); }), Errc::NotNondegenerate);
}

INSTANTIATE_TEST_SUITE_P(Contexts, Gamma0Properties, chaingeo::testing::all_contexts(), chaingeo::testing::ContextName());

TEST(Gamma0, TangentsAndMidline) {
  Q h;
  const Circle g0{gamma0_chain(h.c), ChainKind::Nondegenerate, {}};
  EXPECT_EQ(tangent_line(g0, h.one), AffLine(h.i, h.one));
  EXPECT_EQ(tangent_line(g0, h.one).pretty(), "iK + 1");
  EXPECT_EQ(code_of([&] { tangent_line(g0, h.half_l("1/2", "1/2")); }), Errc::NotRegularPoint);
  const AffLine m = midline(g0);
  EXPECT_EQ(m, AffLine(h.one, h.zero));
  EXPECT_TRUE(lines_orthogonal(m, tangent_line(g0, h.zero)));
  EXPECT_TRUE(lines_orthogonal(m, tangent_line(g0, h.one)));
  EXPECT_TRUE(chains_orthogonal(line_chain(m), g0.chain));
  Rng rng(55);
  for (int s = 0; s < 10; ++s) {
    const AffLine other(random_nonzero_l(h.c, rng, 3), h.zero);
    if (other == m) continue;
    EXPECT_FALSE(chains_orthogonal(line_chain(other), g0.chain));
  }
  EXPECT_EQ(code_of([] {
              const auto& f = ctx_f2();
              midline(Circle{gamma0_chain(f), ChainKind::Nondegenerate, {}});
            }),
            Errc::NotGalois);
}

TEST(Orthogonality, Examples) {
  Q h;
  EXPECT_EQ(star(h.one, h.i), h.c.k(0));
  EXPECT_EQ(star(h.one + h.i, h.one + h.i), h.c.k(2));
  EXPECT_EQ(star(h.a, h.a), h.c.k(1));
  EXPECT_TRUE(lines_orthogonal(AffLine(h.one, h.zero), AffLine(h.i, h.zero)));
  EXPECT_FALSE(lines_orthogonal(AffLine(h.one, h.zero), AffLine(h.one, h.i)));
  EXPECT_TRUE(lines_orthogonal(AffLine(h.one + h.i, h.zero), AffLine((h.one + h.i) * h.i, h.zero)));
  Rng rng(56);
  for (const AlgebraContext* c : {&ctx_q(), &ctx_q_eisenstein()}) {
    for (int s = 0; s < 20; ++s) {
      const LElement x = random_l(*c, rng);
      EXPECT_EQ(star(x, x), x.norm());
      const AffLine l1(random_nonzero_l(*c, rng, 3), random_l(*c, rng, 3));
      const AffLine l2(s % 2 ? l1.direction() * l_i(*c) * random_nonzero_k(*c, rng, 3) : random_nonzero_l(*c, rng, 3),
                       random_l(*c, rng, 3));
      EXPECT_EQ(lines_orthogonal(l1, l2), chains_orthogonal(line_chain(l1), line_chain(l2)));
    }
  }
}

TEST(Hermitian, Examples) {
  Q h;
  const auto& c = h.c;
  const HermitianVariety he{c.k(q("1/2"))};
  const HermitianVariety hf{c.k(q("1/2"), q("2"))};
  EXPECT_TRUE(in_E(he.e));
  EXPECT_TRUE(in_E(hf.e));
  EXPECT_FALSE(in_E(c.a()));
  EXPECT_TRUE(hermitian_contains(he, h.half_l("1/2", "1/2")));
  const AffinePoint w(c.k(q("1/2"), q("1/2")));
  EXPECT_TRUE(hermitian_contains(he, w));
  EXPECT_FALSE(gamma0_contains(w));
  EXPECT_FALSE(hermitian_contains(hf, w));
  EXPECT_EQ(hermitian_witness(he), w);
  for (const KElement& e : e_sample(c, 10, 1)) EXPECT_TRUE(in_E(e));
  // More parameters than the default height bound offers.
  EXPECT_EQ(e_sample(c, 80, 1).size(), 80u);
  EXPECT_EQ(code_of([] { e_sample(ctx_f2(), 1, 1); }), Errc::NotGalois);
}

TEST(Hermitian, IntersectionIsGamma0) {
  for (const AlgebraContext* c : {&ctx_q(), &ctx_q_eisenstein()}) {
    const auto es = e_sample(*c, 4, 2);
    Rng rng(57);
    int found = 0;
    for (std::size_t x = 0; x + 1 < es.size(); ++x) {
      const HermitianVariety he{es[x]}, hf{es[x + 1]};
      for (int s = 0; s < 10; ++s) {
        const KElement k0 = random_k(*c, rng), k1 = random_k(*c, rng);
        if (k0.is_zero() && k1.is_zero()) continue;
        const AffinePoint g = gamma0_point(k0, k1);
        EXPECT_TRUE(hermitian_contains(he, g) && hermitian_contains(hf, g));
        for (const AffinePoint& p : hermitian_intersection_points(he, hf, random_nonzero_l(*c, rng))) {
          ++found;
          EXPECT_TRUE(hermitian_contains(he, p) && hermitian_contains(hf, p));
          EXPECT_TRUE(gamma0_contains(p));
        }
      }
      const AffinePoint w = hermitian_witness(he);
      EXPECT_TRUE(hermitian_contains(he, w));
      EXPECT_FALSE(gamma0_contains(w));
    }
    EXPECT_GT(found, 10);
  }
}

TEST(Beta, PlaneChange) {
  for (const AlgebraContext* c : {&ctx_q(), &ctx_q_eisenstein()}) {
    const PlaneP3K a_tilde = plane_A_tilde(*c);
    EXPECT_EQ(beta_map(a_tilde, l_i(*c)), PointP3K::from_l2(l_one(*c), l_i(*c)));
    EXPECT_TRUE(beta_is_affinity(a_tilde));
    EXPECT_TRUE(beta_is_affinity(iota(a_tilde)));
    const KElement o = c->k_zero(), e = c->k_one();
    const PlaneP3K generic = subspace({{e, e, o, o}, {o, o, e, o}, {o, o, o, e}});
    EXPECT_FALSE(beta_is_affinity(generic));
    EXPECT_EQ(code_of([&] { beta_map(subspace({{e, o, o, o}, {o, e, o, o}, {o, o, e, o}}), l_one(*c)); }),
              Errc::InvalidPlane);
  }
}

TEST(AffLineText, Pretty) {
  Q h;
  EXPECT_EQ(AffLine(h.i * h.c.k(3), h.i).pretty(), "iK");
  EXPECT_EQ(AffLine(h.one + h.i, h.i).pretty(), "(1+i)K + i");
}

}  // namespace
}  // namespace chaingeo
