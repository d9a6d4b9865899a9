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
#include "chaingeo/f2poly.hpp"
#include "chaingeo/zscalar.hpp"

namespace chaingeo {
namespace {

F2Poly P(const char* s) { return F2Poly::parse(s); }

TEST(F2Poly, ParsePrintRoundTrip) {
  for (const char* s : {"0", "1", "t", "t+1", "t^3+t+1", "t^70+t^64+t^3"}) EXPECT_EQ(P(s).str(), s);
  EXPECT_EQ(P("t^2+t^2+1").str(), "1");
}

TEST(F2Poly, Arithmetic) {
  EXPECT_EQ((P("t+1") * P("t+1")).str(), "t^2+1");
  EXPECT_EQ((P("t^65+1") * P("t+1")).str(), "t^66+t^65+t+1");
  F2Poly q, r;
  F2Poly::divmod(P("t^3+t+1"), P("t+1"), q, r);
  EXPECT_EQ(q.str(), "t^2+t");
  EXPECT_EQ(r.str(), "1");
  EXPECT_EQ(gcd(P("t^2+1"), P("t^2+t")).str(), "t+1");
  EXPECT_THROW(P("t") / F2Poly(), Error);
}

TEST(F2Poly, SquareRootAndSplit) {
  EXPECT_EQ(P("t^4+t^2+1").sqrt()->str(), "t^2+t+1");
  EXPECT_FALSE(P("t^3").sqrt().has_value());
  const auto [e, o] = P("t^5+t^4+t+1").even_odd_roots();
  EXPECT_EQ(e * e + P("t") * o * o, P("t^5+t^4+t+1"));
}

TEST(F2Poly, FrobeniusAffine) {
  // p^2 + p = t^2 + t has p = t.
  auto p = solve_frobenius_affine(P("1"), P("t^2+t"));
  ASSERT_TRUE(p);
  EXPECT_EQ(*p * *p + *p, P("t^2+t"));
  EXPECT_FALSE(solve_frobenius_affine(P("1"), P("t")).has_value());
}

TEST(ZScalar, RationalCanonicalForm) {
  EXPECT_EQ(ZScalar::parse(ZKind::Q, "4/-6").str(), "-2/3");
  EXPECT_EQ(ZScalar::parse(ZKind::Q, "0/5").str(), "0");
  EXPECT_THROW(ZScalar::parse_canonical(ZKind::Q, "2/4"), Error);
  EXPECT_EQ(ZScalar::parse_canonical(ZKind::Q, "-7/3").str(), "-7/3");
}

TEST(ZScalar, RatFuncCanonicalForm) {
  const ZScalar x = ZScalar::parse(ZKind::F2T, "t^2+1/t+1");
  EXPECT_EQ(x.str(), "t+1");
  EXPECT_EQ(ZScalar::parse(ZKind::F2T, "t/t^2+t").str(), "1/t+1");
  EXPECT_THROW(ZScalar::parse_canonical(ZKind::F2T, "t^2/t"), Error);
  EXPECT_EQ(ZScalar::parse(ZKind::F2T, x.str()), x);
}

TEST(ZScalar, MixedKindsRejected) {
  try {
    (void)(ZScalar::one(ZKind::Q) + ZScalar::t());
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.code(), Errc::ContextMismatch);
  }
}

TEST(ZScalar, Roots) {
  EXPECT_EQ(z_sqrt(ZScalar::parse(ZKind::Q, "9/4"))->str(), "3/2");
  EXPECT_FALSE(z_sqrt(ZScalar::parse(ZKind::Q, "2")).has_value());
  EXPECT_FALSE(z_sqrt(ZScalar::parse(ZKind::Q, "-1")).has_value());
  EXPECT_FALSE(z_sqrt(ZScalar::t()).has_value());
  EXPECT_EQ(z_sqrt(ZScalar::parse(ZKind::F2T, "t^2/t^4+1"))->str(), "t/t^2+1");
  EXPECT_FALSE(z_artin_schreier(ZScalar::t()).has_value());
  const ZScalar c = ZScalar::parse(ZKind::F2T, "t/t^2+1");
  const auto y = z_artin_schreier(c);
  ASSERT_TRUE(y);
  EXPECT_EQ(*y * *y + *y, c);
}

TEST(ZScalar, QuadraticRoots) {
  const auto q = [](const char* s) { return ZScalar::parse(ZKind::Q, s); };
  const auto r = z_quadratic_root(q("2"), q("-3"), q("1"));
  ASSERT_TRUE(r);
  EXPECT_TRUE((q("2") * *r * *r - q("3") * *r + q("1")).is_zero());
  EXPECT_FALSE(z_quadratic_root(q("1"), q("0"), q("1")).has_value());
  const ZScalar one = ZScalar::one(ZKind::F2T), t = ZScalar::t();
  EXPECT_FALSE(z_quadratic_root(one, one, t).has_value());
  EXPECT_FALSE(z_quadratic_root(one, t, t * t).has_value());
  const auto s = z_quadratic_root(one, t + one, t);
  ASSERT_TRUE(s);
  EXPECT_TRUE((*s * *s + (t + one) * *s + t).is_zero());
}

}  // namespace
}  // namespace chaingeo
