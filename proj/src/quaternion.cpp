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

#include "chaingeo/quaternion.hpp"

#include <vector>

#include "chaingeo/error.hpp"

namespace chaingeo {

namespace {

void check_same(const LElement& x, const LElement& y) {
  if (&x.ctx() != &y.ctx()) raise(Errc::ContextMismatch, "L elements from different contexts");
}

}  // namespace

LElement::LElement(KElement u, KElement v) : u_(std::move(u)), v_(std::move(v)) {
  if (&u_.ctx() != &v_.ctx()) raise(Errc::ContextMismatch, "L element with mixed contexts");
}

LElement::LElement(const KElement& k) : u_(k), v_(k.ctx().k_zero()) {}

LElement LElement::operator+(const LElement& o) const {
  check_same(*this, o);
  return LElement(u_ + o.u_, v_ + o.v_);
}

LElement LElement::operator-(const LElement& o) const {
  check_same(*this, o);
  return LElement(u_ - o.u_, v_ - o.v_);
}

LElement LElement::operator-() const { return LElement(-u_, -v_); }

LElement LElement::operator*(const LElement& o) const {
  check_same(*this, o);
  const AlgebraContext& c = ctx();
  const KElement& u2 = o.u_;
  const KElement& v2 = o.v_;
  if (c.galois()) {
    // (u + iv)(u' + iv') = (uu' - mu2 conj(v) v') + i(conj(u) v' + v u')
    return LElement(u_ * u2 - v_.conj() * v2 * c.mu2(), u_.conj() * v2 + v_ * u2);
  }
  // scalar part uu' + u^D v' + mu2 vv', i-part uv' + vu' + vv' + v^D v'
  const KElement vv = v_ * v2;
  return LElement(u_ * u2 + u_.derive() * v2 + vv * c.mu2(),
                  u_ * v2 + v_ * u2 + vv + v_.derive() * v2);
}

LElement LElement::operator*(const KElement& k) const { return LElement(u_ * k, v_ * k); }

LElement operator*(const KElement& k, const LElement& x) { return LElement(k) * x; }

LElement LElement::anti() const {
  if (ctx().galois()) return LElement(u_.conj(), -v_);
  // u + v + v i, with v i = i v + v^D
  return LElement(u_ + v_ + v_.derive(), v_);
}

KElement LElement::norm() const {
  const AlgebraContext& c = ctx();
  if (c.galois()) return u_.conj() * u_ + v_.conj() * v_ * c.mu2();
  const KElement uv = u_ * v_;
  return u_ * u_ + uv + uv.derive() + v_ * v_ * c.mu2();
}

LElement LElement::inv() const {
  if (is_zero()) raise(Errc::DivisionByZero, "inverse of zero in L");
  const KElement n = norm();
  if (n.is_zero()) {
    raise(Errc::NotDivisionAlgebra, str() + " is a nonzero element of norm 0; L is not a skew field");
  }
  // x^A x = N(x), so N(x)^-1 x^A is a left inverse and hence the inverse.
  return n.inv() * anti();
}

std::string LElement::str() const { return "(" + u_.str() + ")+i(" + v_.str() + ")"; }

std::string LElement::pretty() const {
  if (v_.is_zero()) return u_.pretty();
  std::string vi = "i(" + v_.pretty() + ")";
  if (v_.is_one()) vi = "i";
  if (u_.is_zero()) return vi;
  return u_.pretty() + "+" + vi;
}

LElement l_zero(const AlgebraContext& ctx) { return LElement(ctx.k_zero(), ctx.k_zero()); }
LElement l_one(const AlgebraContext& ctx) { return LElement(ctx.k_one(), ctx.k_zero()); }
LElement l_i(const AlgebraContext& ctx) { return LElement(ctx.k_zero(), ctx.k_one()); }
LElement l_from(const KElement& u, const KElement& v) { return LElement(u, v); }

bool in_L_circ(const LElement& c) {
  if (c.ctx().galois()) return !c.v().is_zero() && !c.u().is_zero();
  return !c.v().is_zero();
}

std::optional<LElement> find_zero_divisor_bounded(const AlgebraContext& ctx, int bound) {
  std::vector<ZScalar> values;
  if (ctx.z_kind() == ZKind::Q) {
    for (int n = -bound; n <= bound; ++n) values.push_back(ctx.z(n));
  } else {
    const std::uint64_t count = std::uint64_t{1} << (bound + 1);
    for (std::uint64_t bits = 0; bits < count; ++bits) {
      values.push_back(ZScalar(F2RatFunc(F2Poly::from_bits(bits))));
    }
  }
  const std::size_t n = values.size();
  const std::size_t total = n * n * n * n;
  for (std::size_t idx = 1; idx < total; ++idx) {
    std::size_t r = idx;
    const ZScalar& c0 = values[r % n];
    r /= n;
    const ZScalar& c1 = values[r % n];
    r /= n;
    const ZScalar& c2 = values[r % n];
    r /= n;
    const ZScalar& c3 = values[r % n];
    LElement x(ctx.k(c0, c1), ctx.k(c2, c3));
    if (x.is_zero()) continue;
    if (x.norm().is_zero()) return x;
  }
  return std::nullopt;
}

}  // namespace chaingeo
