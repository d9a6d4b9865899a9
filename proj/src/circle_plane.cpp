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

#include "chaingeo/circle_plane.hpp"

#include <algorithm>
#include <stdexcept>

#include "chaingeo/generators.hpp"

namespace chaingeo {

namespace {

KElement trace(const KElement& k) { return k + k.conj(); }

/// Whether x and y are K-dependent as vectors of the right K-space L.
bool k_dependent(const LElement& x, const LElement& y) {
  return (x.u() * y.v() - x.v() * y.u()).is_zero();
}

LineP3K transversal_or_throw(const Circle& c, ChainKind want, Errc code, const char* what) {
  if (c.kind != want) raise(code, what);
  return c.chain.transversal();
}

}  // namespace

// ---------------------------------------------------------------------------
// Affine lines

AffLine::AffLine(const LElement& direction, const LElement& offset) {
  if (direction.is_zero()) raise(Errc::DimensionError, "affine line with zero direction");
  if (!direction.u().is_zero()) {
    direction_ = direction * direction.u().inv();
    offset_ = offset - direction_ * offset.u();
  } else {
    direction_ = direction * direction.v().inv();
    offset_ = offset - direction_ * offset.v();
  }
}

AffLine AffLine::through(const AffinePoint& p, const AffinePoint& q) { return AffLine(q - p, p); }

bool AffLine::contains(const AffinePoint& x) const { return k_dependent(direction_, x - offset_); }

std::string AffLine::pretty() const {
  std::string s;
  if (direction_.is_one()) {
    s = "K";
  } else if (direction_ == l_i(direction_.ctx())) {
    s = "iK";
  } else {
    s = "(" + direction_.pretty() + ")K";
  }
  if (!offset_.is_zero()) s += " + " + offset_.pretty();
  return s;
}

// ---------------------------------------------------------------------------
// Maps

LElement Conjugator::apply(const LElement& x) const {
  const LElement y = anti ? x.anti() : x;
  return c.inv() * y * c;
}

bool Conjugator::preserves_K() const { return apply(LElement(c.ctx().a())).in_K(); }

AffMap AffMap::agl(const LElement& m1, const LElement& m) {
  const LElement one = l_one(m1.ctx());
  return AffMap{m1, one, m, Conjugator{one, false}};
}

std::string AffMap::str() const {
  return "m1=" + m1.str() + " m0=" + m0.str() + " m=" + m.str() + " c=" + J.c.str() +
         (J.anti ? " anti" : "");
}

AffinePoint apply_map(const AffMap& f, const AffinePoint& x) { return f.m1 * f.J.apply(x) * f.m0 + f.m; }

bool is_affinity(const AffMap& f) {
  if (f.J.anti || !f.J.preserves_K()) return false;
  if (f.m0.in_K()) return true;
  return f.m0.ctx().galois() && (f.m0 * l_i(f.m0.ctx()).inv()).in_K();
}

Chain map_chain(const AffMap& f, const Chain& c) {
  if (f.J.anti) raise(Errc::ContextUnsupported, "maps with an antiautomorphism come from dualities");
  // (l0, l1) -> (M0^-1 l0, M1 l1 + m M0^-1 l0) with M0 = c m0, M1 = m1 c^-1.
  const LElement m0_inv = (f.J.c * f.m0).inv();
  const LElement m1 = f.m1 * f.J.c.inv();
  auto image = [&](const KVec& x) {
    auto [l0, l1] = to_l2(x);
    const LElement y0 = m0_inv * l0;
    return to_k4(y0, m1 * l1 + f.m * y0);
  };
  const LineP3K& t = c.transversal();
  return Chain::from_transversal(LineP3K::through(image(t.row(0)), image(t.row(1))));
}

// ---------------------------------------------------------------------------
// rho and classification

AffinePoint rho(const LineP3K& s) {
  if (!is_spread_line(s)) raise(Errc::NotSpreadLine, s.str());
  auto [l0, l1] = to_l2(s.row(0));
  if (l0.is_zero()) raise(Errc::InfinityLine, "the line at infinity has no affine point");
  return l1 * l0.inv();
}

LineP3K rho_inv(const AffinePoint& x) { return spread_line_of(l_one(x.ctx()), x); }

Chain line_chain(const AffLine& l) { return Chain::from_transversal(affine_line_transversal(l.direction(), l.offset())); }

AffLine affine_trace(const LineP3K& t) {
  const AlgebraContext& ctx = t.ctx();
  if (!contains(plane_A_tilde(ctx), t.matrix())) raise(Errc::InvalidPlane, "transversal is not in x1 = 0");
  const auto at_inf = meet(t, infinity_line(ctx));
  const KVec& r = t.row(0);
  if (!at_inf || r[0].is_zero()) raise(Errc::InfinityLine, "transversal has no affine trace");
  const KVec& d = at_inf->coords();
  const KElement s = r[0].inv();
  return AffLine(LElement(d[2], d[3]), LElement(r[2] * s, r[3] * s));
}

std::variant<AffLine, Circle> circle_classify(const Chain& c) {
  const AlgebraContext& ctx = c.ctx();
  if (!chain_contains(c, infinity_line(ctx))) return Circle{c, ChainKind::Nondegenerate, std::nullopt};
  const PlaneP3K a_tilde = plane_A_tilde(ctx);
  for (const LineP3K& t : chain_transversals(c)) {
    if (contains(a_tilde, t.matrix())) return affine_trace(t);
  }
  Circle d{c, ChainKind::Degenerate, std::nullopt};
  if (chain_has_point(c, l_zero(ctx)) && chain_has_point(c, l_one(ctx))) {
    const KVec p = meet(c.transversal(), infinity_line(ctx))->coords();
    d.generator = LElement(p[2], p[3]);
  }
  return d;
}

ChainKind kind_of(const std::variant<AffLine, Circle>& v) {
  if (std::holds_alternative<AffLine>(v)) return ChainKind::Line;
  return std::get<Circle>(v).kind;
}

bool chain_has_point(const Chain& c, const AffinePoint& x) { return chain_contains(c, rho_inv(x)); }

// ---------------------------------------------------------------------------
// Degenerate circles

Circle deg_circle(const LElement& c) {
  if (!in_L_circ(c)) raise(Errc::NotInLCirc, c.str());
  const LElement o = l_zero(c.ctx());
  return Circle{Chain::from_transversal(LineP3K::through(to_k4(c, o), to_k4(o, c))), ChainKind::Degenerate, c};
}

bool deg_contains(const Circle& d, const AffinePoint& x) {
  if (d.kind != ChainKind::Degenerate) raise(Errc::NotDegenerate, "not a degenerate circle");
  if (d.generator) return (d.generator->inv() * x * *d.generator).in_K();
  return chain_has_point(d.chain, x);
}

std::vector<PointP3K> absolute_directions(const Circle& d) {
  if (d.kind != ChainKind::Degenerate) raise(Errc::NotDegenerate, "not a degenerate circle");
  const LineP3K inf = infinity_line(d.chain.ctx());
  std::vector<PointP3K> out;
  for (const LineP3K& t : chain_transversals(d.chain)) {
    const auto p = meet(t, inf);
    if (p && std::find(out.begin(), out.end(), *p) == out.end()) out.push_back(*p);
  }
  return out;
}

LElement BaerParam::point(const KElement& k) const {
  const AlgebraContext& ctx = k.ctx();
  const LElement ci = c.inv();
  if (ctx.galois()) {
    return c * LElement(ci.u()) * k + c * l_i(ctx) * LElement(ci.v()) * k.conj();
  }
  return LElement(k) + c * LElement(ci.v()) * k.derive();
}

BaerParam baer_param(const Circle& d) {
  if (d.kind != ChainKind::Degenerate) raise(Errc::NotDegenerate, "not a degenerate circle");
  if (!d.generator) raise(Errc::NotDegenerate, "degenerate circle is not through 0 and 1");
  const LElement& c = *d.generator;
  const AlgebraContext& ctx = c.ctx();
  const LElement ci = c.inv();
  BaerParam p{l_zero(ctx), l_zero(ctx), c};
  if (ctx.galois()) {
    // u k + v conj(k) = (u + v) xi + (u a - v (lambda1 + a)) eta
    const LElement u = c * LElement(ci.u());
    const LElement v = c * l_i(ctx) * LElement(ci.v());
    p.b0 = u + v;
    p.b1 = u * ctx.a() - v * (ctx.k(ctx.lambda1()) + ctx.a());
  } else {
    // k + v k^D = xi + (1 + v) a eta
    const LElement v = c * LElement(ci.v());
    p.b0 = l_one(ctx);
    p.b1 = (l_one(ctx) + v) * ctx.a();
  }
  return p;
}

std::vector<AffinePoint> circle_points(const Circle& c, std::size_t n, std::uint64_t seed) {
  std::vector<AffinePoint> out;
  const LineP3K inf = infinity_line(c.chain.ctx());
  for (const LineP3K& s : chain_sample(c.chain, n + 1, seed)) {
    if (s == inf) continue;
    out.push_back(rho(s));
    if (out.size() == n) break;
  }
  return out;
}

bool stabilizer_check(const Circle& d, const LElement& m1, const LElement& m, std::uint64_t seed, int samples) {
  if (d.kind != ChainKind::Degenerate) raise(Errc::NotDegenerate, "not a degenerate circle");
  if (m1.is_zero()) raise(Errc::DivisionByZero, "stabilizer map needs m1 != 0");
  const LElement m1_inv = m1.inv();
  for (const AffinePoint& x : circle_points(d, samples, seed)) {
    if (!deg_contains(d, m1 * x + m) || !deg_contains(d, m1_inv * (x - m))) return false;
  }
  return true;
}

// ---------------------------------------------------------------------------
// The circle Γ0

Chain gamma0_chain(const AlgebraContext& ctx) {
  const KElement o = ctx.k_zero(), e = ctx.k_one();
  return Chain::from_transversal(LineP3K::through({e, o, o, o}, {o, e, o, e}));
}

AffinePoint gamma0_point(const KElement& k0, const KElement& k1) {
  if (k0.is_zero() && k1.is_zero()) raise(Errc::BothZero, "(k0, k1) = (0, 0)");
  const KElement o = zero_like(k0);
  return LElement(o, k1) * LElement(k0, k1).inv();
}

bool gamma0_contains(const AffinePoint& x) { return x.u() == x.norm(); }

std::pair<KElement, KElement> gamma0_params(const AffinePoint& x) {
  if (!gamma0_contains(x)) raise(Errc::NotOnGamma0, x.str());
  const AlgebraContext& ctx = x.ctx();
  const KElement& q = x.u();
  const KElement& r = x.v();
  if (q.is_zero()) return {ctx.k_one(), ctx.k_zero()};
  const KElement t = r / q;
  const KElement mu2 = ctx.k(ctx.mu2());
  return {mu2 * (ctx.galois() ? t.conj() : t), ctx.k_one()};
}

AffinePoint gamma0_solution_from(const LElement& y) {
  const KElement n = y.norm();
  const KElement kappa = (y.ctx().galois() ? y.u().conj() : y.u()) / n;
  return y * kappa;
}

// ---------------------------------------------------------------------------
// Orthogonality

KElement star(const LElement& x, const LElement& y) {
  const AlgebraContext& ctx = x.ctx();
  if (!ctx.galois()) raise(Errc::NotGalois, "the scalar product needs a Galois extension");
  return x.u().conj() * y.u() + ctx.k(ctx.mu2()) * x.v().conj() * y.v();
}

bool lines_orthogonal(const AffLine& l1, const AffLine& l2) {
  const AlgebraContext& ctx = l1.direction().ctx();
  if (!ctx.galois()) raise(Errc::NotGalois, "orthogonality needs a Galois extension");
  const bool by_iota = k_dependent(l1.direction() * l_i(ctx), l2.direction());
  const bool by_star = star(l1.direction(), l2.direction()).is_zero();
  if (by_iota != by_star) {
    throw std::logic_error("orthogonality criteria disagree for " + l1.pretty() + " and " + l2.pretty());
  }
  return by_iota;
}

// ---------------------------------------------------------------------------
// Non-degenerate circles

std::vector<AffinePoint> regular_points(const Circle& g) {
  transversal_or_throw(g, ChainKind::Nondegenerate, Errc::NotNondegenerate, "not a non-degenerate circle");
  const PlaneP3K a_tilde = plane_A_tilde(g.chain.ctx());
  std::vector<AffinePoint> out;
  for (const LineP3K& t : chain_transversals(g.chain)) {
    const auto p = meet(t, a_tilde);
    if (!p) continue;
    const AffinePoint x = rho(spread_line(*p));
    if (std::find(out.begin(), out.end(), x) == out.end()) out.push_back(x);
  }
  return out;
}

AffLine tangent_line(const Circle& g, const AffinePoint& p) {
  transversal_or_throw(g, ChainKind::Nondegenerate, Errc::NotNondegenerate, "not a non-degenerate circle");
  const AlgebraContext& ctx = g.chain.ctx();
  const PointP3K point = PointP3K::from_l2(l_one(ctx), p);
  const PlaneP3K a_tilde = plane_A_tilde(ctx);
  for (const LineP3K& t : chain_transversals(g.chain)) {
    if (!t.contains(point)) continue;
    const KMatrix trace = intersect(join(rho_inv(p), t), a_tilde);
    return affine_trace(LineP3K(trace));
  }
  raise(Errc::NotRegularPoint, p.str());
}

AffLine midline(const Circle& g) {
  if (!g.chain.ctx().galois()) raise(Errc::NotGalois, "midlines need a Galois extension");
  const auto pts = regular_points(g);
  if (pts.size() != 2) raise(Errc::DimensionError, "expected two regular points");
  return AffLine::through(pts[0], pts[1]);
}

// ---------------------------------------------------------------------------
// Hermitian varieties

std::vector<KElement> e_sample(const AlgebraContext& ctx, std::size_t n, std::uint64_t seed, int height) {
  if (!ctx.galois()) raise(Errc::NotGalois, "E needs a Galois extension");
  Rng rng(seed);
  KElement base, step;
  if (ctx.characteristic() == 2) {
    base = ctx.a() * ctx.k(ctx.lambda1()).inv();
    step = ctx.k_one();
  } else {
    base = ctx.k(ctx.z(1) / ctx.z(2));
    step = ctx.k(ctx.lambda1()) + ctx.a() * ctx.z(2);
  }
  std::vector<KElement> out;
  int repeats = 0;
  while (out.size() < n) {
    const KElement e = base + step * random_z(ctx, rng, height);
    if (!in_E(e)) throw std::logic_error("sampled element " + e.str() + " is not in E");
    if (std::find(out.begin(), out.end(), e) == out.end()) {
      out.push_back(e);
    } else if (++repeats > 8) {
      // Few parameters of this height are left.
      ++height;
      repeats = 0;
    }
  }
  return out;
}

bool in_E(const KElement& e) { return e.ctx().galois() && trace(e).is_one(); }

bool hermitian_contains(const HermitianVariety& h, const AffinePoint& x) {
  if (!x.ctx().galois()) raise(Errc::NotGalois, "Hermitian varieties need a Galois extension");
  return x.norm() == trace(h.e * x.u());
}

std::vector<AffinePoint> hermitian_intersection_points(const HermitianVariety& h, const HermitianVariety& g,
                                                       const LElement& direction) {
  const AlgebraContext& ctx = direction.ctx();
  if (!ctx.galois()) raise(Errc::NotGalois, "Hermitian varieties need a Galois extension");
  // On the ray y k: Tr((e - f) y_u k) = 0 is one linear Z-condition on k;
  // along its solution k0 Z the norm equation is N(y) k0 conj(k0) s^2 =
  // Tr(e y_u k0) s.
  const KElement g0 = (h.e - g.e) * direction.u();
  const ZScalar t1 = trace(g0).xi();
  const ZScalar ta = trace(g0 * ctx.a()).xi();
  std::vector<KElement> rays;
  if (t1.is_zero() && ta.is_zero()) {
    rays = {ctx.k_one(), ctx.a()};
  } else {
    rays = {ctx.k(ta, -t1)};
  }
  std::vector<AffinePoint> out;
  for (const KElement& k0 : rays) {
    const LElement y = direction * k0;
    const KElement lin = trace(h.e * y.u());
    const KElement quad = y.norm();
    if (quad.is_zero() || lin.is_zero()) continue;
    out.push_back(y * (lin / quad));
  }
  return out;
}

AffinePoint hermitian_witness(const HermitianVariety& h) {
  const AlgebraContext& ctx = h.e.ctx();
  for (long k = 1;; ++k) {
    const KElement w = ctx.k(1, k);
    const KElement tr = trace(h.e * w);
    if (tr.is_zero()) continue;
    return LElement(w * (tr / ctx.k(w.field_norm())));
  }
}

// ---------------------------------------------------------------------------
// Orbit theorem

AffMap normalize_to_gamma0(const Circle& g) {
  const auto pts = regular_points(g);
  const AlgebraContext& ctx = g.chain.ctx();
  if (ctx.galois()) {
    const LElement m1 = (pts[1] - pts[0]).inv();
    return AffMap::agl(m1, -(m1 * pts[0]));
  }
  // Move the regular point to 0; the transversal then meets x0 = 0 in a
  // point (id, e + if) and x -> m1 x with m1 (e + if) = id finishes.
  const AffMap shift = AffMap::agl(l_one(ctx), -pts[0]);
  const LineP3K t = map_chain(shift, g.chain).transversal();
  const KElement o = ctx.k_zero(), e = ctx.k_one();
  const PlaneP3K x0_zero = subspace({{o, e, o, o}, {o, o, e, o}, {o, o, o, e}});
  const KVec p = meet(t, x0_zero)->coords();
  const LElement m1 = LElement(o, p[1]) * LElement(p[2], p[3]).inv();
  return AffMap::agl(m1, -(m1 * pts[0]));
}

// ---------------------------------------------------------------------------
// Change of the affine plane

PointP3K beta_map(const PlaneP3K& plane, const AffinePoint& x) {
  const AlgebraContext& ctx = x.ctx();
  if (plane.rows() != 3 || plane.cols() != 4 || !contains(plane, infinity_line(ctx).matrix())) {
    raise(Errc::InvalidPlane, "expected a plane through the line at infinity");
  }
  return *meet(rho_inv(x), plane);
}

bool beta_is_affinity(const PlaneP3K& plane, std::uint64_t seed, int samples) {
  const AlgebraContext& ctx = plane.zero().ctx();
  auto collinear_images = [&](const AffinePoint& p, const AffinePoint& q, const AffinePoint& r) {
    return rank(KMatrix({beta_map(plane, p).coords(), beta_map(plane, q).coords(), beta_map(plane, r).coords()},
                        4, ctx.k_zero())) <= 2;
  };
  const LElement one = l_one(ctx);
  if (!collinear_images(l_zero(ctx), one, LElement(ctx.a()))) return false;
  if (!collinear_images(l_zero(ctx), l_i(ctx), l_i(ctx) * ctx.a())) return false;
  Rng rng(seed);
  for (int s = 0; s < samples; ++s) {
    const LElement m = random_l(ctx, rng, 3);
    const LElement l = random_nonzero_l(ctx, rng, 3);
    const KElement k = random_k_outside_Z(ctx, rng, 3);
    if (!collinear_images(m, m + l, m + l * k)) return false;
  }
  return true;
}

}  // namespace chaingeo
