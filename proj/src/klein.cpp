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

#include "chaingeo/klein.hpp"

#include <array>
#include <utility>

#include "chaingeo/generators.hpp"

namespace chaingeo {

namespace {

constexpr std::array<std::pair<int, int>, 6> kPairs{{{0, 1}, {0, 2}, {0, 3}, {2, 3}, {3, 1}, {1, 2}}};
// Index of the coordinate paired with k by the polar form.
constexpr std::array<int, 6> kPartner{3, 4, 5, 0, 1, 2};

KVec unit(const AlgebraContext& ctx, std::size_t n, std::size_t k) {
  KVec e(n, ctx.k_zero());
  e[k] = ctx.k_one();
  return e;
}

KMatrix single(const KVec& v) { return KMatrix({v}, v.size(), zero_like(v.front())); }

}  // namespace

PluckerVec plucker(const KVec& x, const KVec& y) {
  PluckerVec p;
  p.reserve(6);
  for (auto [i, j] : kPairs) p.push_back(x[i] * y[j] - x[j] * y[i]);
  return p;
}

PluckerVec plucker(const LineP3K& l) { return plucker(l.row(0), l.row(1)); }

KElement klein_quadric(const PluckerVec& v) { return v[0] * v[3] + v[1] * v[4] + v[2] * v[5]; }

KElement klein_polar(const PluckerVec& v, const PluckerVec& w) {
  KElement s = zero_like(v[0]);
  for (int k = 0; k < 6; ++k) s += v[k] * w[kPartner[k]];
  return s;
}

KMatrix polar_space(const KMatrix& s) {
  KMatrix m(6, s.zero());
  for (const KVec& r : s.row_list()) {
    KVec swapped(6, s.zero());
    for (int k = 0; k < 6; ++k) swapped[kPartner[k]] = r[k];
    m.push_row(std::move(swapped));
  }
  return kernel(std::move(m));
}

LineP3K line_from_plucker(const PluckerVec& v) {
  if (!klein_quadric(v).is_zero()) raise(Errc::DimensionError, "vector is off the Klein quadric");
  const KElement o = zero_like(v[0]);
  KMatrix p(4, o);
  for (int r = 0; r < 4; ++r) p.push_row(KVec(4, o));
  for (int k = 0; k < 6; ++k) {
    auto [i, j] = kPairs[k];
    p(i, j) = v[k];
    p(j, i) = -v[k];
  }
  return LineP3K(std::move(p));
}

PluckerVec klein_point_I(const AlgebraContext& ctx) { return unit(ctx, 6, 3); }

KMatrix klein_plane_Z(const AlgebraContext& ctx) {
  return subspace({unit(ctx, 6, 1), unit(ctx, 6, 2), unit(ctx, 6, 3)});
}

KMatrix klein_plane_F(const AlgebraContext& ctx) {
  return subspace({unit(ctx, 6, 0), unit(ctx, 6, 4), unit(ctx, 6, 5)});
}

PluckerVec iota_hat(const PluckerVec& v) {
  const AlgebraContext& ctx = v[0].ctx();
  if (!ctx.galois()) raise(Errc::NotGalois, "iota needs a Galois extension K/Z");
  const LElement i = l_i(ctx);
  PluckerVec out(6, ctx.k_zero());
  for (int k = 0; k < 6; ++k) {
    if (v[k].is_zero()) continue;
    auto [a, b] = kPairs[k];
    const PluckerVec col = plucker(right_mul(unit(ctx, 4, a), i), right_mul(unit(ctx, 4, b), i));
    const KElement c = v[k].conj();
    for (int r = 0; r < 6; ++r) out[r] += col[r] * c;
  }
  return out;
}

// ---------------------------------------------------------------------------

BaerFrame BaerFrame::compute(const AlgebraContext& ctx, std::uint64_t seed, int verify_samples) {
  constexpr int kAttempts = 20;
  Rng rng(seed);
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    KMatrix w(6, ctx.k_zero());
    for (int k = 0; k < 6; ++k) w.push_row(plucker(random_spread_line(ctx, rng, 2)));
    if (rank(w) < 6) continue;
    const auto c = coordinates_in(w, plucker(random_spread_line(ctx, rng, 2)));
    if (!c) continue;
    bool all_nonzero = true;
    for (const KElement& ck : *c) all_nonzero = all_nonzero && !ck.is_zero();
    if (!all_nonzero) continue;

    BaerFrame f;
    KMatrix scaled(6, ctx.k_zero());
    for (int k = 0; k < 6; ++k) {
      PluckerVec wk = w.row(k);
      for (KElement& x : wk) x *= (*c)[k];
      f.frame_.push_back(wk);
      scaled.push_row(std::move(wk));
    }
    f.inverse_ = inverse(scaled);
    for (int s = 0; s < verify_samples; ++s) {
      const LineP3K l = random_spread_line(ctx, rng);
      if (!f.contains(plucker(l))) {
        raise(Errc::FrameSearchFailed, "frame rejects the spread line " + l.str());
      }
    }
    return f;
  }
  raise(Errc::FrameSearchFailed, "no frame in general position found");
}

std::optional<ZVec> BaerFrame::z_coords(const PluckerVec& v) const {
  KVec kappa(6, zero_like(v[0]));
  for (int i = 0; i < 6; ++i) {
    if (v[i].is_zero()) continue;
    for (int j = 0; j < 6; ++j) kappa[j] += v[i] * inverse_(i, j);
  }
  if (is_zero_vector(kappa)) return std::nullopt;
  kappa = normalize_first_nonzero(std::move(kappa));
  ZVec z;
  for (const KElement& k : kappa) {
    if (!k.in_Z()) return std::nullopt;
    z.push_back(k.xi());
  }
  return z;
}

PluckerVec BaerFrame::from_z(const ZVec& z) const {
  PluckerVec v(6, ctx().k_zero());
  for (int k = 0; k < 6; ++k) {
    if (z[k].is_zero()) continue;
    for (int r = 0; r < 6; ++r) v[r] += frame_[k][r] * z[k];
  }
  return v;
}

bool in_PiZ(const BaerFrame& frame, const PluckerVec& v) { return frame.contains(v); }

// ---------------------------------------------------------------------------

ChainSpace chain_space(const Chain& c, std::uint64_t seed) {
  constexpr int kAttempts = 5;
  const AlgebraContext& ctx = c.ctx();
  for (int attempt = 0; attempt < kAttempts; ++attempt) {
    ChainSpace cs{KMatrix(6, ctx.k_zero()), {}};
    for (const LineP3K& s : chain_sample(c, 8, seed + attempt)) {
      KMatrix grown = cs.X;
      grown.push_row(plucker(s));
      grown = row_space(std::move(grown));
      if (grown.rows() == cs.X.rows()) continue;
      cs.X = std::move(grown);
      cs.members.push_back(s);
      if (cs.X.rows() == 4) return cs;
    }
  }
  raise(Errc::DegenerateSpan, "sampled members of " + c.str() + " do not span a solid");
}

ZMatrix z_section(const BaerFrame& frame, const KMatrix& X) {
  const AlgebraContext& ctx = frame.ctx();
  ZMatrix eqs(6, ctx.z_zero());
  const KMatrix ker = kernel(X);
  for (const KVec& e : ker.row_list()) {
    ZVec xi, eta;
    for (const PluckerVec& w : frame.frame()) {
      const KElement c = dot(e, w);
      xi.push_back(c.xi());
      eta.push_back(c.eta());
    }
    eqs.push_row(std::move(xi));
    eqs.push_row(std::move(eta));
  }
  return kernel(std::move(eqs));
}

KMatrix find_line_on_quadric(const ChainSpace& cs) {
  const PluckerVec y = plucker(cs.members.front());
  const KMatrix plane = intersect(cs.X, polar_space(single(y)));
  KMatrix basis = single(y);
  std::vector<KVec> u;
  for (const KVec& r : plane.row_list()) {
    KMatrix grown = basis;
    grown.push_row(r);
    if (rank(grown) > basis.rows()) {
      basis = std::move(grown);
      u.push_back(r);
    }
  }
  if (u.size() != 2) raise(Errc::DimensionError, "tangent section is not a plane");
  // On the plane y ∨ u0 ∨ u1 the quadric reduces to the binary form
  // A r^2 + B r s + C s^2 in the u-coordinates, since y is polar to both.
  const KElement A = klein_quadric(u[0]);
  const KElement B = klein_polar(u[0], u[1]);
  const KElement C = klein_quadric(u[1]);
  KVec z;
  if (A.is_zero()) {
    z = u[0];
  } else if (C.is_zero()) {
    z = u[1];
  } else if (auto r = k_quadratic_root(A, B, C)) {
    z = u[1];
    for (int k = 0; k < 6; ++k) z[k] += u[0][k] * *r;
  } else {
    raise(Errc::NoRationalLine, "tangent cone does not split over K");
  }
  return subspace({y, z});
}

bool tangent_criterion(const Chain& c0, const Chain& c1, const LineP3K& p) {
  if (!chain_contains(c0, p) || !chain_contains(c1, p)) raise(Errc::PointNotOnBothChains, p.str());
  const KMatrix polar = polar_space(single(plucker(p)));
  return intersect(chain_space(c0).X, polar) == intersect(chain_space(c1).X, polar);
}

bool orthogonal_criterion(const Chain& c0, const Chain& c1) {
  if (!c0.ctx().galois()) raise(Errc::NotGalois, "orthogonality of chains needs a Galois extension");
  return contains(chain_space(c0).X, polar_space(chain_space(c1).X));
}

KVec project_pi(const PluckerVec& v) {
  KVec image{v[0], v[4], v[5]};
  if (is_zero_vector(image)) raise(Errc::CentreHit, "point lies in the centre of projection");
  return normalize_first_nonzero(std::move(image));
}

KMatrix frame_projectivity(const std::vector<KVec>& src, const std::vector<KVec>& dst) {
  if (src.size() != 4 || dst.size() != 4) raise(Errc::DimensionError, "a plane frame has four points");
  const KElement o = zero_like(src[0][0]);
  // Columns of S (resp. D) are the first three frame vectors scaled so that
  // they sum to the fourth.
  auto scaled_columns = [&](const std::vector<KVec>& pts) {
    const KMatrix base({pts[0], pts[1], pts[2]}, 3, o);
    const auto lambda = rank(base) == 3 ? coordinates_in(base, pts[3]) : std::nullopt;
    if (!lambda) raise(Errc::DegenerateSpan, "frame points are not in general position");
    KMatrix cols(3, o);
    for (int r = 0; r < 3; ++r) {
      KVec row(3, o);
      for (int k = 0; k < 3; ++k) {
        if ((*lambda)[k].is_zero()) raise(Errc::DegenerateSpan, "frame points are not in general position");
        row[k] = pts[k][r] * (*lambda)[k];
      }
      cols.push_row(std::move(row));
    }
    return cols;
  };
  return multiply(scaled_columns(dst), inverse(scaled_columns(src)));
}

KVec a_tilde_coords(const PointP3K& p) {
  const KVec& x = p.coords();
  if (!x[1].is_zero()) raise(Errc::InvalidPlane, "point is not in the plane x1 = 0");
  return normalize_first_nonzero(KVec{x[0], x[2], x[3]});
}

KMatrix klein_psi(const AlgebraContext& ctx) {
  const LElement zero = l_zero(ctx), one = l_one(ctx), i = l_i(ctx);
  const PlaneP3K a_tilde = plane_A_tilde(ctx);
  std::vector<KVec> src, dst;
  for (const LElement& x : {zero, one, i, one + i}) {
    const LineP3K s = spread_line_of(one, x);
    src.push_back(a_tilde_coords(*meet(s, a_tilde)));
    dst.push_back(project_pi(plucker(s)));
  }
  return frame_projectivity(src, dst);
}

std::string chain_kind_name(ChainKind kind) {
  switch (kind) {
    case ChainKind::Line: return "line";
    case ChainKind::Degenerate: return "degenerate";
    case ChainKind::Nondegenerate: return "nondegenerate";
  }
  return "?";
}

ChainKind classify_via_klein(const Chain& c) {
  const AlgebraContext& ctx = c.ctx();
  const KMatrix m = intersect(chain_space(c).X, klein_plane_Z(ctx));
  const bool has_I = in_span(m, klein_point_I(ctx));
  if (m.rows() == 2 && has_I) return ChainKind::Line;
  if (m.rows() == 1) return has_I ? ChainKind::Degenerate : ChainKind::Nondegenerate;
  raise(Errc::UnexpectedIntersection,
        "X meets the plane Z in dimension " + std::to_string(m.rows()) + " for " + c.str());
}

// ---------------------------------------------------------------------------

SphereCheck check_sphere_conditions(const BaerFrame& frame, const Chain& c, std::uint64_t seed,
                                    int member_samples, int elliptic_pairs) {
  const AlgebraContext& ctx = c.ctx();
  SphereCheck out;
  const ChainSpace cs = chain_space(c, seed);
  const ZMatrix section = z_section(frame, cs.X);
  out.z_dimension_ok = section.rows() == 4;
  if (!out.z_dimension_ok) out.detail += "Z-dimension " + std::to_string(section.rows()) + "; ";

  std::size_t n_members = member_samples;
  while (n_members * (n_members - 1) / 2 < static_cast<std::size_t>(elliptic_pairs)) ++n_members;
  const std::vector<LineP3K> members = chain_sample(c, n_members, seed + 101);
  std::vector<PluckerVec> images;
  out.members_ok = true;
  for (const LineP3K& s : members) {
    images.push_back(plucker(s));
    const PluckerVec& y = images.back();
    if (!in_span(cs.X, y) || !klein_quadric(y).is_zero() || !frame.contains(y)) {
      out.members_ok = false;
      out.detail += "member " + s.str() + " outside X ∩ Π_Z ∩ Q; ";
    }
  }

  out.elliptic_ok = true;
  int pairs = 0;
  for (std::size_t a = 0; a < images.size() && pairs < elliptic_pairs; ++a) {
    for (std::size_t b = a + 1; b < images.size() && pairs < elliptic_pairs; ++b, ++pairs) {
      if (klein_polar(images[a], images[b]).is_zero()) {
        out.elliptic_ok = false;
        out.detail += "joining line of two members lies on Q; ";
      }
    }
  }

  // Points of X ∩ Π_Z ∩ Q: second intersections of Z-lines through a member.
  out.section_ok = out.z_dimension_ok;
  if (out.section_ok) {
    Rng rng(seed + 202);
    const PluckerVec y0 = frame.from_z(*frame.z_coords(images.front()));
    for (int s = 0; s < member_samples; ++s) {
      ZVec coeffs(6, ctx.z_zero());
      for (std::size_t r = 0; r < section.rows(); ++r) {
        const ZScalar k = random_z(ctx, rng, 3);
        for (int j = 0; j < 6; ++j) coeffs[j] += section(r, j) * k;
      }
      if (is_zero_vector(coeffs)) continue;
      const PluckerVec z = frame.from_z(coeffs);
      PluckerVec point = z;
      const KElement qz = klein_quadric(z);
      if (!qz.is_zero()) {
        const KElement r = -klein_polar(y0, z) / qz;
        if (!r.in_Z()) {
          out.section_ok = false;
          out.detail += "second intersection parameter outside Z; ";
          continue;
        }
        point = y0;
        for (int j = 0; j < 6; ++j) point[j] += z[j] * r;
      }
      const LineP3K l = line_from_plucker(point);
      if (!is_spread_line(l) || !chain_contains(c, l)) {
        out.section_ok = false;
        out.detail += "section point " + l.str() + " is not a member; ";
      }
    }
  }

  try {
    const KMatrix line = find_line_on_quadric(cs);
    bool ok = line.rows() == 2 && contains(cs.X, line) && in_span(line, plucker(cs.members.front()));
    ok = ok && klein_quadric(line.row(0)).is_zero() && klein_quadric(line.row(1)).is_zero() &&
         klein_polar(line.row(0), line.row(1)).is_zero();
    out.line_found = ok;
    if (!ok) out.detail += "line on X ∩ Q failed verification; ";
  } catch (const Error& e) {
    if (e.code() != Errc::NoRationalLine) throw;
    out.no_rational_line = true;
  }
  return out;
}

}  // namespace chaingeo
