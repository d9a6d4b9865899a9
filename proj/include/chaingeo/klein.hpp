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
#include <optional>
#include <string>
#include <vector>

#include "chaingeo/spread.hpp"

namespace chaingeo {

/// Plücker coordinates (p01, p02, p03, p23, p31, p12) of a line of P^3(K).
using PluckerVec = KVec;
using ZVec = Vec<ZScalar>;
using ZMatrix = Matrix<ZScalar>;

PluckerVec plucker(const KVec& x, const KVec& y);
PluckerVec plucker(const LineP3K& l);

/// q(v) = p01 p23 + p02 p31 + p03 p12.
KElement klein_quadric(const PluckerVec& v);
/// q(v + w) - q(v) - q(w).
KElement klein_polar(const PluckerVec& v, const PluckerVec& w);
/// Subspace polar to `s` under klein_polar.
KMatrix polar_space(const KMatrix& s);
/// Inverse of the Klein mapping. DimensionError unless v lies on the quadric.
LineP3K line_from_plucker(const PluckerVec& v);

/// I, the image of the line at infinity.
PluckerVec klein_point_I(const AlgebraContext& ctx);
/// The plane of images of lines inside x1 = 0.
KMatrix klein_plane_Z(const AlgebraContext& ctx);
/// The plane spanned by e01, e31, e12, skew to klein_plane_Z.
KMatrix klein_plane_F(const AlgebraContext& ctx);

/// The semilinear map induced on Plücker vectors by iota (Galois only).
PluckerVec iota_hat(const PluckerVec& v);

/// A Z-frame w_1..w_6 of the Klein space. Its Z-span V_Z defines the Baer
/// subspace: a point vK belongs to it iff some multiple of v lies in V_Z.
class BaerFrame {
 public:
  /// Seven-point frame from sampled spread lines; FrameSearchFailed after
  /// too many attempts. The result is checked against further spread lines.
  static BaerFrame compute(const AlgebraContext& ctx, std::uint64_t seed = 1, int verify_samples = 50);
  const AlgebraContext& ctx() const { return frame_.front().front().ctx(); }
  const std::vector<PluckerVec>& frame() const { return frame_; }
  /// Z-coordinates of a multiple of v with first nonzero coordinate one.
  std::optional<ZVec> z_coords(const PluckerVec& v) const;
  bool contains(const PluckerVec& v) const { return z_coords(v).has_value(); }
  PluckerVec from_z(const ZVec& z) const;

 private:
  BaerFrame() = default;
  std::vector<PluckerVec> frame_;
  KMatrix inverse_;  // rows of the frame matrix, inverted
};

bool in_PiZ(const BaerFrame& frame, const PluckerVec& v);

/// Span of the images of four members of a chain.
struct ChainSpace {
  KMatrix X;
  std::vector<LineP3K> members;
};

/// DegenerateSpan if sampled members keep failing to span a solid.
ChainSpace chain_space(const Chain& c, std::uint64_t seed = 1);
/// Z-coordinate basis of X ∩ V_Z (rows relative to the frame).
ZMatrix z_section(const BaerFrame& frame, const KMatrix& X);

/// A line of the Klein space inside X ∩ Q through y = γ(s), s a member.
/// NoRationalLine if the splitting quadratic has no root in K.
KMatrix find_line_on_quadric(const ChainSpace& cs);

/// Tangent planes of the two chain quadrics at γ(p) coincide.
bool tangent_criterion(const Chain& c0, const Chain& c1, const LineP3K& p);
/// span(C0^γ) contains the polar of span(C1^γ). NotGalois in inseparable
/// contexts.
bool orthogonal_criterion(const Chain& c0, const Chain& c1);

/// Projection with centre klein_plane_Z onto klein_plane_F, in the
/// coordinates (p01, p31, p12). CentreHit for points of the centre.
KVec project_pi(const PluckerVec& v);

/// Collineation of P^2(K) taking src[k] to dst[k] (as points), for frames in
/// general position. DegenerateSpan otherwise.
KMatrix frame_projectivity(const std::vector<KVec>& src, const std::vector<KVec>& dst);
/// Coordinates (x0, x2, x3) of a point of the plane x1 = 0.
KVec a_tilde_coords(const PointP3K& p);
/// ψ, built from four reference points of x1 = 0 and their images.
KMatrix klein_psi(const AlgebraContext& ctx);

enum class ChainKind { Line, Degenerate, Nondegenerate };
std::string chain_kind_name(ChainKind kind);

/// Trichotomy via X ∩ klein_plane_Z. UnexpectedIntersection otherwise.
ChainKind classify_via_klein(const Chain& c);

/// Outcome of checking the sphere conditions for one chain.
struct SphereCheck {
  bool z_dimension_ok = false;   // X ∩ Π_Z has Z-dimension 4
  bool members_ok = false;       // members lie in X ∩ Π_Z ∩ Q
  bool section_ok = false;       // sampled section points come from members
  bool elliptic_ok = false;      // no sampled joining line lies on Q
  bool line_found = false;       // a line of X ∩ Q was found and verified
  bool no_rational_line = false; // the split needed a root outside K
  std::string detail;
  bool passed() const {
    return z_dimension_ok && members_ok && section_ok && elliptic_ok && (line_found || no_rational_line);
  }
};

SphereCheck check_sphere_conditions(const BaerFrame& frame, const Chain& c, std::uint64_t seed,
                                    int member_samples = 8, int elliptic_pairs = 20);

}  // namespace chaingeo
