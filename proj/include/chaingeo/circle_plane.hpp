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
#include <variant>
#include <vector>

#include "chaingeo/klein.hpp"

namespace chaingeo {

/// A point of the affine plane, identified with l via (1, l)K.
using AffinePoint = LElement;

/// The line lK + m. Directions are scaled so that their first nonzero
/// K-coordinate is one and offsets are reduced modulo the direction, which
/// makes equal lines compare equal.
class AffLine {
 public:
  /// DimensionError for a zero direction.
  AffLine(const LElement& direction, const LElement& offset);
  static AffLine through(const AffinePoint& p, const AffinePoint& q);
  const LElement& direction() const { return direction_; }
  const LElement& offset() const { return offset_; }
  bool contains(const AffinePoint& x) const;
  bool parallel(const AffLine& o) const { return direction_ == o.direction_; }
  bool operator==(const AffLine&) const = default;
  /// "K", "iK + 1", "(1+a)K + i" and the like.
  std::string pretty() const;

 private:
  LElement direction_;
  LElement offset_;
};

struct Circle {
  Chain chain;
  ChainKind kind;
  /// c with Δ = cKc^-1, known for degenerate circles through 0 and 1.
  std::optional<LElement> generator;
};

/// The inner automorphism x -> c^-1 x c, optionally preceded by A.
struct Conjugator {
  LElement c;
  bool anti = false;
  LElement apply(const LElement& x) const;
  bool preserves_K() const;
};

/// x -> m1 x^J m0 + m.
struct AffMap {
  LElement m1;
  LElement m0;
  LElement m;
  Conjugator J;
  static AffMap agl(const LElement& m1, const LElement& m);
  std::string str() const;
};

struct HermitianVariety {
  KElement e;
};

/// Z-basis {b0, b1} of a degenerate circle through 0 and 1 together with
/// its parametrization by K.
struct BaerParam {
  LElement b0;
  LElement b1;
  LElement c;
  LElement point(const KElement& k) const;
  LElement combination(const ZScalar& xi, const ZScalar& eta) const { return b0 * b0.ctx().k(xi) + b1 * b1.ctx().k(eta); }
};

/// InfinityLine for the line at infinity, NotSpreadLine for other lines.
AffinePoint rho(const LineP3K& s);
LineP3K rho_inv(const AffinePoint& x);

Chain line_chain(const AffLine& l);
/// Affine trace of a transversal lying in x1 = 0.
AffLine affine_trace(const LineP3K& t);
std::variant<AffLine, Circle> circle_classify(const Chain& c);
ChainKind kind_of(const std::variant<AffLine, Circle>& v);
/// Point membership of the affine part of a chain.
bool chain_has_point(const Chain& c, const AffinePoint& x);

AffinePoint apply_map(const AffMap& f, const AffinePoint& x);
bool is_affinity(const AffMap& f);
/// Image of a chain under the collineation inducing f; ContextUnsupported
/// when J is an antiautomorphism (f then comes from a duality).
Chain map_chain(const AffMap& f, const Chain& c);

/// NotInLCirc unless c ∈ L°.
Circle deg_circle(const LElement& c);
/// Membership in cKc^-1.
bool deg_contains(const Circle& d, const AffinePoint& x);
/// NotDegenerate.
std::vector<PointP3K> absolute_directions(const Circle& d);
/// NotDegenerate; also requires a generator.
BaerParam baer_param(const Circle& d);
/// Whether x -> m1 x + m keeps the sampled points of d inside d, both
/// forwards and backwards. NotDegenerate.
bool stabilizer_check(const Circle& d, const LElement& m1, const LElement& m, std::uint64_t seed = 1,
                      int samples = 50);
/// `n` affine points of a circle (members other than ∞).
std::vector<AffinePoint> circle_points(const Circle& c, std::size_t n, std::uint64_t seed);

Chain gamma0_chain(const AlgebraContext& ctx);
/// i k1 (k0 + i k1)^-1; BothZero.
AffinePoint gamma0_point(const KElement& k0, const KElement& k1);
bool gamma0_contains(const AffinePoint& x);
/// NotOnGamma0.
std::pair<KElement, KElement> gamma0_params(const AffinePoint& x);
/// Sample solution of u = N(u + iv): a point x with N(x) = x_u, built from a
/// random nonzero y as y N(y)^-1 times a K-factor.
AffinePoint gamma0_solution_from(const LElement& y);

/// NotGalois.
KElement star(const LElement& x, const LElement& y);
bool lines_orthogonal(const AffLine& l1, const AffLine& l2);

/// NotNondegenerate.
std::vector<AffinePoint> regular_points(const Circle& g);
/// NotNondegenerate, NotRegularPoint.
AffLine tangent_line(const Circle& g, const AffinePoint& p);
/// NotGalois, NotNondegenerate.
AffLine midline(const Circle& g);

/// NotGalois.
std::vector<KElement> e_sample(const AlgebraContext& ctx, std::size_t n, std::uint64_t seed, int height = 4);
bool in_E(const KElement& e);
/// NotGalois.
bool hermitian_contains(const HermitianVariety& h, const AffinePoint& x);
/// Points of the two Hermitian varieties' intersection, from a sampled
/// direction; empty if the sample yields none.
std::vector<AffinePoint> hermitian_intersection_points(const HermitianVariety& h, const HermitianVariety& g,
                                                       const LElement& direction);
/// A point of H_e outside Γ0.
AffinePoint hermitian_witness(const HermitianVariety& h);

/// NotNondegenerate. An AGL map taking g onto Γ0.
AffMap normalize_to_gamma0(const Circle& g);

/// InvalidPlane unless `plane` is a plane through ∞.
PointP3K beta_map(const PlaneP3K& plane, const AffinePoint& x);
/// Sampled collinearity test of x -> beta_map(plane, x), including the
/// triple 0, 1, a.
bool beta_is_affinity(const PlaneP3K& plane, std::uint64_t seed = 1, int samples = 20);

}  // namespace chaingeo
