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
#include <utility>
#include <vector>

#include "chaingeo/linalg.hpp"
#include "chaingeo/quaternion.hpp"

namespace chaingeo {

using KVec = Vec<KElement>;
using KMatrix = Matrix<KElement>;

/// L^2 -> K^4 via (l0, l1) = (x0 + i x1, x2 + i x3).
KVec to_k4(const LElement& l0, const LElement& l1);
std::pair<LElement, LElement> to_l2(const KVec& x);

/// Componentwise right multiplication of the L^2-lift by `m`.
KVec right_mul(const KVec& x, const LElement& m);

/// Point of P^3(K) with first nonzero coordinate equal to one.
class PointP3K {
 public:
  explicit PointP3K(KVec coords);
  static PointP3K from_l2(const LElement& l0, const LElement& l1);

  const KVec& coords() const { return coords_; }
  const AlgebraContext& ctx() const { return coords_[0].ctx(); }
  std::pair<LElement, LElement> lift() const { return to_l2(coords_); }

  bool operator==(const PointP3K&) const = default;
  std::string str() const { return vec_str(coords_); }

 private:
  KVec coords_;
};

/// Line of P^3(K): a 2x4 matrix in reduced row-echelon form.
class LineP3K {
 public:
  /// DimensionError unless the rows span a 2-dimensional space.
  explicit LineP3K(KMatrix rows);
  static LineP3K through(const KVec& x, const KVec& y);
  static LineP3K through(const PointP3K& p, const PointP3K& q) { return through(p.coords(), q.coords()); }

  const KMatrix& matrix() const { return m_; }
  const KVec& row(std::size_t r) const { return m_.row(r); }
  const AlgebraContext& ctx() const { return m_(0, 0).ctx(); }
  bool contains(const PointP3K& p) const { return in_span(m_, p.coords()); }

  bool operator==(const LineP3K&) const = default;
  std::string str() const { return matrix_str(m_); }

 private:
  KMatrix m_;
};

/// 3-dimensional K-subspace of L^2 given as a 3x4 RREF matrix.
using PlaneP3K = KMatrix;

KMatrix subspace(const std::vector<KVec>& vectors);

/// The line (0,1)L.
LineP3K infinity_line(const AlgebraContext& ctx);
/// The plane (1,0)K ∨ ∞, i.e. x1 = 0.
PlaneP3K plane_A_tilde(const AlgebraContext& ctx);

/// The unique spread line through P, spanned by x and x i.
LineP3K spread_line(const PointP3K& p);
/// Spread line xL for a nonzero x in L^2.
LineP3K spread_line_of(const LElement& l0, const LElement& l1);
bool is_spread_line(const LineP3K& l);

std::optional<PointP3K> meet(const LineP3K& a, const LineP3K& b);
bool lines_meet(const LineP3K& a, const LineP3K& b);
/// Point of intersection of a line with a plane not containing it.
std::optional<PointP3K> meet(const LineP3K& l, const PlaneP3K& plane);
PlaneP3K join(const LineP3K& l, const PointP3K& p);
PlaneP3K join(const LineP3K& a, const LineP3K& b);
/// True iff the three lines pass through a common point and lie in a plane.
bool pencil_test(const LineP3K& p, const LineP3K& t0, const LineP3K& t1);

/// (l0, l1)K -> (l0 i, l1 i)K. NotGalois in inseparable contexts.
PointP3K iota(const PointP3K& p);
LineP3K iota(const LineP3K& l);
KMatrix iota(const KMatrix& subspace);

/// A chain, represented by one transversal line.
class Chain {
 public:
  /// TransversalIsSpreadLine if `t` is a spread line.
  static Chain from_transversal(const LineP3K& t);

  const LineP3K& transversal() const { return t_; }
  const AlgebraContext& ctx() const { return t_.ctx(); }

  std::string str() const { return t_.str(); }

 private:
  explicit Chain(LineP3K t) : t_(std::move(t)) {}
  LineP3K t_;
};

/// {t} when K/Z is inseparable, {t, t^iota} when it is Galois.
std::vector<LineP3K> chain_transversals(const Chain& c);
/// NotSpreadLine unless `s` is a spread line.
bool chain_contains(const Chain& c, const LineP3K& s);
/// `n` distinct members; the first is the spread line through the first row
/// of the stored transversal.
std::vector<LineP3K> chain_sample(const Chain& c, std::size_t n, std::uint64_t seed, int height = 8);
/// Chains are equal iff their transversal sets are.
bool same_chain(const Chain& a, const Chain& b);

/// PointNotOnBothChains unless p is a member of both chains.
bool chains_tangent_at(const Chain& c0, const Chain& c1, const LineP3K& p);
/// NotGalois in inseparable contexts.
bool chains_orthogonal(const Chain& c0, const Chain& c1);

/// Image of a K-linear map given by its 4x4 matrix acting on row vectors
/// (x -> x M^T).
KVec apply_linear(const KMatrix& m, const KVec& x);
LineP3K apply_linear(const KMatrix& m, const LineP3K& l);

}  // namespace chaingeo
