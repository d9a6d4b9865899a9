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

#include "chaingeo/spread.hpp"

#include <algorithm>

#include "chaingeo/sampling.hpp"

namespace chaingeo {

KVec to_k4(const LElement& l0, const LElement& l1) { return {l0.u(), l0.v(), l1.u(), l1.v()}; }

std::pair<LElement, LElement> to_l2(const KVec& x) {
  if (x.size() != 4) raise(Errc::DimensionError, "expected a vector of K^4");
  return {LElement(x[0], x[1]), LElement(x[2], x[3])};
}

KVec right_mul(const KVec& x, const LElement& m) {
  auto [l0, l1] = to_l2(x);
  return to_k4(l0 * m, l1 * m);
}

KMatrix subspace(const std::vector<KVec>& vectors) {
  if (vectors.empty()) raise(Errc::DimensionError, "subspace needs at least one vector");
  return span_of(vectors, vectors.front().size(), zero_like(vectors.front().front()));
}

// ---------------------------------------------------------------------------

PointP3K::PointP3K(KVec coords) : coords_(normalize_first_nonzero(std::move(coords))) {
  if (coords_.size() != 4) raise(Errc::DimensionError, "points of P^3 have 4 coordinates");
}

PointP3K PointP3K::from_l2(const LElement& l0, const LElement& l1) { return PointP3K(to_k4(l0, l1)); }

LineP3K::LineP3K(KMatrix rows) : m_(row_space(std::move(rows))) {
  if (m_.rows() != 2 || m_.cols() != 4) raise(Errc::DimensionError, "a line needs a rank-2 4-column matrix");
}

LineP3K LineP3K::through(const KVec& x, const KVec& y) { return LineP3K(subspace({x, y})); }

LineP3K infinity_line(const AlgebraContext& ctx) {
  const KElement o = ctx.k_zero(), e = ctx.k_one();
  return LineP3K(subspace({{o, o, e, o}, {o, o, o, e}}));
}

PlaneP3K plane_A_tilde(const AlgebraContext& ctx) {
  const KElement o = ctx.k_zero(), e = ctx.k_one();
  return subspace({{e, o, o, o}, {o, o, e, o}, {o, o, o, e}});
}

LineP3K spread_line(const PointP3K& p) {
  return LineP3K::through(p.coords(), right_mul(p.coords(), l_i(p.ctx())));
}

LineP3K spread_line_of(const LElement& l0, const LElement& l1) { return spread_line(PointP3K::from_l2(l0, l1)); }

bool is_spread_line(const LineP3K& l) {
  const LElement i = l_i(l.ctx());
  return in_span(l.matrix(), right_mul(l.row(0), i)) && in_span(l.matrix(), right_mul(l.row(1), i));
}

std::optional<PointP3K> meet(const LineP3K& a, const LineP3K& b) {
  const KMatrix m = intersect(a.matrix(), b.matrix());
  if (m.rows() == 0) return std::nullopt;
  if (m.rows() != 1) raise(Errc::DimensionError, "meet of equal lines is not a point");
  return PointP3K(m.row(0));
}

bool lines_meet(const LineP3K& a, const LineP3K& b) {
  KMatrix m = a.matrix();
  m.push_row(b.row(0));
  m.push_row(b.row(1));
  return rank(std::move(m)) < 4;
}

std::optional<PointP3K> meet(const LineP3K& l, const PlaneP3K& plane) {
  const KMatrix m = intersect(l.matrix(), plane);
  if (m.rows() != 1) return std::nullopt;
  return PointP3K(m.row(0));
}

PlaneP3K join(const LineP3K& l, const PointP3K& p) {
  KMatrix m = l.matrix();
  m.push_row(p.coords());
  return row_space(std::move(m));
}

PlaneP3K join(const LineP3K& a, const LineP3K& b) { return join(a.matrix(), b.matrix()); }

bool pencil_test(const LineP3K& p, const LineP3K& t0, const LineP3K& t1) {
  const KMatrix common = intersect(intersect(p.matrix(), t0.matrix()), t1.matrix());
  if (common.rows() == 0) return false;
  return join(join(p.matrix(), t0.matrix()), t1.matrix()).rows() <= 3;
}

PointP3K iota(const PointP3K& p) {
  if (!p.ctx().galois()) raise(Errc::NotGalois, "iota needs a Galois extension K/Z");
  return PointP3K(right_mul(p.coords(), l_i(p.ctx())));
}

KMatrix iota(const KMatrix& s) {
  const AlgebraContext& ctx = s.zero().ctx();
  if (!ctx.galois()) raise(Errc::NotGalois, "iota needs a Galois extension K/Z");
  KMatrix out(s.cols(), s.zero());
  const LElement i = l_i(ctx);
  for (const KVec& r : s.row_list()) out.push_row(right_mul(r, i));
  return row_space(std::move(out));
}

LineP3K iota(const LineP3K& l) { return LineP3K(iota(l.matrix())); }

// ---------------------------------------------------------------------------

Chain Chain::from_transversal(const LineP3K& t) {
  if (is_spread_line(t)) raise(Errc::TransversalIsSpreadLine, t.str());
  return Chain(t);
}

std::vector<LineP3K> chain_transversals(const Chain& c) {
  if (!c.ctx().galois()) return {c.transversal()};
  return {c.transversal(), iota(c.transversal())};
}

bool chain_contains(const Chain& c, const LineP3K& s) {
  if (!is_spread_line(s)) raise(Errc::NotSpreadLine, s.str());
  return lines_meet(c.transversal(), s);
}

std::vector<LineP3K> chain_sample(const Chain& c, std::size_t n, std::uint64_t seed, int height) {
  const AlgebraContext& ctx = c.ctx();
  Rng rng(seed);
  std::vector<PointP3K> seen;
  std::vector<LineP3K> out;
  const KVec& r0 = c.transversal().row(0);
  const KVec& r1 = c.transversal().row(1);
  auto add = [&](const KVec& x) {
    PointP3K p(x);
    if (std::find(seen.begin(), seen.end(), p) != seen.end()) return;
    seen.push_back(p);
    out.push_back(spread_line(p));
  };
  if (n > 0) add(r0);
  while (out.size() < n) {
    const KElement k = random_k(ctx, rng, height);
    KVec x(4, ctx.k_zero());
    for (std::size_t j = 0; j < 4; ++j) x[j] = r0[j] * k + r1[j];
    add(x);
  }
  return out;
}

bool same_chain(const Chain& a, const Chain& b) {
  const auto ta = chain_transversals(a);
  const auto tb = chain_transversals(b);
  if (ta.size() != tb.size()) return false;
  for (const LineP3K& t : ta) {
    if (std::find(tb.begin(), tb.end(), t) == tb.end()) return false;
  }
  return true;
}

bool chains_tangent_at(const Chain& c0, const Chain& c1, const LineP3K& p) {
  if (!chain_contains(c0, p) || !chain_contains(c1, p)) raise(Errc::PointNotOnBothChains, p.str());
  for (const LineP3K& t0 : chain_transversals(c0)) {
    for (const LineP3K& t1 : chain_transversals(c1)) {
      if (pencil_test(p, t0, t1)) return true;
    }
  }
  return false;
}

bool chains_orthogonal(const Chain& c0, const Chain& c1) {
  if (!c0.ctx().galois()) raise(Errc::NotGalois, "orthogonality of chains needs a Galois extension");
  const LineP3K& t0 = c0.transversal();
  const LineP3K& t1 = c1.transversal();
  return lines_meet(t0, t1) && lines_meet(t0, iota(t1));
}

KVec apply_linear(const KMatrix& m, const KVec& x) {
  KVec y(m.rows(), m.zero());
  for (std::size_t r = 0; r < m.rows(); ++r) y[r] = dot(m.row(r), x);
  return y;
}

LineP3K apply_linear(const KMatrix& m, const LineP3K& l) {
  return LineP3K::through(apply_linear(m, l.row(0)), apply_linear(m, l.row(1)));
}

}  // namespace chaingeo
