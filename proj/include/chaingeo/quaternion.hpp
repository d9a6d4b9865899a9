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

#include <optional>
#include <string>

#include "chaingeo/field_tower.hpp"

namespace chaingeo {

/// Element u + i v of the quaternion skew field L = K + iK. The factor i is
/// written on the left of the K-coordinate v.
class LElement {
 public:
  LElement() = default;
  LElement(KElement u, KElement v);
  /// Embeds K as (k, 0).
  explicit LElement(const KElement& k);

  const AlgebraContext& ctx() const { return u_.ctx(); }
  const KElement& u() const { return u_; }
  const KElement& v() const { return v_; }

  bool is_zero() const { return u_.is_zero() && v_.is_zero(); }
  bool is_one() const { return u_.is_one() && v_.is_zero(); }
  bool in_K() const { return v_.is_zero(); }
  /// Membership in Ki (u = 0).
  bool in_Ki() const { return u_.is_zero(); }

  LElement operator+(const LElement& o) const;
  LElement operator-(const LElement& o) const;
  LElement operator-() const;
  /// Multiplication through the commutation rule u i = i conj(u) (Galois)
  /// or u i = i u + u^D (inseparable) and the minimal equation of i.
  LElement operator*(const LElement& o) const;
  LElement operator*(const KElement& k) const;
  LElement& operator+=(const LElement& o) { return *this = *this + o; }
  LElement& operator*=(const LElement& o) { return *this = *this * o; }

  /// The involutory antiautomorphism A fixing K.
  LElement anti() const;
  /// N(x) = x^A x, an element of K (of Z when K/Z is Galois).
  KElement norm() const;
  /// Two-sided inverse N(x)^-1 x^A. DivisionByZero for 0, NotDivisionAlgebra
  /// if a nonzero element has vanishing norm.
  LElement inv() const;

  bool operator==(const LElement& o) const { return u_ == o.u_ && v_ == o.v_; }

  /// Canonical "(<K>)+i(<K>)".
  std::string str() const;
  std::string pretty() const;

 private:
  KElement u_;
  KElement v_;
};

LElement operator*(const KElement& k, const LElement& x);

LElement l_zero(const AlgebraContext& ctx);
LElement l_one(const AlgebraContext& ctx);
LElement l_i(const AlgebraContext& ctx);
LElement l_from(const KElement& u, const KElement& v);

/// Membership in L°: outside K and Ki when Galois, outside K otherwise.
bool in_L_circ(const LElement& c);

/// Exhaustive search for a nonzero x with N(x) = 0 among elements whose
/// Z-coordinates are small: integers in [-bound, bound] over Q, polynomials of
/// degree <= bound over GF(2)(t). Returns a witness if the algebra splits.
std::optional<LElement> find_zero_divisor_bounded(const AlgebraContext& ctx, int bound);

LElement parse_l(const AlgebraContext& ctx, std::string_view text);

}  // namespace chaingeo
