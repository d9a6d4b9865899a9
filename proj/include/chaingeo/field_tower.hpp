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

#include <memory>
#include <optional>
#include <string>

#include "chaingeo/zscalar.hpp"

namespace chaingeo {

class AlgebraContext;

/// Element xi + a*eta of K = Z(a), reduced with a^2 = -lambda1 a - mu1.
///
/// Elements keep a non-owning pointer to their context; the context must
/// outlive them. A default-constructed element has no context and may only be
/// assigned to.
class KElement {
 public:
  KElement() = default;
  KElement(const AlgebraContext& ctx, ZScalar xi, ZScalar eta);

  const AlgebraContext& ctx() const;
  const ZScalar& xi() const { return xi_; }
  const ZScalar& eta() const { return eta_; }

  bool is_zero() const { return xi_.is_zero() && eta_.is_zero(); }
  bool is_one() const { return xi_.is_one() && eta_.is_zero(); }
  bool in_Z() const { return eta_.is_zero(); }

  KElement operator+(const KElement& o) const;
  KElement operator-(const KElement& o) const;
  KElement operator*(const KElement& o) const;
  KElement operator/(const KElement& o) const;
  KElement operator-() const;
  KElement operator*(const ZScalar& z) const;
  KElement& operator+=(const KElement& o) { return *this = *this + o; }
  KElement& operator-=(const KElement& o) { return *this = *this - o; }
  KElement& operator*=(const KElement& o) { return *this = *this * o; }

  /// DivisionByZero on zero.
  KElement inv() const;
  /// Galois conjugation xi + a eta -> (xi - lambda1 eta) - a eta. NotGalois
  /// in an inseparable context.
  KElement conj() const;
  /// Derivation xi + a eta -> a eta. NotNonGalois in a Galois context.
  KElement derive() const;
  /// (xi - lambda1 eta) - a eta regardless of the Galois flag; x times this
  /// is the field norm in every characteristic.
  KElement formal_conj() const;
  ZScalar field_norm() const;

  bool operator==(const KElement& o) const;

  /// Canonical "<xi>+a<eta>"; F2T scalars containing '+' are parenthesized.
  std::string str() const;
  /// Human-oriented form such as "3+2a", "-a" or "0".
  std::string pretty() const;

 private:
  const AlgebraContext* ctx_ = nullptr;
  ZScalar xi_;
  ZScalar eta_;
};

KElement operator*(const ZScalar& z, const KElement& k);

KElement zero_like(const KElement& x);
KElement one_like(const KElement& x);

/// The tower Z < K < L: K = Z(a) with a^2 + lambda1 a + mu1 = 0 and
/// L = K + iK with i^2 + lambda2 i + mu2 = 0.
class AlgebraContext {
 public:
  /// Validates every invariant: both quadratics irreducible, lambda2
  /// consistent with the derived Galois flag, all parameters of `kind`.
  static std::shared_ptr<const AlgebraContext> build(ZKind kind, const ZScalar& lambda1,
                                                     const ZScalar& mu1, const ZScalar& lambda2,
                                                     const ZScalar& mu2);

  ZKind z_kind() const { return kind_; }
  int characteristic() const { return kind_ == ZKind::Q ? 0 : 2; }
  bool galois() const { return galois_; }
  const ZScalar& lambda1() const { return lambda1_; }
  const ZScalar& mu1() const { return mu1_; }
  const ZScalar& lambda2() const { return lambda2_; }
  const ZScalar& mu2() const { return mu2_; }

  ZScalar z(long value) const { return ZScalar::from_int(kind_, value); }
  ZScalar z_zero() const { return ZScalar::zero(kind_); }
  ZScalar z_one() const { return ZScalar::one(kind_); }

  KElement k(const ZScalar& xi, const ZScalar& eta) const { return KElement(*this, xi, eta); }
  KElement k(const ZScalar& xi) const { return KElement(*this, xi, z_zero()); }
  KElement k(long xi, long eta = 0) const { return KElement(*this, z(xi), z(eta)); }
  KElement k_zero() const { return k(0); }
  KElement k_one() const { return k(1); }
  KElement a() const { return k(0, 1); }

  /// "z_field=Q lambda1=0 mu1=1 lambda2=0 mu2=1"
  std::string descriptor() const;

 private:
  AlgebraContext() = default;

  ZKind kind_ = ZKind::Q;
  ZScalar lambda1_, mu1_, lambda2_, mu2_;
  bool galois_ = true;
};

/// Square root in K, if any.
std::optional<KElement> k_sqrt(const KElement& w);
/// Root y of y^2 + y = c in K (characteristic 2 only), if any.
std::optional<KElement> k_artin_schreier(const KElement& c);
/// A root of A r^2 + B r + C = 0 in K (A nonzero), if any.
std::optional<KElement> k_quadratic_root(const KElement& A, const KElement& B, const KElement& C);

KElement parse_k(const AlgebraContext& ctx, std::string_view text);

}  // namespace chaingeo
