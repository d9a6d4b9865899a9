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
#include <ostream>
#include <string>

#include "chaingeo/field_tower.hpp"
#include "chaingeo/quaternion.hpp"

namespace chaingeo {

inline void PrintTo(const ZScalar& x, std::ostream* os) { *os << x.str(); }
inline void PrintTo(const KElement& x, std::ostream* os) { *os << x.str(); }
inline void PrintTo(const LElement& x, std::ostream* os) { *os << x.str(); }

}  // namespace chaingeo

namespace chaingeo::testing {

/// Hamilton quaternions over the rationals.
inline const AlgebraContext& ctx_q() {
  static const auto ctx = AlgebraContext::build(ZKind::Q, ZScalar::from_int(ZKind::Q, 0),
                                                ZScalar::from_int(ZKind::Q, 1), ZScalar::from_int(ZKind::Q, 0),
                                                ZScalar::from_int(ZKind::Q, 1));
  return *ctx;
}

/// a^2 = t, i^2 + i + 1 = 0 over GF(2)(t). A skew field: t has odd valuation
/// at t = 0, values of x^2 + xy + y^2 have even valuation.
inline const AlgebraContext& ctx_f2() {
  static const auto ctx = AlgebraContext::build(ZKind::F2T, ZScalar::zero(ZKind::F2T), ZScalar::t(),
                                                ZScalar::one(ZKind::F2T), ZScalar::one(ZKind::F2T));
  return *ctx;
}

/// a^2 = t, i^2 + i = t. Builds, but L is split.
inline const AlgebraContext& ctx_f2_split() {
  static const auto ctx = AlgebraContext::build(ZKind::F2T, ZScalar::zero(ZKind::F2T), ZScalar::t(),
                                                ZScalar::one(ZKind::F2T), ZScalar::t());
  return *ctx;
}

/// A Galois context with lambda1 != 0: a^2 + a + 1 = 0, i^2 = -2 over Q.
inline const AlgebraContext& ctx_q_eisenstein() {
  static const auto ctx = AlgebraContext::build(ZKind::Q, ZScalar::from_int(ZKind::Q, 1),
                                                ZScalar::from_int(ZKind::Q, 1), ZScalar::from_int(ZKind::Q, 0),
                                                ZScalar::from_int(ZKind::Q, 2));
  return *ctx;
}

inline LElement L(const KElement& u, const KElement& v) { return LElement(u, v); }

}  // namespace chaingeo::testing
