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

#include <gmpxx.h>

#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "chaingeo/f2poly.hpp"

namespace chaingeo {

/// Base field selector: the rationals or GF(2)(t).
enum class ZKind { Q, F2T };

std::string_view zkind_name(ZKind kind);
ZKind parse_zkind(std::string_view text);

/// Element of GF(2)(t) in lowest terms. The denominator is nonzero and, over
/// GF(2), automatically monic; zero is stored as 0/1.
class F2RatFunc {
 public:
  F2RatFunc() : den_(F2Poly::one()) {}
  explicit F2RatFunc(F2Poly num) : num_(std::move(num)), den_(F2Poly::one()) {}
  F2RatFunc(F2Poly num, F2Poly den);

  const F2Poly& num() const { return num_; }
  const F2Poly& den() const { return den_; }
  bool is_zero() const { return num_.is_zero(); }

  F2RatFunc operator+(const F2RatFunc& o) const;
  F2RatFunc operator*(const F2RatFunc& o) const;
  F2RatFunc operator/(const F2RatFunc& o) const;
  F2RatFunc inv() const;

  bool operator==(const F2RatFunc&) const = default;

  std::string str() const;
  static F2RatFunc parse(std::string_view text);

 private:
  void canonicalize();

  F2Poly num_;
  F2Poly den_;
};

/// Element of the centre Z. Values of different kinds never mix; doing so
/// raises ContextMismatch.
class ZScalar {
 public:
  ZScalar() : value_(mpq_class(0)) {}
  explicit ZScalar(mpq_class q);
  explicit ZScalar(F2RatFunc f) : value_(std::move(f)) {}

  static ZScalar zero(ZKind kind);
  static ZScalar one(ZKind kind);
  static ZScalar from_int(ZKind kind, long value);
  /// The indeterminate t of GF(2)(t).
  static ZScalar t();

  ZKind kind() const { return value_.index() == 0 ? ZKind::Q : ZKind::F2T; }
  int characteristic() const { return kind() == ZKind::Q ? 0 : 2; }
  bool is_zero() const;
  bool is_one() const;

  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  const F2RatFunc& ratfunc() const { return std::get<F2RatFunc>(value_); }

  ZScalar operator+(const ZScalar& o) const;
  ZScalar operator-(const ZScalar& o) const;
  ZScalar operator*(const ZScalar& o) const;
  ZScalar operator/(const ZScalar& o) const;
  ZScalar operator-() const;
  ZScalar& operator+=(const ZScalar& o) { return *this = *this + o; }
  ZScalar& operator-=(const ZScalar& o) { return *this = *this - o; }
  ZScalar& operator*=(const ZScalar& o) { return *this = *this * o; }
  ZScalar inv() const;

  bool operator==(const ZScalar& o) const { return value_ == o.value_; }

  /// Canonical text: "p/q" (q omitted when 1) or "t^3+t+1/t+1".
  std::string str() const;
  /// Lenient parse: reduces non-canonical input.
  static ZScalar parse(ZKind kind, std::string_view text);
  /// Strict parse: NotCanonical unless `text` is already canonical.
  static ZScalar parse_canonical(ZKind kind, std::string_view text);

 private:
  std::variant<mpq_class, F2RatFunc> value_;
};

ZScalar zero_like(const ZScalar& x);
ZScalar one_like(const ZScalar& x);

/// Square root in Z if one exists.
std::optional<ZScalar> z_sqrt(const ZScalar& x);

/// Root y of y^2 + y = c in GF(2)(t), if any. Only valid for F2T scalars.
std::optional<ZScalar> z_artin_schreier(const ZScalar& c);

/// Writes x = e^2 + t o^2 in GF(2)(t) and returns (e, o).
std::pair<ZScalar, ZScalar> z_even_odd_roots(const ZScalar& x);

/// A root of A r^2 + B r + C = 0 in Z (A nonzero), if any.
std::optional<ZScalar> z_quadratic_root(const ZScalar& A, const ZScalar& B, const ZScalar& C);

}  // namespace chaingeo
