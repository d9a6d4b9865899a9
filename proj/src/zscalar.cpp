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

#include "chaingeo/zscalar.hpp"

#include <cctype>
#include <stdexcept>

#include "chaingeo/error.hpp"

namespace chaingeo {

namespace {

std::string strip_spaces(std::string_view text) {
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  return s;
}

void check_kinds(const ZScalar& a, const ZScalar& b) {
  if (a.kind() != b.kind()) raise(Errc::ContextMismatch, "mixing scalars from Q and GF(2)(t)");
}

}  // namespace

std::string_view zkind_name(ZKind kind) { return kind == ZKind::Q ? "Q" : "F2T"; }

ZKind parse_zkind(std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s == "Q") return ZKind::Q;
  if (s == "F2T") return ZKind::F2T;
  raise(Errc::ParseError, "unknown z_field '" + s + "' (expected Q or F2T)");
}

// ---------------------------------------------------------------------------
// F2RatFunc

F2RatFunc::F2RatFunc(F2Poly num, F2Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) raise(Errc::DivisionByZero, "rational function with zero denominator");
  canonicalize();
}

void F2RatFunc::canonicalize() {
  if (num_.is_zero()) {
    den_ = F2Poly::one();
    return;
  }
  if (den_.is_one()) return;
  const F2Poly g = gcd(num_, den_);
  if (!g.is_one()) {
    num_ = num_ / g;
    den_ = den_ / g;
  }
}

F2RatFunc F2RatFunc::operator+(const F2RatFunc& o) const {
  if (den_ == o.den_) return F2RatFunc(num_ + o.num_, den_);
  return F2RatFunc(num_ * o.den_ + o.num_ * den_, den_ * o.den_);
}

F2RatFunc F2RatFunc::operator*(const F2RatFunc& o) const {
  if (is_zero() || o.is_zero()) return F2RatFunc();
  // Cross-cancel first to keep intermediate degrees small.
  const F2Poly g1 = gcd(num_, o.den_);
  const F2Poly g2 = gcd(o.num_, den_);
  F2RatFunc r;
  r.num_ = (num_ / g1) * (o.num_ / g2);
  r.den_ = (den_ / g2) * (o.den_ / g1);
  return r;
}

F2RatFunc F2RatFunc::inv() const {
  if (is_zero()) raise(Errc::DivisionByZero, "inverse of zero in GF(2)(t)");
  F2RatFunc r;
  r.num_ = den_;
  r.den_ = num_;
  return r;
}

F2RatFunc F2RatFunc::operator/(const F2RatFunc& o) const { return *this * o.inv(); }

std::string F2RatFunc::str() const {
  if (den_.is_one()) return num_.str();
  return num_.str() + "/" + den_.str();
}

F2RatFunc F2RatFunc::parse(std::string_view text) {
  const std::string s = strip_spaces(text);
  const std::size_t slash = s.find('/');
  if (slash == std::string::npos) return F2RatFunc(F2Poly::parse(s));
  if (s.find('/', slash + 1) != std::string::npos) raise(Errc::ParseError, "two '/' in '" + s + "'");
  return F2RatFunc(F2Poly::parse(s.substr(0, slash)), F2Poly::parse(s.substr(slash + 1)));
}

// ---------------------------------------------------------------------------
// ZScalar

ZScalar::ZScalar(mpq_class q) : value_(std::move(q)) { std::get<mpq_class>(value_).canonicalize(); }

ZScalar ZScalar::zero(ZKind kind) {
  return kind == ZKind::Q ? ZScalar(mpq_class(0)) : ZScalar(F2RatFunc());
}

ZScalar ZScalar::one(ZKind kind) {
  return kind == ZKind::Q ? ZScalar(mpq_class(1)) : ZScalar(F2RatFunc(F2Poly::one()));
}

ZScalar ZScalar::from_int(ZKind kind, long value) {
  if (kind == ZKind::Q) return ZScalar(mpq_class(value));
  return (value % 2 != 0) ? one(kind) : zero(kind);
}

ZScalar ZScalar::t() { return ZScalar(F2RatFunc(F2Poly::monomial(1))); }

bool ZScalar::is_zero() const {
  if (kind() == ZKind::Q) return sgn(rational()) == 0;
  return ratfunc().is_zero();
}

bool ZScalar::is_one() const {
  if (kind() == ZKind::Q) return rational() == 1;
  return ratfunc().num().is_one() && ratfunc().den().is_one();
}

ZScalar ZScalar::operator+(const ZScalar& o) const {
  check_kinds(*this, o);
  if (kind() == ZKind::Q) return ZScalar(mpq_class(rational() + o.rational()));
  return ZScalar(ratfunc() + o.ratfunc());
}

ZScalar ZScalar::operator-(const ZScalar& o) const {
  check_kinds(*this, o);
  if (kind() == ZKind::Q) return ZScalar(mpq_class(rational() - o.rational()));
  return ZScalar(ratfunc() + o.ratfunc());
}

ZScalar ZScalar::operator*(const ZScalar& o) const {
  check_kinds(*this, o);
  if (kind() == ZKind::Q) return ZScalar(mpq_class(rational() * o.rational()));
  return ZScalar(ratfunc() * o.ratfunc());
}

ZScalar ZScalar::operator/(const ZScalar& o) const {
  check_kinds(*this, o);
  if (o.is_zero()) raise(Errc::DivisionByZero, "division by zero in Z");
  if (kind() == ZKind::Q) return ZScalar(mpq_class(rational() / o.rational()));
  return ZScalar(ratfunc() / o.ratfunc());
}

ZScalar ZScalar::operator-() const {
  if (kind() == ZKind::Q) return ZScalar(mpq_class(-rational()));
  return *this;
}

ZScalar ZScalar::inv() const { return one(kind()) / *this; }

std::string ZScalar::str() const {
  if (kind() == ZKind::Q) return rational().get_str();
  return ratfunc().str();
}

ZScalar ZScalar::parse(ZKind kind, std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) raise(Errc::ParseError, "empty scalar");
  if (kind == ZKind::F2T) return ZScalar(F2RatFunc::parse(s));
  for (char c : s) {
    if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '/')) {
      raise(Errc::ParseError, "bad rational '" + s + "'");
    }
  }
  mpq_class q;
  if (q.set_str(s, 10) != 0) raise(Errc::ParseError, "bad rational '" + s + "'");
  if (q.get_den() == 0) raise(Errc::DivisionByZero, "rational with zero denominator");
  return ZScalar(std::move(q));
}

ZScalar ZScalar::parse_canonical(ZKind kind, std::string_view text) {
  ZScalar z = parse(kind, text);
  if (z.str() != strip_spaces(text)) {
    raise(Errc::NotCanonical, "'" + std::string(text) + "' should be written '" + z.str() + "'");
  }
  return z;
}

ZScalar zero_like(const ZScalar& x) { return ZScalar::zero(x.kind()); }
ZScalar one_like(const ZScalar& x) { return ZScalar::one(x.kind()); }

std::optional<ZScalar> z_sqrt(const ZScalar& x) {
  if (x.kind() == ZKind::Q) {
    const mpq_class& q = x.rational();
    if (sgn(q) < 0) return std::nullopt;
    if (!mpz_perfect_square_p(q.get_num_mpz_t()) || !mpz_perfect_square_p(q.get_den_mpz_t())) {
      return std::nullopt;
    }
    mpz_class n = sqrt(q.get_num());
    mpz_class d = sqrt(q.get_den());
    return ZScalar(mpq_class(n, d));
  }
  const F2RatFunc& f = x.ratfunc();
  auto n = f.num().sqrt();
  auto d = f.den().sqrt();
  if (!n || !d) return std::nullopt;
  return ZScalar(F2RatFunc(*n, *d));
}

std::optional<ZScalar> z_artin_schreier(const ZScalar& c) {
  if (c.kind() != ZKind::F2T) raise(Errc::CharMismatch, "Artin-Schreier equation needs characteristic 2");
  // With y = p/q in lowest terms, y^2 + y = (p^2 + p q) / q^2 is again in
  // lowest terms, so q^2 must equal the denominator of c.
  const F2RatFunc& f = c.ratfunc();
  auto q = f.den().sqrt();
  if (!q) return std::nullopt;
  auto p = solve_frobenius_affine(*q, f.num());
  if (!p) return std::nullopt;
  return ZScalar(F2RatFunc(*p, *q));
}

std::pair<ZScalar, ZScalar> z_even_odd_roots(const ZScalar& x) {
  if (x.kind() != ZKind::F2T) raise(Errc::CharMismatch, "even/odd split needs GF(2)(t)");
  // n/d = (n d) / d^2
  const F2RatFunc& f = x.ratfunc();
  auto [e, o] = (f.num() * f.den()).even_odd_roots();
  return {ZScalar(F2RatFunc(e, f.den())), ZScalar(F2RatFunc(o, f.den()))};
}

std::optional<ZScalar> z_quadratic_root(const ZScalar& A, const ZScalar& B, const ZScalar& C) {
  if (A.is_zero()) raise(Errc::DivisionByZero, "leading coefficient of quadratic is zero");
  if (A.characteristic() != 2) {
    const ZScalar four = ZScalar::from_int(A.kind(), 4);
    auto s = z_sqrt(B * B - four * A * C);
    if (!s) return std::nullopt;
    return (*s - B) / (A + A);
  }
  if (B.is_zero()) return z_sqrt(C / A);
  auto y = z_artin_schreier(A * C / (B * B));
  if (!y) return std::nullopt;
  return B / A * *y;
}

}  // namespace chaingeo
