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

#include "chaingeo/field_tower.hpp"

#include "chaingeo/error.hpp"

namespace chaingeo {

namespace {

void check_same(const KElement& x, const KElement& y) {
  if (&x.ctx() != &y.ctx()) raise(Errc::ContextMismatch, "K elements from different contexts");
}

std::string wrap_if_compound(const std::string& s) {
  return s.find('+') != std::string::npos ? "(" + s + ")" : s;
}

}  // namespace

// ---------------------------------------------------------------------------
// KElement

KElement::KElement(const AlgebraContext& ctx, ZScalar xi, ZScalar eta)
    : ctx_(&ctx), xi_(std::move(xi)), eta_(std::move(eta)) {
  if (xi_.kind() != ctx.z_kind() || eta_.kind() != ctx.z_kind()) {
    raise(Errc::ContextMismatch, "scalar kind differs from the context's centre");
  }
}

const AlgebraContext& KElement::ctx() const {
  if (ctx_ == nullptr) raise(Errc::ContextMismatch, "K element without a context");
  return *ctx_;
}

KElement KElement::operator+(const KElement& o) const {
  check_same(*this, o);
  return KElement(*ctx_, xi_ + o.xi_, eta_ + o.eta_);
}

KElement KElement::operator-(const KElement& o) const {
  check_same(*this, o);
  return KElement(*ctx_, xi_ - o.xi_, eta_ - o.eta_);
}

KElement KElement::operator*(const KElement& o) const {
  check_same(*this, o);
  // (xi + a eta)(xi' + a eta') with a^2 = -lambda1 a - mu1
  const ZScalar ee = eta_ * o.eta_;
  ZScalar re = xi_ * o.xi_ - ctx_->mu1() * ee;
  ZScalar im = xi_ * o.eta_ + eta_ * o.xi_;
  if (!ctx_->lambda1().is_zero()) im -= ctx_->lambda1() * ee;
  return KElement(*ctx_, std::move(re), std::move(im));
}

KElement KElement::operator*(const ZScalar& z) const { return KElement(ctx(), xi_ * z, eta_ * z); }

KElement operator*(const ZScalar& z, const KElement& k) { return k * z; }

KElement KElement::operator/(const KElement& o) const { return *this * o.inv(); }

KElement KElement::operator-() const { return KElement(ctx(), -xi_, -eta_); }

KElement KElement::formal_conj() const {
  const AlgebraContext& c = ctx();
  return KElement(c, xi_ - c.lambda1() * eta_, -eta_);
}

ZScalar KElement::field_norm() const {
  const AlgebraContext& c = ctx();
  return xi_ * xi_ - c.lambda1() * xi_ * eta_ + c.mu1() * eta_ * eta_;
}

KElement KElement::inv() const {
  if (is_zero()) raise(Errc::DivisionByZero, "inverse of zero in K");
  const ZScalar n = field_norm();
  return formal_conj() * n.inv();
}

KElement KElement::conj() const {
  if (!ctx().galois()) raise(Errc::NotGalois, "conjugation needs a Galois extension K/Z");
  return formal_conj();
}

KElement KElement::derive() const {
  if (ctx().galois()) raise(Errc::NotNonGalois, "the derivation D exists only for inseparable K/Z");
  return KElement(*ctx_, ctx_->z_zero(), eta_);
}

bool KElement::operator==(const KElement& o) const {
  return ctx_ == o.ctx_ && xi_ == o.xi_ && eta_ == o.eta_;
}

std::string KElement::str() const {
  return wrap_if_compound(xi_.str()) + "+a" + wrap_if_compound(eta_.str());
}

std::string KElement::pretty() const {
  if (eta_.is_zero()) return xi_.str();
  std::string out = xi_.is_zero() ? "" : wrap_if_compound(xi_.str());
  const std::string e = eta_.str();
  std::string term;
  bool negative = false;
  if (eta_.is_one()) {
    term = "a";
  } else if ((-eta_).is_one()) {
    term = "a";
    negative = true;
  } else if (e[0] == '-' && e.find('/') == std::string::npos) {
    term = e.substr(1) + "a";
    negative = true;
  } else if (e.find_first_of("+/") != std::string::npos) {
    term = "(" + e + ")a";
  } else {
    term = e + "a";
  }
  if (negative) return out + "-" + term;
  return out.empty() ? term : out + "+" + term;
}

KElement zero_like(const KElement& x) { return x.ctx().k_zero(); }
KElement one_like(const KElement& x) { return x.ctx().k_one(); }

// ---------------------------------------------------------------------------
// Roots in K

std::optional<KElement> k_sqrt(const KElement& w) {
  const AlgebraContext& c = w.ctx();
  std::optional<KElement> root;
  if (w.is_zero()) return w;
  if (c.characteristic() != 2) {
    // Work in the basis {1, b} with b = 2a + lambda1, b^2 = disc.
    const ZScalar two = c.z(2);
    const ZScalar disc = c.lambda1() * c.lambda1() - c.z(4) * c.mu1();
    const ZScalar alpha = w.xi() - c.lambda1() * w.eta() / two;
    const ZScalar beta = w.eta() / two;
    auto to_k = [&](const ZScalar& x, const ZScalar& y) {
      return c.k(x + c.lambda1() * y, two * y);
    };
    if (beta.is_zero()) {
      if (auto x = z_sqrt(alpha)) return to_k(*x, c.z_zero());
      if (auto y = z_sqrt(alpha / disc)) return to_k(c.z_zero(), *y);
      return std::nullopt;
    }
    auto n = z_sqrt(alpha * alpha - disc * beta * beta);
    if (!n) return std::nullopt;
    for (const ZScalar& cand : {(alpha + *n) / two, (alpha - *n) / two}) {
      auto x = z_sqrt(cand);
      if (!x || x->is_zero()) continue;
      root = to_k(*x, beta / (two * *x));
      break;
    }
  } else if (c.galois()) {
    // (xi + a eta)^2 = (xi^2 + mu1 eta^2) + a lambda1 eta^2
    auto eta = z_sqrt(w.eta() / c.lambda1());
    if (!eta) return std::nullopt;
    auto xi = z_sqrt(w.xi() + c.mu1() * *eta * *eta);
    if (!xi) return std::nullopt;
    root = c.k(*xi, *eta);
  } else {
    // Squares are xi^2 + mu1 eta^2; every element of Z is one, since
    // {1, mu1} is a basis of Z over Z^2.
    if (!w.eta().is_zero()) return std::nullopt;
    auto [a0, a1] = z_even_odd_roots(w.xi());
    auto [m0, m1] = z_even_odd_roots(c.mu1());
    const ZScalar eta = a1 / m1;
    root = c.k(a0 + m0 * eta, eta);
  }
  if (root && *root * *root == w) return root;
  return std::nullopt;
}

std::optional<KElement> k_artin_schreier(const KElement& cst) {
  const AlgebraContext& c = cst.ctx();
  if (c.characteristic() != 2) raise(Errc::CharMismatch, "Artin-Schreier equation needs characteristic 2");
  // y = xi + a eta:  y^2 + y = (xi^2 + mu1 eta^2 + xi) + a (lambda1 eta^2 + eta)
  std::vector<ZScalar> etas;
  if (c.galois()) {
    auto theta = z_artin_schreier(c.lambda1() * cst.eta());
    if (!theta) return std::nullopt;
    etas.push_back(*theta / c.lambda1());
    etas.push_back((*theta + c.z_one()) / c.lambda1());
  } else {
    etas.push_back(cst.eta());
  }
  for (const ZScalar& eta : etas) {
    auto xi = z_artin_schreier(cst.xi() + c.mu1() * eta * eta);
    if (!xi) continue;
    KElement y = c.k(*xi, eta);
    if (y * y + y == cst) return y;
  }
  return std::nullopt;
}

std::optional<KElement> k_quadratic_root(const KElement& A, const KElement& B, const KElement& C) {
  if (A.is_zero()) raise(Errc::DivisionByZero, "leading coefficient of quadratic is zero");
  const AlgebraContext& c = A.ctx();
  if (c.characteristic() != 2) {
    auto s = k_sqrt(B * B - A * C * c.z(4));
    if (!s) return std::nullopt;
    return (*s - B) / (A + A);
  }
  if (B.is_zero()) return k_sqrt(C / A);
  auto y = k_artin_schreier(A * C / (B * B));
  if (!y) return std::nullopt;
  return B / A * *y;
}

// ---------------------------------------------------------------------------
// AlgebraContext

std::shared_ptr<const AlgebraContext> AlgebraContext::build(ZKind kind, const ZScalar& lambda1,
                                                            const ZScalar& mu1,
                                                            const ZScalar& lambda2,
                                                            const ZScalar& mu2) {
  for (const ZScalar* p : {&lambda1, &mu1, &lambda2, &mu2}) {
    if (p->kind() != kind) raise(Errc::NotCanonical, "parameter " + p->str() + " is not in " + std::string(zkind_name(kind)));
  }
  if (z_quadratic_root(ZScalar::one(kind), lambda1, mu1)) {
    raise(Errc::ReduciblePolynomial, "x^2 + (" + lambda1.str() + ")x + (" + mu1.str() + ") has a root in Z");
  }
  std::shared_ptr<AlgebraContext> ctx(new AlgebraContext());
  ctx->kind_ = kind;
  ctx->lambda1_ = lambda1;
  ctx->mu1_ = mu1;
  ctx->lambda2_ = lambda2;
  ctx->mu2_ = mu2;
  ctx->galois_ = kind != ZKind::F2T || !lambda1.is_zero();
  if (ctx->galois_ && !lambda2.is_zero()) {
    raise(Errc::CharMismatch, "lambda2 must be 0 when K/Z is Galois");
  }
  if (!ctx->galois_ && !lambda2.is_one()) {
    raise(Errc::CharMismatch, "lambda2 must be 1 when K/Z is not Galois");
  }
  // i has a minimal equation over Z. Over K it may split (Hamilton's i^2 =
  // -1 has the root a when a^2 = -1); whether L is a skew field is checked
  // lazily on inversion and by find_zero_divisor_bounded.
  if (z_quadratic_root(ZScalar::one(kind), lambda2, mu2)) {
    raise(Errc::ReduciblePolynomial, "x^2 + (" + lambda2.str() + ")x + (" + mu2.str() + ") has a root in Z");
  }
  return ctx;
}

std::string AlgebraContext::descriptor() const {
  return "z_field=" + std::string(zkind_name(kind_)) + " lambda1=" + lambda1_.str() +
         " mu1=" + mu1_.str() + " lambda2=" + lambda2_.str() + " mu2=" + mu2_.str();
}

}  // namespace chaingeo
