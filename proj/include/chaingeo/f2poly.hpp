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

#include <compare>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chaingeo {

/// Polynomial in t over the two-element field, stored as a packed bit
/// vector (bit k of the vector is the coefficient of t^k). The word vector is
/// always trimmed so that equal polynomials compare equal word by word.
class F2Poly {
 public:
  F2Poly() = default;

  static F2Poly one();
  static F2Poly monomial(unsigned degree);
  static F2Poly from_bits(std::uint64_t bits);

  /// -1 for the zero polynomial.
  int degree() const;
  bool is_zero() const { return words_.empty(); }
  bool is_one() const { return words_.size() == 1 && words_[0] == 1; }
  bool coeff(unsigned k) const;
  void flip(unsigned k);

  F2Poly operator+(const F2Poly& other) const;
  F2Poly& operator+=(const F2Poly& other);
  F2Poly operator*(const F2Poly& other) const;

  /// Long division; throws DivisionByZero on a zero divisor.
  static void divmod(const F2Poly& num, const F2Poly& den, F2Poly& quot, F2Poly& rem);
  F2Poly operator/(const F2Poly& den) const;
  F2Poly operator%(const F2Poly& den) const;

  friend F2Poly gcd(F2Poly a, F2Poly b);

  /// A polynomial over GF(2) is a square iff all odd coefficients vanish;
  /// the root is then obtained by halving every exponent.
  std::optional<F2Poly> sqrt() const;

  /// Returns (e, o) with p = e^2 + t o^2.
  std::pair<F2Poly, F2Poly> even_odd_roots() const;

  /// Descending monomials joined by '+', e.g. "t^3+t+1"; zero prints "0".
  std::string str() const;
  static F2Poly parse(std::string_view text);

  bool operator==(const F2Poly&) const = default;
  std::strong_ordering operator<=>(const F2Poly& other) const;

  const std::vector<std::uint64_t>& words() const { return words_; }

 private:
  void trim();
  void xor_shifted(const F2Poly& other, unsigned shift);

  std::vector<std::uint64_t> words_;
};

/// Solves p^2 + q p = n over GF(2)[t] for p. The map p -> p^2 + q p is
/// GF(2)-linear, so the search is a linear system over GF(2) on the
/// coefficients of p with the degree bound max(deg n / 2, deg q).
std::optional<F2Poly> solve_frobenius_affine(const F2Poly& q, const F2Poly& n);

}  // namespace chaingeo
