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

#include "chaingeo/f2poly.hpp"

#include <algorithm>
#include <bit>
#include <cctype>

#include "chaingeo/error.hpp"

namespace chaingeo {

F2Poly F2Poly::one() { return from_bits(1); }

F2Poly F2Poly::monomial(unsigned degree) {
  F2Poly p;
  p.flip(degree);
  return p;
}

F2Poly F2Poly::from_bits(std::uint64_t bits) {
  F2Poly p;
  if (bits != 0) p.words_.push_back(bits);
  return p;
}

int F2Poly::degree() const {
  if (words_.empty()) return -1;
  const std::uint64_t top = words_.back();
  return static_cast<int>(64 * (words_.size() - 1)) + 63 - std::countl_zero(top);
}

bool F2Poly::coeff(unsigned k) const {
  const std::size_t w = k / 64;
  if (w >= words_.size()) return false;
  return (words_[w] >> (k % 64)) & 1U;
}

void F2Poly::flip(unsigned k) {
  const std::size_t w = k / 64;
  if (w >= words_.size()) words_.resize(w + 1, 0);
  words_[w] ^= std::uint64_t{1} << (k % 64);
  trim();
}

void F2Poly::trim() {
  while (!words_.empty() && words_.back() == 0) words_.pop_back();
}

void F2Poly::xor_shifted(const F2Poly& other, unsigned shift) {
  if (other.is_zero()) return;
  const std::size_t word_shift = shift / 64;
  const unsigned bit_shift = shift % 64;
  const std::size_t need = other.words_.size() + word_shift + 1;
  if (words_.size() < need) words_.resize(need, 0);
  for (std::size_t k = 0; k < other.words_.size(); ++k) {
    const std::uint64_t w = other.words_[k];
    words_[k + word_shift] ^= w << bit_shift;
    if (bit_shift != 0) words_[k + word_shift + 1] ^= w >> (64 - bit_shift);
  }
  trim();
}

F2Poly F2Poly::operator+(const F2Poly& other) const {
  F2Poly r = *this;
  r += other;
  return r;
}

F2Poly& F2Poly::operator+=(const F2Poly& other) {
  if (words_.size() < other.words_.size()) words_.resize(other.words_.size(), 0);
  for (std::size_t k = 0; k < other.words_.size(); ++k) words_[k] ^= other.words_[k];
  trim();
  return *this;
}

F2Poly F2Poly::operator*(const F2Poly& other) const {
  if (is_zero() || other.is_zero()) return {};
  const F2Poly& small = words_.size() <= other.words_.size() ? *this : other;
  const F2Poly& big = &small == this ? other : *this;
  F2Poly r;
  r.words_.assign(small.words_.size() + big.words_.size() + 1, 0);
  for (std::size_t wi = 0; wi < small.words_.size(); ++wi) {
    std::uint64_t w = small.words_[wi];
    while (w != 0) {
      const unsigned b = static_cast<unsigned>(std::countr_zero(w));
      w &= w - 1;
      const unsigned shift = b;
      for (std::size_t k = 0; k < big.words_.size(); ++k) {
        const std::uint64_t x = big.words_[k];
        r.words_[wi + k] ^= x << shift;
        if (shift != 0) r.words_[wi + k + 1] ^= x >> (64 - shift);
      }
    }
  }
  r.trim();
  return r;
}

void F2Poly::divmod(const F2Poly& num, const F2Poly& den, F2Poly& quot, F2Poly& rem) {
  if (den.is_zero()) raise(Errc::DivisionByZero, "polynomial division by zero");
  quot = F2Poly();
  rem = num;
  const int dd = den.degree();
  int rd = rem.degree();
  while (rd >= dd) {
    const unsigned shift = static_cast<unsigned>(rd - dd);
    quot.flip(shift);
    rem.xor_shifted(den, shift);
    rd = rem.degree();
  }
}

F2Poly F2Poly::operator/(const F2Poly& den) const {
  F2Poly q, r;
  divmod(*this, den, q, r);
  return q;
}

F2Poly F2Poly::operator%(const F2Poly& den) const {
  F2Poly q, r;
  divmod(*this, den, q, r);
  return r;
}

F2Poly gcd(F2Poly a, F2Poly b) {
  while (!b.is_zero()) {
    F2Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

std::optional<F2Poly> F2Poly::sqrt() const {
  F2Poly root;
  const int d = degree();
  for (int k = 0; k <= d; ++k) {
    if (!coeff(static_cast<unsigned>(k))) continue;
    if (k % 2 != 0) return std::nullopt;
    root.flip(static_cast<unsigned>(k / 2));
  }
  return root;
}

std::pair<F2Poly, F2Poly> F2Poly::even_odd_roots() const {
  F2Poly even, odd;
  const int d = degree();
  for (int k = 0; k <= d; ++k) {
    if (!coeff(static_cast<unsigned>(k))) continue;
    if (k % 2 == 0) {
      even.flip(static_cast<unsigned>(k / 2));
    } else {
      odd.flip(static_cast<unsigned>((k - 1) / 2));
    }
  }
  return {even, odd};
}

std::string F2Poly::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (int k = degree(); k >= 0; --k) {
    if (!coeff(static_cast<unsigned>(k))) continue;
    if (!out.empty()) out += '+';
    if (k == 0) {
      out += '1';
    } else if (k == 1) {
      out += 't';
    } else {
      out += "t^" + std::to_string(k);
    }
  }
  return out;
}

F2Poly F2Poly::parse(std::string_view text) {
  F2Poly p;
  std::string s;
  for (char c : text) {
    if (!std::isspace(static_cast<unsigned char>(c))) s += c;
  }
  if (s.empty()) raise(Errc::ParseError, "empty polynomial");
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find('+', pos);
    if (end == std::string::npos) end = s.size();
    const std::string term = s.substr(pos, end - pos);
    if (term.empty()) raise(Errc::ParseError, "empty monomial in '" + s + "'");
    if (term == "0") {
      // contributes nothing
    } else if (term == "1") {
      p.flip(0);
    } else if (term == "t") {
      p.flip(1);
    } else if (term.size() > 2 && term[0] == 't' && term[1] == '^' &&
               std::all_of(term.begin() + 2, term.end(),
                           [](char c) { return std::isdigit(static_cast<unsigned char>(c)); })) {
      const unsigned long k = std::stoul(term.substr(2));
      if (k > 1U << 20) raise(Errc::ParseError, "exponent too large: " + term);
      p.flip(static_cast<unsigned>(k));
    } else {
      raise(Errc::ParseError, "bad monomial '" + term + "'");
    }
    pos = end + 1;
  }
  return p;
}

std::strong_ordering F2Poly::operator<=>(const F2Poly& other) const {
  if (words_.size() != other.words_.size()) return words_.size() <=> other.words_.size();
  for (std::size_t k = words_.size(); k-- > 0;) {
    if (words_[k] != other.words_[k]) return words_[k] <=> other.words_[k];
  }
  return std::strong_ordering::equal;
}

std::optional<F2Poly> solve_frobenius_affine(const F2Poly& q, const F2Poly& n) {
  const int bound = std::max(std::max(n.degree(), 0) / 2, std::max(q.degree(), 0)) + 1;
  // Echelon basis of images; each entry remembers which unknowns produced it.
  struct Column {
    F2Poly image;
    F2Poly combo;
  };
  std::vector<Column> basis;
  auto reduce = [&basis](Column c) {
    for (const Column& b : basis) {
      const int lead = b.image.degree();
      if (c.image.coeff(static_cast<unsigned>(lead))) {
        c.image += b.image;
        c.combo += b.combo;
      }
    }
    return c;
  };
  for (int j = 0; j <= bound; ++j) {
    const F2Poly tj = F2Poly::monomial(static_cast<unsigned>(j));
    Column c{tj * tj + q * tj, tj};
    c = reduce(std::move(c));
    if (c.image.is_zero()) continue;
    const unsigned lead = static_cast<unsigned>(c.image.degree());
    for (Column& b : basis) {
      if (b.image.coeff(lead)) {
        b.image += c.image;
        b.combo += c.combo;
      }
    }
    basis.push_back(std::move(c));
  }
  Column target = reduce(Column{n, F2Poly()});
  if (!target.image.is_zero()) return std::nullopt;
  return target.combo;
}

}  // namespace chaingeo
