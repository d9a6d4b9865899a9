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

#include "chaingeo/text.hpp"

#include <cctype>

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

/// Index one past the parenthesis matching s[open].
std::size_t match_paren(const std::string& s, std::size_t open) {
  int depth = 0;
  for (std::size_t k = open; k < s.size(); ++k) {
    if (s[k] == '(') ++depth;
    if (s[k] == ')' && --depth == 0) return k + 1;
  }
  raise(Errc::ParseError, "unbalanced parenthesis in '" + s + "'");
}

/// Reads one Z token starting at pos; returns its text and advances pos.
std::string read_z_token(const std::string& s, std::size_t& pos) {
  if (pos < s.size() && s[pos] == '(') {
    const std::size_t end = match_paren(s, pos);
    std::string inner = s.substr(pos + 1, end - pos - 2);
    pos = end;
    return inner;
  }
  const std::size_t start = pos;
  if (pos < s.size() && s[pos] == '-') ++pos;
  while (pos < s.size() && s[pos] != '+' && s[pos] != ')' && s[pos] != ',' && s[pos] != ';') ++pos;
  if (pos == start) raise(Errc::ParseError, "expected a scalar in '" + s + "'");
  return s.substr(start, pos - start);
}

}  // namespace

KElement parse_k(const AlgebraContext& ctx, std::string_view text) {
  const std::string s = strip_spaces(text);
  std::size_t pos = 0;
  const ZScalar xi = ZScalar::parse(ctx.z_kind(), read_z_token(s, pos));
  if (pos == s.size()) return ctx.k(xi);
  if (s.compare(pos, 2, "+a") != 0) raise(Errc::ParseError, "expected '+a' in '" + s + "'");
  pos += 2;
  const ZScalar eta = ZScalar::parse(ctx.z_kind(), read_z_token(s, pos));
  if (pos != s.size()) raise(Errc::ParseError, "trailing text in '" + s + "'");
  return ctx.k(xi, eta);
}

LElement parse_l(const AlgebraContext& ctx, std::string_view text) {
  const std::string s = strip_spaces(text);
  if (s.empty()) raise(Errc::ParseError, "empty L element");
  if (s[0] != '(') return LElement(parse_k(ctx, s));
  const std::size_t end_u = match_paren(s, 0);
  const KElement u = parse_k(ctx, s.substr(1, end_u - 2));
  if (end_u == s.size()) return LElement(u);
  if (s.compare(end_u, 3, "+i(") != 0) raise(Errc::ParseError, "expected '+i(' in '" + s + "'");
  const std::size_t end_v = match_paren(s, end_u + 2);
  if (end_v != s.size()) raise(Errc::ParseError, "trailing text in '" + s + "'");
  return LElement(u, parse_k(ctx, s.substr(end_u + 3, end_v - end_u - 4)));
}

KMatrix parse_k_matrix(const AlgebraContext& ctx, std::string_view text, std::size_t cols) {
  const std::string s = strip_spaces(text);
  KMatrix m(cols, ctx.k_zero());
  std::size_t pos = 0;
  while (pos <= s.size()) {
    std::size_t end = s.find(';', pos);
    if (end == std::string::npos) end = s.size();
    const std::string row_text = s.substr(pos, end - pos);
    KVec row;
    std::size_t p = 0;
    while (p <= row_text.size()) {
      // Entries may contain commas only inside parentheses.
      std::size_t q = p;
      int depth = 0;
      while (q < row_text.size() && !(row_text[q] == ',' && depth == 0)) {
        if (row_text[q] == '(') ++depth;
        if (row_text[q] == ')') --depth;
        ++q;
      }
      row.push_back(parse_k(ctx, row_text.substr(p, q - p)));
      p = q + 1;
    }
    if (row.size() != cols) {
      raise(Errc::ParseError, "row '" + row_text + "' has " + std::to_string(row.size()) +
                                  " entries, expected " + std::to_string(cols));
    }
    m.push_row(std::move(row));
    pos = end + 1;
  }
  return m;
}

}  // namespace chaingeo
