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

#include <algorithm>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "chaingeo/field_tower.hpp"
#include "chaingeo/quaternion.hpp"

namespace chaingeo::testing {

// Independent multiplication oracle: elements are Z-combinations of words in
// the letters a and i, reduced to the basis {1, a, i, ia} by the rules
// aa = -lambda1 a - mu1, ii = -lambda2 i - mu2 and the commutation of a
// past i.
class WordAlgebra {
 public:
  using Poly = std::map<std::string, ZScalar>;

  explicit WordAlgebra(const AlgebraContext& c) : c_(c) {}

  Poly from(const LElement& x) const {
    // u + i v = xi_u + a eta_u + i xi_v + ia eta_v
    return {{"", x.u().xi()}, {"a", x.u().eta()}, {"i", x.v().xi()}, {"ia", x.v().eta()}};
  }

  LElement to_l(const Poly& p) const {
    auto get = [&](const char* w) {
      auto it = p.find(w);
      return it == p.end() ? c_.z_zero() : it->second;
    };
    return LElement(c_.k(get(""), get("a")), c_.k(get("i"), get("ia")));
  }

  Poly mul(const Poly& x, const Poly& y) const {
    Poly out;
    for (const auto& [wx, cx] : x) {
      for (const auto& [wy, cy] : y) add(out, wx + wy, cx * cy);
    }
    return reduce(out);
  }

 private:
  void add(Poly& p, const std::string& w, const ZScalar& c) const {
    if (c.is_zero()) return;
    auto it = p.find(w);
    if (it == p.end()) {
      p.emplace(w, c);
    } else {
      it->second += c;
    }
  }

  // Right-hand side of one rewrite step for a two-letter factor.
  std::vector<std::pair<std::string, ZScalar>> rule(const std::string& pair) const {
    const ZScalar one = c_.z_one();
    if (pair == "aa") return {{"a", -c_.lambda1()}, {"", -c_.mu1()}};
    if (pair == "ii") return {{"i", -c_.lambda2()}, {"", -c_.mu2()}};
    // pair == "ai"
    if (c_.galois()) return {{"i", -c_.lambda1()}, {"ia", -one}};  // a i = i conj(a)
    return {{"ia", one}, {"a", one}};                              // a i = i a + a^D
  }

  Poly reduce(Poly p) const {
    for (bool changed = true; changed;) {
      changed = false;
      Poly next;
      for (const auto& [w, c] : p) {
        std::size_t pos = std::string::npos;
        for (const char* pat : {"aa", "ii", "ai"}) {
          pos = std::min(pos, w.find(pat));
        }
        if (pos == std::string::npos) {
          add(next, w, c);
          continue;
        }
        changed = true;
        for (const auto& [rw, rc] : rule(w.substr(pos, 2))) {
          add(next, w.substr(0, pos) + rw + w.substr(pos + 2), c * rc);
        }
      }
      p = std::move(next);
    }
    return p;
  }

  const AlgebraContext& c_;
};

}  // namespace chaingeo::testing
