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


#include "chaingeo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <functional>
#include <future>
#include <iostream>
#include <sstream>
#include <utility>

#include "chaingeo/circle_plane.hpp"
#include "chaingeo/error.hpp"
#include "chaingeo/generators.hpp"
#include "chaingeo/klein.hpp"
#include "chaingeo/quaternion.hpp"
#include "chaingeo/sampling.hpp"
#include "chaingeo/spread.hpp"
#include "chaingeo/text.hpp"

namespace chaingeo {

using nlohmann::json;

// ---------------------------------------------------------------------------
// Reports

json VerificationReport::to_json() const {
  json fs = json::array();
  for (const Failure& f : failures) fs.push_back({{"inputs", f.inputs}, {"expected", f.expected}, {"got", f.got}});
  return {{"schema_version", "1"},
          {"theorem_id", theorem_id},
          {"context", context},
          {"seed", seed},
          {"samples_requested", samples_requested},
          {"samples_run", samples_run},
          {"skipped", skipped},
          {"passed", passed},
          {"failures", fs},
          {"elapsed_ms", elapsed_ms}};
}

VerificationReport VerificationReport::from_json(const json& j) {
  try {
    if (j.at("schema_version").get<std::string>() != "1") raise(Errc::ParseError, "unsupported schema_version");
    VerificationReport r;
    r.theorem_id = j.at("theorem_id").get<std::string>();
    r.context = j.at("context").get<std::string>();
    r.seed = j.at("seed").get<std::uint64_t>();
    r.samples_requested = j.at("samples_requested").get<std::size_t>();
    r.samples_run = j.at("samples_run").get<std::size_t>();
    r.skipped = j.at("skipped").get<std::size_t>();
    r.passed = j.at("passed").get<bool>();
    for (const json& f : j.at("failures")) {
      r.failures.push_back({f.at("inputs").get<std::string>(), f.at("expected").get<std::string>(),
                            f.at("got").get<std::string>()});
    }
    r.elapsed_ms = j.at("elapsed_ms").get<std::int64_t>();
    return r;
  } catch (const json::exception& e) {
    raise(Errc::ParseError, std::string("report: ") + e.what());
  }
}

bool Summary::passed() const {
  return std::all_of(reports.begin(), reports.end(), [](const VerificationReport& r) { return r.passed; });
}

json Summary::to_json() const {
  json rs = json::array();
  for (const VerificationReport& r : reports) rs.push_back(r.to_json());
  json us = json::array();
  for (const SkippedSuite& s : unsupported) us.push_back({{"theorem_id", s.theorem_id}, {"reason", s.reason}});
  return {{"schema_version", "1"}, {"context", context}, {"seed", seed},   {"passed", passed()},
          {"suites", reports.size()}, {"reports", rs},  {"unsupported", us}};
}

json strip_timing(json j) {
  if (j.is_object()) {
    j.erase("elapsed_ms");
    for (auto& [k, v] : j.items()) v = strip_timing(v);
  } else if (j.is_array()) {
    for (auto& v : j) v = strip_timing(v);
  }
  return j;
}

// ---------------------------------------------------------------------------
// Config

namespace {

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\r");
  return std::string(s.substr(b, e - b + 1));
}

std::uint64_t parse_uint(const std::string& key, const std::string& v) {
  try {
    std::size_t used = 0;
    const unsigned long long x = std::stoull(v, &used);
    if (used != v.size() || v.front() == '-') throw std::invalid_argument(v);
    return x;
  } catch (const std::logic_error&) {
    raise(Errc::ParseError, key + " must be a non-negative integer, got '" + v + "'");
  }
}

}  // namespace

RunConfig RunConfig::parse(std::string_view text) {
  RunConfig cfg;
  bool have[5] = {false, false, false, false, false};
  std::istringstream in{std::string(text)};
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (const auto hash = line.find('#'); hash != std::string::npos) line.resize(hash);
    if (trim(line).empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) raise(Errc::ParseError, "line " + std::to_string(lineno) + ": expected key = value");
    const std::string key = trim(std::string_view(line).substr(0, eq));
    const std::string value = trim(std::string_view(line).substr(eq + 1));
    if (key == "z_field") {
      cfg.z_kind = parse_zkind(value);
      have[0] = true;
    } else if (key == "lambda1") {
      cfg.lambda1 = value;
      have[1] = true;
    } else if (key == "mu1") {
      cfg.mu1 = value;
      have[2] = true;
    } else if (key == "lambda2") {
      cfg.lambda2 = value;
      have[3] = true;
    } else if (key == "mu2") {
      cfg.mu2 = value;
      have[4] = true;
    } else if (key == "samples") {
      cfg.samples = parse_uint(key, value);
    } else if (key == "seed") {
      cfg.seed = parse_uint(key, value);
    } else if (key == "height") {
      cfg.height = static_cast<int>(parse_uint(key, value));
      if (cfg.height < 1) raise(Errc::ParseError, "height must be positive");
    } else if (key == "suites") {
      std::vector<std::string> ids;
      std::istringstream list(value);
      std::string id;
      while (std::getline(list, id, ',')) {
        id = trim(id);
        if (id.empty()) continue;
        if (std::find(theorem_ids().begin(), theorem_ids().end(), id) == theorem_ids().end()) {
          raise(Errc::UnknownTheorem, id);
        }
        ids.push_back(id);
      }
      cfg.suites = std::move(ids);
    } else {
      raise(Errc::ParseError, "line " + std::to_string(lineno) + ": unknown key '" + key + "'");
    }
  }
  static const char* names[5] = {"z_field", "lambda1", "mu1", "lambda2", "mu2"};
  for (int k = 0; k < 5; ++k) {
    if (!have[k]) raise(Errc::ParseError, std::string("missing key ") + names[k]);
  }
  return cfg;
}

RunConfig RunConfig::load(const std::string& path) {
  std::ifstream in(path);
  if (!in) raise(Errc::ParseError, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  return parse(buf.str());
}

std::shared_ptr<const AlgebraContext> RunConfig::build() const {
  return AlgebraContext::build(z_kind, ZScalar::parse_canonical(z_kind, lambda1), ZScalar::parse_canonical(z_kind, mu1),
                               ZScalar::parse_canonical(z_kind, lambda2), ZScalar::parse_canonical(z_kind, mu2));
}

// ---------------------------------------------------------------------------
// Suites

namespace {

struct Env {
  const AlgebraContext& c;
  Rng rng;
  std::uint64_t seed;
  int height;
  std::size_t samples;
  VerificationReport& rep;

  int small() const { return std::min(height, 3); }

  void fail(std::string inputs, std::string expected, std::string got) {
    rep.failures.push_back({std::move(inputs), std::move(expected), std::move(got)});
  }
  void expect(bool ok, const std::string& inputs, const std::string& expected, const std::string& got) {
    if (!ok) fail(inputs, expected, got);
  }
  void expect_true(bool ok, const std::string& inputs, const std::string& what) {
    if (!ok) fail(inputs, what, "false");
  }

  /// body returns false to skip the sample.
  void each(const std::function<bool(std::size_t)>& body) {
    for (std::size_t k = 0; k < samples; ++k) {
      try {
        body(k) ? ++rep.samples_run : ++rep.skipped;
      } catch (const Error& e) {
        if (e.code() == Errc::NoRationalLine) {
          std::cerr << rep.theorem_id << ": sample " << k << " skipped: " << e.what() << "\n";
          ++rep.skipped;
        } else {
          ++rep.samples_run;
          fail("sample " + std::to_string(k), "no error", e.what());
        }
      }
    }
  }

  /// One-off example check outside the sample budget.
  void example(const std::string& name, const std::function<bool()>& body) {
    try {
      if (!body()) fail(name, "true", "false");
    } catch (const Error& e) {
      fail(name, "true", e.what());
    }
  }
};

std::string str(bool b) { return b ? "true" : "false"; }

std::string points_str(const std::vector<AffinePoint>& ps) {
  std::string s;
  for (const AffinePoint& p : ps) s += (s.empty() ? "" : ", ") + p.pretty();
  return s;
}

ZVec z4(const LElement& x) { return {x.u().xi(), x.u().eta(), x.v().xi(), x.v().eta()}; }

bool same_direction(const KVec& a, const KVec& b) { return rank(KMatrix({a, b}, a.size(), a[0].ctx().k_zero())) == 1; }

void spread_partition(Env& env) {
  env.each([&](std::size_t) {
    const PointP3K p = random_point(env.c, env.rng, env.height);
    const LineP3K s = spread_line(p);
    env.expect(s.contains(p) && is_spread_line(s), p.str(), "spread line through p", s.str());
    const PointP3K q(right_mul(p.coords(), random_nonzero_l(env.c, env.rng, env.small())));
    env.expect(spread_line(q) == s, p.str() + " " + q.str(), s.str(), spread_line(q).str());
    const LineP3K r = random_spread_line(env.c, env.rng, env.small());
    if (r == s) return true;
    env.expect(!lines_meet(r, s), s.str() + " " + r.str(), "skew", "meeting");
    env.expect(!r.contains(p), p.str() + " " + r.str(), "p on one spread line only", "p on both");
    return true;
  });
}

void klein_baer(Env& env) {
  const BaerFrame f = BaerFrame::compute(env.c, env.seed);
  env.each([&](std::size_t k) {
    const LineP3K s = random_spread_line(env.c, env.rng, env.height);
    env.expect_true(in_PiZ(f, plucker(s)), s.str(), "image in Pi_Z");
    if (env.c.galois() && k < 20) {
      ZVec z(6, env.c.z_zero());
      for (auto& x : z) x = random_z(env.c, env.rng, env.small());
      if (is_zero_vector(z)) return true;
      const PluckerVec w = f.from_z(z);
      env.expect_true(same_direction(w, iota_hat(w)), vec_str(w), "fixed by the Baer involution");
    }
    return true;
  });
}

void chain_sphere(Env& env) {
  const BaerFrame f = BaerFrame::compute(env.c, env.seed);
  const ChainKind kinds[3] = {ChainKind::Nondegenerate, ChainKind::Degenerate, ChainKind::Line};
  env.each([&](std::size_t k) {
    const Chain ch = random_chain_of_kind(env.c, env.rng, kinds[k % 3], env.small());
    const SphereCheck r = check_sphere_conditions(f, ch, derive_seed(env.seed, ch.str()));
    if (!r.line_found && r.no_rational_line) {
      std::cerr << env.rep.theorem_id << ": NoRationalLine for " << ch.str() << "\n";
      return false;
    }
    env.expect(r.passed() && r.line_found, ch.str(), "conditions hold", r.detail);
    return true;
  });
}

void tangent_klein(Env& env) {
  const auto& c = env.c;
  const Chain g0 = gamma0_chain(c);
  const Chain ik = line_chain(AffLine(l_i(c), l_zero(c)));
  const LineP3K at0 = rho_inv(l_zero(c));
  env.example("Gamma0 and iK tangent at 0", [&] { return chains_tangent_at(g0, ik, at0) && tangent_criterion(g0, ik, at0); });
  env.each([&](std::size_t k) {
    const Chain c0 = random_chain(c, env.rng, env.small());
    const LineP3K p = chain_sample(c0, 1, k).front();
    LineP3K t = c0.transversal();
    if (k % 3 == 0) {
      const KMatrix plane = join(p, c0.transversal());
      const PointP3K x = *meet(p, c0.transversal());
      KVec coeffs{random_k(c, env.rng, env.small()), random_k(c, env.rng, env.small()), random_k(c, env.rng, env.small())};
      const KVec y = multiply(KMatrix({coeffs}, 3, c.k_zero()), plane).row(0);
      if (is_zero_vector(y) || PointP3K(y) == x) return false;
      t = LineP3K::through(x.coords(), y);
    } else {
      const PointP3K x(right_mul(p.row(0), random_nonzero_l(c, env.rng, env.small())));
      t = LineP3K::through(x.coords(), random_k4(c, env.rng, env.small()));
    }
    if (is_spread_line(t)) return false;
    const Chain c1 = Chain::from_transversal(t);
    const bool spread_side = chains_tangent_at(c0, c1, p);
    const bool klein_side = tangent_criterion(c0, c1, p);
    env.expect(spread_side == klein_side, c0.str() + " " + c1.str() + " at " + p.str(), str(spread_side), str(klein_side));
    return true;
  });
}

void ortho_klein(Env& env) {
  const auto& c = env.c;
  const Chain k_line = line_chain(AffLine(l_one(c), l_zero(c)));
  const Chain ik_line = line_chain(AffLine(l_i(c), l_zero(c)));
  env.example("K orthogonal to iK", [&] {
    return chains_orthogonal(k_line, ik_line) && orthogonal_criterion(k_line, ik_line);
  });
  env.example("midline of Gamma0 is K", [&] {
    return midline(Circle{gamma0_chain(c), ChainKind::Nondegenerate, {}}) == AffLine(l_one(c), l_zero(c));
  });
  env.each([&](std::size_t k) {
    const Chain c0 = random_chain(c, env.rng, env.small());
    Chain c1 = random_chain(c, env.rng, env.small());
    if (k % 2 == 0) {
      const auto ts = chain_transversals(c0);
      auto on = [&](const LineP3K& l) {
        KVec coeffs{random_k(c, env.rng, env.small()), random_nonzero_k(c, env.rng, env.small())};
        return multiply(KMatrix({coeffs}, 2, c.k_zero()), l.matrix()).row(0);
      };
      const LineP3K t = LineP3K::through(on(ts[0]), on(ts[1]));
      if (is_spread_line(t)) return false;
      c1 = Chain::from_transversal(t);
    }
    const bool spread_side = chains_orthogonal(c0, c1);
    const bool klein_side = orthogonal_criterion(c0, c1);
    env.expect(spread_side == klein_side, c0.str() + " " + c1.str(), str(spread_side), str(klein_side));
    return true;
  });
}

void affinity(Env& env) {
  const auto& c = env.c;
  const LElement one = l_one(c), zero = l_zero(c), i = l_i(c);
  const Conjugator id{one, false};
  // m0 = i acts by conjugation on K, which only exists in the Galois case.
  env.example(c.galois() ? "(1, i, 0, id) is an affinity" : "(1, i, 0, id) is not an affinity",
              [&] { return is_affinity(AffMap{one, i, zero, id}) == c.galois(); });
  env.example("(1, 1+i, 0, id) is not an affinity", [&] { return !is_affinity(AffMap{one, one + i, zero, id}); });
  env.example("(1, 1, 0, A) is not an affinity", [&] { return !is_affinity(AffMap{one, one, zero, Conjugator{one, true}}); });
  env.each([&](std::size_t k) {
    const int h = env.small();
    const LElement m0 = k % 3 == 0   ? random_nonzero_l(c, env.rng, h)
                        : k % 3 == 1 ? LElement(random_nonzero_k(c, env.rng, h))
                                     : i * random_nonzero_k(c, env.rng, h);
    const AffMap f{random_nonzero_l(c, env.rng, h), m0, random_l(c, env.rng, h), id};
    bool lines_to_lines = true;
    for (int r = 0; r < 3; ++r) {
      const AffLine l(random_nonzero_l(c, env.rng, h), random_l(c, env.rng, h));
      const Chain img = map_chain(f, line_chain(l));
      const AffinePoint x = l.offset() + l.direction() * random_k(c, env.rng, h);
      env.expect_true(chain_has_point(img, apply_map(f, x)), f.str() + " " + x.str(), "image point on image chain");
      lines_to_lines = lines_to_lines && kind_of(circle_classify(img)) == ChainKind::Line;
    }
    env.expect(is_affinity(f) == lines_to_lines, f.str(), str(lines_to_lines), str(is_affinity(f)));
    if (!is_affinity(f)) return true;
    const Chain g = random_chain(c, env.rng, h);
    const ChainKind before = kind_of(circle_classify(g));
    const ChainKind after = kind_of(circle_classify(map_chain(f, g)));
    env.expect(before == after, f.str() + " " + g.str(), chain_kind_name(before), chain_kind_name(after));
    if (c.galois()) {
      const AffLine l1(random_nonzero_l(c, env.rng, h), random_l(c, env.rng, h));
      const AffLine l2(l1.direction() * i * random_nonzero_k(c, env.rng, h), random_l(c, env.rng, h));
      const auto i1 = circle_classify(map_chain(f, line_chain(l1)));
      const auto i2 = circle_classify(map_chain(f, line_chain(l2)));
      const bool ok = std::holds_alternative<AffLine>(i1) && std::holds_alternative<AffLine>(i2) &&
                      lines_orthogonal(std::get<AffLine>(i1), std::get<AffLine>(i2));
      env.expect_true(ok, f.str() + " " + l1.pretty() + " " + l2.pretty(), "orthogonality preserved");
    }
    return true;
  });
}

void unique_chain(Env& env) {
  env.each([&](std::size_t k) {
    const auto& c = env.c;
    const Chain c0 = random_chain(c, env.rng, env.small());
    const auto members = chain_sample(c0, 12, derive_seed(env.seed, std::to_string(k)));
    const PointP3K x(right_mul(members[0].row(0), random_nonzero_l(c, env.rng, env.small())));
    const PointP3K y(right_mul(members[1].row(0), random_nonzero_l(c, env.rng, env.small())));
    const LineP3K t = LineP3K::through(x, y);
    if (is_spread_line(t)) return false;
    const Chain c1 = Chain::from_transversal(t);
    if (same_chain(c0, c1)) return false;
    std::size_t common = 0;
    for (std::size_t m = 2; m < members.size(); ++m) common += chain_contains(c1, members[m]);
    env.expect(common == 0, c0.str() + " " + c1.str(), "no third common member", std::to_string(common) + " common");
    return true;
  });
}

void baer_subplane(Env& env) {
  const auto& c = env.c;
  if (c.galois() && c.z_kind() == ZKind::Q && c.lambda1().is_zero() && c.mu1().is_one() && c.mu2().is_one()) {
    const LElement a(c.a()), i = l_i(c), ai = a + i;
    const Circle d = deg_circle(ai);
    env.example("c a c^-1 = i for c = a+i", [&] { return ai * a * ai.inv() == i; });
    env.example("Delta(a+i) = Q + Qi", [&] {
      const BaerParam p = baer_param(d);
      return deg_contains(d, i) && !deg_contains(d, ai) &&
             rank(ZMatrix({z4(p.b0), z4(p.b1), z4(l_one(c)), z4(i)}, 4, c.z_zero())) == 2;
    });
  }
  env.each([&](std::size_t) {
    const LElement g = random_l_circ(c, env.rng, env.small());
    const Circle d = deg_circle(g);
    const BaerParam p = baer_param(d);
    for (int s = 0; s < 50; ++s) {
      const KElement k = random_k(c, env.rng, env.small() + 1);
      const LElement x = p.point(k);
      const std::string in = g.str() + " k=" + k.str();
      env.expect(x == g * LElement(k) * g.inv(), in, (g * LElement(k) * g.inv()).str(), x.str());
      env.expect(x == p.combination(k.xi(), k.eta()), in, x.str(), p.combination(k.xi(), k.eta()).str());
      env.expect_true(deg_contains(d, x) && chain_has_point(d.chain, x), in, "point on the circle");
      const ZScalar w = random_z(c, env.rng, env.small());
      const LElement y = p.point(random_k(c, env.rng, env.small()));
      env.expect_true(deg_contains(d, x * c.k(w) + y * c.k(c.z_one() - w)), in, "Z-affine combination on the circle");
    }
    return true;
  });
}

void deg_baer(Env& env) {
  const auto& c = env.c;
  env.each([&](std::size_t k) {
    const Chain ch = random_chain_of_kind(c, env.rng, ChainKind::Degenerate, env.small());
    const auto cls = circle_classify(ch);
    if (kind_of(cls) != ChainKind::Degenerate) {
      env.fail(ch.str(), "degenerate", chain_kind_name(kind_of(cls)));
      return true;
    }
    const Circle orig = std::get<Circle>(cls);
    const std::size_t dirs = absolute_directions(orig).size();
    env.expect(dirs == (c.galois() ? 2u : 1u), ch.str(), c.galois() ? "2 directions" : "1 direction", std::to_string(dirs));
    const auto pts = circle_points(orig, 52, derive_seed(env.seed, std::to_string(k)));
    const LElement m1 = (pts[1] - pts[0]).inv();
    const AffMap f = AffMap::agl(m1, -(m1 * pts[0]));
    const auto img = circle_classify(map_chain(f, ch));
    if (kind_of(img) != ChainKind::Degenerate || !std::get<Circle>(img).generator) {
      env.fail(ch.str() + " " + f.str(), "degenerate circle through 0 and 1", chain_kind_name(kind_of(img)));
      return true;
    }
    const Circle d = std::get<Circle>(img);
    for (std::size_t s = 2; s < pts.size(); ++s) {
      env.expect_true(deg_contains(d, apply_map(f, pts[s])), ch.str() + " x=" + pts[s].str(), "image in g K g^-1");
    }
    const BaerParam p = baer_param(d);
    const LElement m1_inv = m1.inv();
    for (int s = 0; s < 10; ++s) {
      const LElement x = p.point(random_k(c, env.rng, env.small()));
      env.expect_true(chain_has_point(ch, m1_inv * (x - f.m)), ch.str() + " y=" + x.str(), "preimage on the circle");
    }
    return true;
  });
}

void orbit(Env& env) {
  const auto& c = env.c;
  const Chain g0 = gamma0_chain(c);
  env.each([&](std::size_t k) {
    const Chain ch = random_chain_of_kind(c, env.rng, ChainKind::Nondegenerate, env.small());
    const Circle g{ch, ChainKind::Nondegenerate, {}};
    const AffMap f = normalize_to_gamma0(g);
    env.expect_true(is_affinity(f), ch.str() + " " + f.str(), "affinity");
    env.expect(same_chain(map_chain(f, ch), g0), ch.str() + " " + f.str(), g0.str(), map_chain(f, ch).str());
    for (const AffinePoint& x : circle_points(g, 20, derive_seed(env.seed, std::to_string(k)))) {
      env.expect_true(gamma0_contains(apply_map(f, x)), ch.str() + " " + f.str() + " x=" + x.str(), "image on Gamma0");
    }
    return true;
  });
}

void circle_eq(Env& env) {
  const auto& c = env.c;
  const Chain g0 = gamma0_chain(c);
  env.each([&](std::size_t) {
    const KElement k0 = random_k(c, env.rng, env.height), k1 = random_k(c, env.rng, env.height);
    if (k0.is_zero() && k1.is_zero()) return false;
    const AffinePoint x = gamma0_point(k0, k1);
    const std::string in = "k0=" + k0.str() + " k1=" + k1.str();
    env.expect_true(gamma0_contains(x), in, "equation holds at " + x.str());
    env.expect_true(chain_has_point(g0, x), in, "point on Gamma0");
    const auto [p0, p1] = gamma0_params(x);
    env.expect(gamma0_point(p0, p1) == x, in, x.str(), gamma0_point(p0, p1).str());
    const LElement y = random_nonzero_l(c, env.rng, env.height);
    const AffinePoint z = gamma0_solution_from(y);
    env.expect_true(gamma0_contains(z) && chain_has_point(g0, z), "y=" + y.str(), "solution on Gamma0");
    const auto [r0, r1] = gamma0_params(z);
    env.expect(gamma0_point(r0, r1) == z, "y=" + y.str(), z.str(), gamma0_point(r0, r1).str());
    return true;
  });
}

void hermitian(Env& env) {
  const auto& c = env.c;
  const auto es = e_sample(c, env.samples + 1, env.seed);
  env.each([&](std::size_t k) {
    const HermitianVariety he{es[k]}, hf{es[k + 1]};
    if (he.e == hf.e) return false;
    const std::string in = "e=" + he.e.str() + " f=" + hf.e.str();
    for (int s = 0; s < 50; ++s) {
      const KElement k0 = random_k(c, env.rng, env.height), k1 = random_k(c, env.rng, env.height);
      if (k0.is_zero() && k1.is_zero()) continue;
      const AffinePoint g = gamma0_point(k0, k1);
      env.expect_true(hermitian_contains(he, g) && hermitian_contains(hf, g), in + " x=" + g.str(), "Gamma0 point in both");
    }
    int found = 0;
    for (int attempt = 0; attempt < 400 && found < 50; ++attempt) {
      for (const AffinePoint& p : hermitian_intersection_points(he, hf, random_nonzero_l(c, env.rng, env.small()))) {
        ++found;
        env.expect_true(hermitian_contains(he, p) && hermitian_contains(hf, p), in + " x=" + p.str(), "point in both");
        env.expect_true(gamma0_contains(p), in + " x=" + p.str(), "intersection point on Gamma0");
      }
    }
    env.expect(found >= 50, in, ">= 50 intersection points", std::to_string(found));
    const AffinePoint w = hermitian_witness(he);
    env.expect_true(hermitian_contains(he, w) && !gamma0_contains(w), in + " w=" + w.str(), "witness off Gamma0");
    return true;
  });
}

void parallel_tangent(Env& env) {
  const auto& c = env.c;
  const LineP3K inf = infinity_line(c);
  env.each([&](std::size_t k) {
    const int h = env.small();
    const AffLine l1(random_nonzero_l(c, env.rng, h), random_l(c, env.rng, h));
    const LElement d2 = k % 2 ? l1.direction() * random_nonzero_k(c, env.rng, h) : random_nonzero_l(c, env.rng, h);
    const AffLine l2(d2, random_l(c, env.rng, h));
    if (l1 == l2) return false;
    const bool tangent = chains_tangent_at(line_chain(l1), line_chain(l2), inf);
    env.expect(l1.parallel(l2) == tangent, l1.pretty() + " " + l2.pretty(), str(l1.parallel(l2)), str(tangent));
    return true;
  });
}

void midline_suite(Env& env) {
  const auto& c = env.c;
  env.each([&](std::size_t) {
    const Chain ch = random_chain_of_kind(c, env.rng, ChainKind::Nondegenerate, env.small());
    const Circle g{ch, ChainKind::Nondegenerate, {}};
    const AffLine m = midline(g);
    const auto reg = regular_points(g);
    env.expect(reg.size() == 2, ch.str(), "2 regular points", points_str(reg));
    for (const AffinePoint& p : reg) {
      env.expect_true(lines_orthogonal(m, tangent_line(g, p)), ch.str() + " p=" + p.pretty(), "midline orthogonal to tangent");
    }
    env.expect_true(chains_orthogonal(line_chain(m), ch), ch.str() + " " + m.pretty(), "midline chain orthogonal");
    return true;
  });
}

void beta(Env& env) {
  const auto& c = env.c;
  const KElement o = c.k_zero(), e = c.k_one();
  const PlaneP3K a_tilde = plane_A_tilde(c);
  env.example("beta on A~ is the identity", [&] {
    return beta_map(a_tilde, l_i(c)) == PointP3K::from_l2(l_one(c), l_i(c)) && beta_is_affinity(a_tilde, env.seed);
  });
  if (c.galois()) env.example("beta on A~^iota is an affinity", [&] { return beta_is_affinity(iota(a_tilde), env.seed); });
  env.each([&](std::size_t k) {
    const KElement lambda = random_nonzero_k(c, env.rng, env.small());
    const PlaneP3K plane = subspace({{e, lambda, o, o}, {o, o, e, o}, {o, o, o, e}});
    const bool aff = beta_is_affinity(plane, derive_seed(env.seed, std::to_string(k)));
    env.expect(!aff, "x1 = (" + lambda.str() + ")x0", "false", "true");
    return true;
  });
}

void klein_classify(Env& env) {
  const auto& c = env.c;
  const ChainKind kinds[3] = {ChainKind::Nondegenerate, ChainKind::Degenerate, ChainKind::Line};
  const KMatrix psi = klein_psi(c);
  const PlaneP3K a_tilde = plane_A_tilde(c);
  env.each([&](std::size_t k) {
    const ChainKind want = kinds[k % 3];
    const Chain ch = random_chain_of_kind(c, env.rng, want, env.small());
    const ChainKind spread_side = kind_of(circle_classify(ch));
    const ChainKind klein_side = classify_via_klein(ch);
    env.expect(spread_side == want, ch.str(), chain_kind_name(want), chain_kind_name(spread_side));
    env.expect(klein_side == spread_side, ch.str(), chain_kind_name(spread_side), chain_kind_name(klein_side));
    const LineP3K p = random_line(c, env.rng, env.small());
    if (const auto at = meet(p, a_tilde)) {
      const KVec via_psi = normalize_first_nonzero(apply_linear(psi, a_tilde_coords(*at)));
      const KVec via_pi = project_pi(plucker(p));
      env.expect(via_psi == via_pi, p.str(), vec_str(via_pi), vec_str(via_psi));
    }
    return true;
  });
}

struct SuiteDef {
  const char* id;
  std::size_t samples;
  bool galois_only;
  void (*run)(Env&);
};

const std::vector<SuiteDef>& suites() {
  static const std::vector<SuiteDef> defs = {
      {"T-SPREAD-PARTITION", 100, false, spread_partition},
      {"T-KLEIN-BAER", 50, false, klein_baer},
      {"T-CHAIN-SPHERE", 20, false, chain_sphere},
      {"T-TANGENT-KLEIN", 50, false, tangent_klein},
      {"T-ORTHO-KLEIN", 50, true, ortho_klein},
      {"T-AFFINITY", 50, false, affinity},
      {"L-UNIQUE-CHAIN", 50, false, unique_chain},
      {"L-BAER-SUBPLANE", 10, false, baer_subplane},
      {"T-DEG-BAER", 10, false, deg_baer},
      {"T-ORBIT", 25, false, orbit},
      {"T-CIRCLE-EQ", 200, false, circle_eq},
      {"T-HERMITIAN", 5, true, hermitian},
      {"T-PARALLEL-TANGENT", 30, false, parallel_tangent},
      {"T-MIDLINE", 10, true, midline_suite},
      {"T-BETA", 20, false, beta},
      {"T-KLEIN-CLASSIFY", 100, false, klein_classify},
  };
  return defs;
}

const SuiteDef& find_suite(std::string_view id) {
  for (const SuiteDef& s : suites()) {
    if (id == s.id) return s;
  }
  raise(Errc::UnknownTheorem, std::string(id));
}

}  // namespace

const std::vector<std::string>& theorem_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const SuiteDef& s : suites()) out.emplace_back(s.id);
    return out;
  }();
  return ids;
}

std::size_t default_samples(std::string_view theorem_id) { return find_suite(theorem_id).samples; }

bool needs_galois(std::string_view theorem_id) { return find_suite(theorem_id).galois_only; }

VerificationReport run_suite(const AlgebraContext& ctx, std::string_view theorem_id, std::uint64_t seed,
                             std::optional<std::size_t> samples, int height) {
  const SuiteDef& def = find_suite(theorem_id);
  if (def.galois_only && !ctx.galois()) {
    raise(Errc::ContextUnsupported, std::string(theorem_id) + " needs a Galois extension K/Z");
  }
  const auto start = std::chrono::steady_clock::now();
  VerificationReport rep;
  rep.theorem_id = def.id;
  rep.context = ctx.descriptor();
  rep.seed = seed;
  rep.samples_requested = samples.value_or(def.samples);
  const std::uint64_t suite_seed = derive_seed(seed, def.id);
  Env env{ctx, Rng(suite_seed), suite_seed, height, rep.samples_requested, rep};
  try {
    def.run(env);
  } catch (const Error& e) {
    // Setup failure, e.g. no Baer frame: the remaining samples never ran.
    env.fail("setup", "no error", e.what());
  }
  rep.skipped = rep.samples_requested - rep.samples_run;
  rep.passed = rep.failures.empty();
  rep.elapsed_ms =
      std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

VerificationReport cmd_verify(const RunConfig& cfg, std::string_view theorem_id, std::optional<std::uint64_t> seed,
                              std::optional<std::size_t> samples) {
  find_suite(theorem_id);
  const auto ctx = cfg.build();
  return run_suite(*ctx, theorem_id, seed.value_or(cfg.seed), samples ? samples : cfg.samples, cfg.height);
}

Summary cmd_all(const RunConfig& cfg, std::optional<std::uint64_t> seed) {
  const auto ctx = cfg.build();
  Summary out;
  out.context = ctx->descriptor();
  out.seed = seed.value_or(cfg.seed);
  const std::vector<std::string> ids = cfg.suites.value_or(theorem_ids());
  std::vector<std::future<VerificationReport>> jobs;
  for (const std::string& id : ids) {
    if (needs_galois(id) && !ctx->galois()) {
      out.unsupported.push_back({id, "needs a Galois extension K/Z"});
      continue;
    }
    jobs.push_back(std::async(std::launch::async, [&ctx, &cfg, id, s = out.seed] {
      return run_suite(*ctx, id, s, cfg.samples, cfg.height);
    }));
  }
  for (auto& j : jobs) out.reports.push_back(j.get());
  return out;
}

std::string cmd_classify(const RunConfig& cfg, std::string_view trans) {
  const auto ctx = cfg.build();
  const KMatrix m = parse_k_matrix(*ctx, trans, 4);
  if (m.rows() != 2 || rank(m) != 2) raise(Errc::ParseError, "transversal needs two independent rows");
  const LineP3K t{m};
  if (is_spread_line(t)) raise(Errc::TransversalIsSpreadLine, t.str());
  const Chain ch = Chain::from_transversal(t);
  const auto cls = circle_classify(ch);
  std::string out;
  if (std::holds_alternative<AffLine>(cls)) {
    out = "line " + std::get<AffLine>(cls).pretty();
  } else {
    const Circle& g = std::get<Circle>(cls);
    if (g.kind == ChainKind::Nondegenerate) {
      out = "nondegenerate; regular points " + points_str(regular_points(g));
    } else {
      out = "degenerate; absolute directions";
      const auto dirs = absolute_directions(g);
      for (std::size_t k = 0; k < dirs.size(); ++k) out += (k ? ", (" : " (") + dirs[k].str() + ")";
    }
  }
  out += "\nklein: " + chain_kind_name(classify_via_klein(ch)) + "\ntransversals:";
  for (const LineP3K& l : chain_transversals(ch)) out += " " + l.str();
  return out + "\n";
}

}  // namespace chaingeo
