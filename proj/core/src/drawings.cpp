#include "spherecross/drawings.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include <json.hpp>

namespace spherecross {

using json = nlohmann::json;

namespace {

constexpr double kPi = std::numbers::pi;
constexpr double kTwoPi = 2.0 * std::numbers::pi;
// 2*pi*(1 - 1/phi), the golden angle.
const double kGoldenAngle = kTwoPi * (1.0 - 2.0 / (1.0 + std::sqrt(5.0)));

json unitvec_to_json(const UnitVec& p) { return json::array({p.x(), p.y(), p.z()}); }

UnitVec unitvec_from_json(const json& j) {
  if (!j.is_array() || j.size() != 3) throw InvalidSpec("expected [x,y,z]");
  return UnitVec(Vec3{j[0].get<double>(), j[1].get<double>(), j[2].get<double>()});
}

double wrap_angle(double a) {
  a = std::fmod(a, kTwoPi);
  if (a < 0.0) a += kTwoPi;
  return a;
}

}  // namespace

std::array<double, 8> BlowupConfig::default_rotation_offsets() {
  std::array<double, 8> offs{};
  for (int k = 0; k < 8; ++k) offs[k] = wrap_angle(k * kGoldenAngle);
  return offs;
}

double BlowupConfig::default_radius(std::uint32_t n, double min_center_distance) {
  const double r = std::min(1e-3, 1.0 / (10.0 * std::max<std::uint32_t>(n, 1)));
  return std::min(r, min_center_distance / 8.0);
}

std::array<UnitVec, 8> BlowupConfig::node_centers() const {
  return {v1, antipode(v1), v2, antipode(v2), w1, antipode(w1), w2, antipode(w2)};
}

double BlowupConfig::min_center_distance() const {
  const auto centers = node_centers();
  double best = kPi;
  for (std::size_t i = 0; i < centers.size(); ++i)
    for (std::size_t j = i + 1; j < centers.size(); ++j)
      best = std::min(best, angular_distance(centers[i], centers[j]));
  return best;
}

void BlowupConfig::validate() const {
  if (n < 1) throw InvalidSpec("blow-up needs n >= 1 vertices per node");
  const std::array<UnitVec, 4> base{v1, v2, w1, w2};
  const auto gp = general_position_check(base);
  if (!gp.ok())
    throw GeneralPositionViolation(std::string("base K_{4,4} vertices: ") + gp.kind_name());
  if (!(radius > 0.0) || !(radius < min_center_distance() / 4.0))
    throw InvalidSpec("blow-up radius must lie in (0, min node distance / 4)");
}

BlowupConfig BlowupConfig::random(std::uint64_t seed, std::uint32_t n, double radius) {
  RngStream rng(seed, /*stream_id=*/0xB10);
  for (int attempt = 0; attempt < 1000; ++attempt) {
    BlowupConfig cfg;
    cfg.v1 = sample_uniform_sphere(rng);
    cfg.v2 = sample_uniform_sphere(rng);
    cfg.w1 = sample_uniform_sphere(rng);
    cfg.w2 = sample_uniform_sphere(rng);
    cfg.n = n;
    cfg.rotation_offsets = default_rotation_offsets();
    const std::array<UnitVec, 4> base{cfg.v1, cfg.v2, cfg.w1, cfg.w2};
    if (!general_position_check(base).ok()) continue;
    cfg.radius = radius > 0.0 ? radius : default_radius(n, cfg.min_center_distance());
    try {
      cfg.validate();
    } catch (const std::exception&) {
      continue;
    }
    return cfg;
  }
  throw TooManyRejections("could not sample a valid blow-up configuration");
}

std::string BlowupConfig::to_json() const {
  json j{{"v1", unitvec_to_json(v1)}, {"v2", unitvec_to_json(v2)},
         {"w1", unitvec_to_json(w1)}, {"w2", unitvec_to_json(w2)},
         {"radius", radius},          {"n", n},
         {"rotation_offsets", rotation_offsets}};
  return j.dump();
}

BlowupConfig BlowupConfig::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidSpec(std::string("config JSON parse error: ") + e.what());
  }
  try {
    BlowupConfig cfg;
    cfg.v1 = unitvec_from_json(j.at("v1"));
    cfg.v2 = unitvec_from_json(j.at("v2"));
    cfg.w1 = unitvec_from_json(j.at("w1"));
    cfg.w2 = unitvec_from_json(j.at("w2"));
    cfg.radius = j.at("radius").get<double>();
    cfg.n = j.at("n").get<std::uint32_t>();
    const auto& offs = j.at("rotation_offsets");
    if (!offs.is_array() || offs.size() != 8)
      throw InvalidSpec("rotation_offsets must have 8 entries");
    for (int k = 0; k < 8; ++k) cfg.rotation_offsets[k] = offs[k].get<double>();
    cfg.validate();
    return cfg;
  } catch (const json::exception& e) {
    throw InvalidSpec(std::string("config JSON error: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InvalidSpec(std::string("config JSON error: ") + e.what());
  }
}

std::string BipartiteDrawing::to_json() const {
  json a = json::array(), b = json::array();
  for (const auto& p : partA) a.push_back(unitvec_to_json(p));
  for (const auto& p : partB) b.push_back(unitvec_to_json(p));
  json j{{"partA", a}, {"partB", b}};
  if (blowup) {
    json node_a = json::array(), node_b = json::array();
    for (std::size_t i = 0; i < partA.size(); ++i) node_a.push_back(blowup->node_of_a(i));
    for (std::size_t i = 0; i < partB.size(); ++i) node_b.push_back(blowup->node_of_b(i));
    j["blowup"] = json{{"config", json::parse(blowup->config.to_json())},
                       {"node_of_vertex", json{{"partA", node_a}, {"partB", node_b}}}};
  }
  return j.dump();
}

BipartiteDrawing BipartiteDrawing::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidSpec(std::string("drawing JSON parse error: ") + e.what());
  }
  try {
    BipartiteDrawing d;
    for (const auto& p : j.at("partA")) d.partA.push_back(unitvec_from_json(p));
    for (const auto& p : j.at("partB")) d.partB.push_back(unitvec_from_json(p));
    if (d.partA.empty() || d.partB.empty()) throw InvalidSpec("drawing parts must be non-empty");
    if (j.contains("blowup")) {
      BlowupMetadata meta{BlowupConfig::from_json(j.at("blowup").at("config").dump())};
      if (d.partA.size() != 4 * static_cast<std::size_t>(meta.config.n) ||
          d.partB.size() != 4 * static_cast<std::size_t>(meta.config.n))
        throw InvalidSpec("blow-up metadata does not match part sizes");
      d.blowup = std::move(meta);
    }
    return d;
  } catch (const json::exception& e) {
    throw InvalidSpec(std::string("drawing JSON error: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw InvalidSpec(std::string("drawing JSON error: ") + e.what());
  }
}

namespace {

/// Crossing points of all edge pairs, for the triple-crossing test.
struct CrossingPoint {
  Vec3 p;
  std::uint32_t e1, e2;
};

GeneralPositionResult triple_crossing_check(const BipartiteDrawing& d, double eps) {
  const std::size_t nb = d.partB.size();
  const std::size_t m = d.num_edges();
  std::vector<Vec3> ea(m), eb(m), en(m);
  for (std::size_t e = 0; e < m; ++e) {
    ea[e] = d.partA[e / nb].vec();
    eb[e] = d.partB[e % nb].vec();
    en[e] = cross(ea[e], eb[e]);
  }
  std::vector<CrossingPoint> pts;
  for (std::size_t e1 = 0; e1 < m; ++e1) {
    for (std::size_t e2 = e1 + 1; e2 < m; ++e2) {
      if (e1 / nb == e2 / nb || e1 % nb == e2 % nb) continue;
      bool crossed;
      try {
        crossed = detail::segments_cross_fast(ea[e1], eb[e1], en[e1], ea[e2], eb[e2], en[e2]);
      } catch (const DegenerateConfiguration&) {
        // Tangency within tolerance; report the edge pair.
        return {GeneralPositionResult::Kind::TripleCrossing, {e1, e2}};
      }
      if (!crossed) continue;
      Vec3 p = normalized(cross(en[e1], en[e2]));
      // Pick the intersection that lies on the arcs: on-arc <=> N1.a2 <= 0.
      if (dot(en[e1], ea[e2]) > 0.0) p = -p;
      pts.push_back({p, static_cast<std::uint32_t>(e1), static_cast<std::uint32_t>(e2)});
    }
  }
  std::sort(pts.begin(), pts.end(),
            [](const CrossingPoint& a, const CrossingPoint& b) { return a.p.x < b.p.x; });
  // Crossing pairs sharing an edge whose other two edges share a drawing
  // vertex form a fan: their crossing points legitimately approach each
  // other as the shared edge nears the vertex, and true concurrency there
  // is an edge-through-vertex degeneracy that the predicate's sign guard
  // reports on its own.  Those pairs are exempt from the distance test.
  const auto fan_pair = [nb](std::uint32_t e1, std::uint32_t e2, std::uint32_t f1,
                             std::uint32_t f2) {
    std::uint32_t u, v;
    if (e1 == f1) { u = e2; v = f2; }
    else if (e1 == f2) { u = e2; v = f1; }
    else if (e2 == f1) { u = e1; v = f2; }
    else if (e2 == f2) { u = e1; v = f1; }
    else return false;
    return u / nb == v / nb || u % nb == v % nb;
  };
  const double window = eps * 1.0001 + 1e-300;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size() && pts[j].p.x - pts[i].p.x <= window; ++j) {
      if (norm(pts[i].p - pts[j].p) > eps) continue;  // chord <= angle
      if (fan_pair(pts[i].e1, pts[i].e2, pts[j].e1, pts[j].e2)) continue;
      // Same point reached by two crossing pairs: three or more arcs meet.
      return {GeneralPositionResult::Kind::TripleCrossing,
              {pts[i].e1, pts[i].e2, pts[j].e1, pts[j].e2}};
    }
  }
  return {};
}

}  // namespace

GeneralPositionResult drawing_general_position_check(const BipartiteDrawing& d, double eps,
                                                     std::size_t triple_check_edge_limit) {
  std::vector<UnitVec> all(d.partA);
  all.insert(all.end(), d.partB.begin(), d.partB.end());
  if (auto r = general_position_check(all, eps); !r.ok()) return r;
  if (d.num_edges() <= triple_check_edge_limit) return triple_crossing_check(d, eps);
  return {};
}

BipartiteDrawing random_bipartite_drawing(const MeasureSpec& mu1, const MeasureSpec& mu2,
                                          std::size_t n, RngStream& rng) {
  if (n < 1) throw InvalidSpec("drawing needs n >= 1");
  mu1.validate();
  mu2.validate();
  long long budget = 100 * static_cast<long long>(n);

  while (true) {
    BipartiteDrawing d;
    d.partA.reserve(n);
    d.partB.reserve(n);
    std::vector<UnitVec> accepted;
    accepted.reserve(2 * n);

    auto try_add = [&](const MeasureSpec& mu, std::vector<UnitVec>& part) -> bool {
      while (true) {
        const UnitVec p = sample_measure(mu, rng);
        bool ok = true;
        for (const auto& q : accepted) {
          const double gap =
              0.5 * std::min(norm2(p.vec() + q.vec()), norm2(p.vec() - q.vec()));
          if (gap <= kEpsGeneralPos) { ok = false; break; }
        }
        if (ok) {
          for (std::size_t i = 0; ok && i < accepted.size(); ++i) {
            const Vec3 dq = accepted[i].vec() - p.vec();
            for (std::size_t j = i + 1; j < accepted.size(); ++j) {
              const Vec3 dr = accepted[j].vec() - p.vec();
              if (std::abs(dot(p.vec(), cross(dq, dr))) <= kEpsGeneralPos) { ok = false; break; }
            }
          }
        }
        if (ok) {
          accepted.push_back(p);
          part.push_back(p);
          return true;
        }
        if (--budget < 0) return false;
      }
    };

    bool filled = true;
    for (std::size_t i = 0; filled && i < n; ++i) filled = try_add(mu1, d.partA);
    for (std::size_t j = 0; filled && j < n; ++j) filled = try_add(mu2, d.partB);
    if (!filled) throw TooManyRejections("rejection budget exhausted; measure too degenerate");

    if (drawing_general_position_check(d).ok()) return d;
    budget -= static_cast<long long>(n);
    if (budget < 0) throw TooManyRejections("rejection budget exhausted; measure too degenerate");
  }
}

BipartiteDrawing antipodal_drawing(const std::vector<UnitVec>& P, const std::vector<UnitVec>& Q) {
  if (P.size() != Q.size() || P.empty())
    throw OddSize("antipodal drawing needs |P| = |Q| >= 1");
  std::vector<UnitVec> base(P);
  base.insert(base.end(), Q.begin(), Q.end());
  if (auto r = general_position_check(base); !r.ok())
    throw GeneralPositionViolation(std::string("base points P u Q: ") + r.kind_name());

  BipartiteDrawing d;
  d.partA = P;
  for (const auto& p : P) d.partA.push_back(antipode(p));
  d.partB = Q;
  for (const auto& q : Q) d.partB.push_back(antipode(q));

  // The constructed antipodal pairs are exempt from the pairwise point test;
  // the arc arrangement still has to be simple.
  if (d.num_edges() <= 2500) {
    if (auto r = triple_crossing_check(d, kEpsGeneralPos); !r.ok())
      throw GeneralPositionViolation(std::string("antipodal drawing arcs: ") + r.kind_name());
  }
  return d;
}

BipartiteDrawing blowup_drawing(const BlowupConfig& cfg) {
  cfg.validate();
  const auto centers = cfg.node_centers();
  const std::size_t n = cfg.n;

  BipartiteDrawing d;
  d.partA.reserve(4 * n);
  d.partB.reserve(4 * n);
  for (int node = 0; node < 8; ++node) {
    auto& part = node < 4 ? d.partA : d.partB;
    for (std::size_t m = 0; m < n; ++m) {
      const double theta = cfg.rotation_offsets[node] + kTwoPi * static_cast<double>(m) / n;
      part.push_back(circle_point(centers[node], cfg.radius, theta));
    }
  }
  d.blowup = BlowupMetadata{cfg};

  // Pairwise tolerance from the construction's legitimate margins; for the
  // triple-product test the resolution floor is all that can be required,
  // since clusters at antipodal centers are near-coplanar with the origin by
  // construction (at the r^2 scale) without being degenerate.
  const double pair_eps = blowup_general_position_eps(cfg);
  const double collinear_eps = std::max(1e-24, std::sin(cfg.radius) * 1e-14);
  std::vector<UnitVec> all(d.partA);
  all.insert(all.end(), d.partB.begin(), d.partB.end());
  if (auto r = detail::general_position_check_impl(all, pair_eps, collinear_eps); !r.ok())
    throw GeneralPositionViolation(std::string("blow-up vertices: ") + r.kind_name() +
                                   " (perturb rotation_offsets)");
  if (d.num_edges() <= 600) {
    if (auto r = triple_crossing_check(d, pair_eps); !r.ok())
      throw GeneralPositionViolation(std::string("blow-up arcs: ") + r.kind_name() +
                                     " (perturb rotation_offsets)");
  }
  return d;
}

double blowup_general_position_eps(const BlowupConfig& cfg) {
  const double s = kTwoPi / cfg.n;
  const double sr = std::sin(cfg.radius);
  double margin = kEpsGeneralPos / 0.25;

  if (cfg.n >= 2) {
    // Nearest same-node vertex pair: |p-q|^2/2 = 2 sin^2(r) sin^2(pi/n).
    const double m = 2.0 * sr * sr * std::pow(std::sin(kPi / cfg.n), 2);
    margin = std::min(margin, m);
  }
  // Antipodal node pairs: min over vertices of |p+q|^2/2
  //   = 2 sin^2(r) sin^2(delta/2),  delta = dist of (o_a + o_b - pi) to the
  // 2pi/n lattice.  Zero delta means the construction really does produce an
  // antipodal vertex pair, which the floor below leaves detectable.
  for (int pair = 0; pair < 4; ++pair) {
    const double sum = cfg.rotation_offsets[2 * pair] + cfg.rotation_offsets[2 * pair + 1];
    double rem = std::fmod(sum - kPi, s);
    if (rem < 0.0) rem += s;
    const double delta = std::min(rem, s - rem);
    const double m = 2.0 * sr * sr * std::pow(std::sin(delta / 2.0), 2);
    margin = std::min(margin, m);
  }
  return std::max(std::min(kEpsGeneralPos, 0.25 * margin), 1e-24);
}

AngleQuad base_angles(const BlowupConfig& cfg) {
  const std::array<UnitVec, 4> base{cfg.v1, cfg.v2, cfg.w1, cfg.w2};
  if (auto r = general_position_check(base); !r.ok())
    throw GeneralPositionViolation(std::string("base K_{4,4} vertices: ") + r.kind_name());

  for (int mask = 0; mask < 16; ++mask) {
    const UnitVec v1 = (mask & 1) ? antipode(cfg.v1) : cfg.v1;
    const UnitVec v2 = (mask & 2) ? antipode(cfg.v2) : cfg.v2;
    const UnitVec w1 = (mask & 4) ? antipode(cfg.w1) : cfg.w1;
    const UnitVec w2 = (mask & 8) ? antipode(cfg.w2) : cfg.w2;
    try {
      if (!segments_cross({w2, v1}, {v2, w1})) continue;
      AngleQuad q;
      q.alpha = spherical_angle(w2, v2, v1);
      q.beta = spherical_angle(v2, w2, w1);
      q.gamma = spherical_angle(v1, w1, w2);
      q.delta = spherical_angle(w1, v1, v2);
      if (!(q.sum() < kTwoPi))
        throw ConfigurationNotCanonical("angle sum >= 2pi; configuration degenerate");
      return q;
    } catch (const DegenerateSegment&) {
      continue;
    } catch (const DegenerateConfiguration&) {
      continue;
    }
  }
  throw ConfigurationNotCanonical("no antipodal relabeling yields the canonical crossing");
}

std::pair<MeasureSpec, MeasureSpec> circles4_measures(const BlowupConfig& cfg) {
  auto mu1 = MeasureSpec::circles({cfg.v1, antipode(cfg.v1), cfg.v2, antipode(cfg.v2)}, cfg.radius);
  auto mu2 = MeasureSpec::circles({cfg.w1, antipode(cfg.w1), cfg.w2, antipode(cfg.w2)}, cfg.radius);
  return {std::move(mu1), std::move(mu2)};
}

BlowupConfig sweep_family(double t, std::uint32_t n) {
  if (!(t >= 0.0 && t <= 1.0)) throw DomainError("sweep parameter must lie in [0,1]");

  // Anchor geometry: two generic far-apart points F1, F2 and bumped copies
  // X2 ~ F1, Y2 ~ F2 on the same side of the F1-F2 great circle, so that at
  // t = 0 the segments Y2--F1 and X2--F2 cross midway with all four angles
  // small.  At t = 1 the first base pair has swapped positions, which is the
  // all-angles-near-pi/2 configuration.
  const UnitVec F1 = UnitVec::of({1.0, 0.1, 0.15});
  const UnitVec F2 = UnitVec::of({-0.12, 1.0, -0.08});
  const double eps0 = 0.03;

  // Bumps normal to the F1-F2 great circle: tangential components would
  // tilt the t = 1 angle limit away from pi/2.  The magnitudes differ to
  // avoid an exactly symmetric configuration.
  const Vec3 nhat = normalized(cross(F1, F2));
  const UnitVec X2 = UnitVec::of(F1.vec() + nhat * eps0);
  const UnitVec Y2 = UnitVec::of(F2.vec() + nhat * (0.93 * eps0));

  // v1 travels F1 -> F2 lifted north of the connecting great circle, w1
  // travels F2 -> F1 lifted south; the lifts keep them apart mid-path.
  const double ang = angular_distance(F1, F2);
  const double lift = 0.55 * std::sin(kPi * t);
  const auto slerp = [&](const UnitVec& from, const UnitVec& to, double u) {
    const double sa = std::sin(ang);
    return from.vec() * (std::sin((1.0 - u) * ang) / sa) + to.vec() * (std::sin(u * ang) / sa);
  };
  const UnitVec v1 = UnitVec::of(slerp(F1, F2, t) + nhat * lift);
  const UnitVec w1 = UnitVec::of(slerp(F2, F1, t) - nhat * lift);

  BlowupConfig cfg;
  cfg.v1 = v1;
  cfg.v2 = X2;
  cfg.w1 = w1;
  cfg.w2 = Y2;
  cfg.n = n;
  cfg.rotation_offsets = BlowupConfig::default_rotation_offsets();
  cfg.radius = BlowupConfig::default_radius(n, cfg.min_center_distance());
  cfg.validate();
  return cfg;
}

}  // namespace spherecross
