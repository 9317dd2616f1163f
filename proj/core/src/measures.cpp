#include "spherecross/measures.hpp"

#include <cmath>
#include <numbers>

#include <json.hpp>

namespace spherecross {

using json = nlohmann::json;

MeasureSpec MeasureSpec::circles(std::vector<UnitVec> centers, double radius) {
  MeasureSpec s;
  s.kind = Kind::CircleFamily;
  s.centers = std::move(centers);
  s.radius = radius;
  s.validate();
  return s;
}

MeasureSpec MeasureSpec::symmetrized(MeasureSpec inner) {
  MeasureSpec s;
  s.kind = Kind::Symmetrized;
  s.inner = std::make_shared<MeasureSpec>(std::move(inner));
  return s;
}

void MeasureSpec::validate() const {
  switch (kind) {
    case Kind::UniformSphere:
      return;
    case Kind::CircleFamily: {
      if (centers.empty()) throw InvalidSpec("CircleFamily needs at least one center");
      if (!(radius > 0.0) || !(radius < std::numbers::pi / 2))
        throw InvalidSpec("CircleFamily radius must lie in (0, pi/2)");
      for (std::size_t i = 0; i < centers.size(); ++i)
        for (std::size_t j = i + 1; j < centers.size(); ++j)
          if (norm2(centers[i].vec() - centers[j].vec()) <= kEpsDeg)
            throw InvalidSpec("CircleFamily centers must be pairwise distinct");
      return;
    }
    case Kind::Symmetrized:
      if (!inner) throw InvalidSpec("Symmetrized spec has no inner measure");
      inner->validate();
      return;
  }
  throw InvalidSpec("unknown measure kind");
}

UnitVec sample_uniform_sphere(RngStream& rng) {
  const double z = 2.0 * rng.next_double() - 1.0;
  const double phi = 2.0 * std::numbers::pi * rng.next_double();
  const double s = std::sqrt(std::max(0.0, 1.0 - z * z));
  return UnitVec::of({s * std::cos(phi), s * std::sin(phi), z});
}

std::pair<Vec3, Vec3> circle_frame(const UnitVec& c) {
  // Cross with the axis least aligned with c; stable and deterministic.
  const double ax = std::abs(c.x()), ay = std::abs(c.y()), az = std::abs(c.z());
  Vec3 axis{1.0, 0.0, 0.0};
  if (ay <= ax && ay <= az) axis = {0.0, 1.0, 0.0};
  else if (az <= ax && az <= ay) axis = {0.0, 0.0, 1.0};
  const Vec3 e2 = normalized(cross(c.vec(), axis));
  const Vec3 e1 = cross(e2, c.vec());  // e1 x e2 = c
  return {e1, e2};
}

UnitVec circle_point(const UnitVec& c, double r, double theta) {
  const auto [e1, e2] = circle_frame(c);
  const Vec3 u = e1 * std::cos(theta) + e2 * std::sin(theta);
  return UnitVec::of(c.vec() * std::cos(r) + u * std::sin(r));
}

UnitVec sample_measure(const MeasureSpec& spec, RngStream& rng) {
  switch (spec.kind) {
    case MeasureSpec::Kind::UniformSphere:
      return sample_uniform_sphere(rng);
    case MeasureSpec::Kind::CircleFamily: {
      if (spec.centers.empty()) throw InvalidSpec("CircleFamily needs at least one center");
      const auto idx = rng.next_below(spec.centers.size());
      const double theta = 2.0 * std::numbers::pi * rng.next_double();
      return circle_point(spec.centers[idx], spec.radius, theta);
    }
    case MeasureSpec::Kind::Symmetrized: {
      if (!spec.inner) throw InvalidSpec("Symmetrized spec has no inner measure");
      const UnitVec p = sample_measure(*spec.inner, rng);
      return rng.next_double() < 0.5 ? antipode(p) : p;
    }
  }
  throw InvalidSpec("unknown measure kind");
}

bool is_antipodally_symmetric(const MeasureSpec& spec) {
  switch (spec.kind) {
    case MeasureSpec::Kind::UniformSphere:
    case MeasureSpec::Kind::Symmetrized:
      return true;
    case MeasureSpec::Kind::CircleFamily: {
      // The center multiset must be closed under the antipodal map.
      std::vector<bool> used(spec.centers.size(), false);
      for (std::size_t i = 0; i < spec.centers.size(); ++i) {
        if (used[i]) continue;
        bool found = false;
        for (std::size_t j = 0; j < spec.centers.size(); ++j) {
          if (j == i || used[j]) continue;
          if (norm2(spec.centers[i].vec() + spec.centers[j].vec()) < kEpsDeg) {
            used[i] = used[j] = true;
            found = true;
            break;
          }
        }
        if (!found) return false;
      }
      return true;
    }
  }
  return false;
}

namespace {

json spec_to_json(const MeasureSpec& spec) {
  switch (spec.kind) {
    case MeasureSpec::Kind::UniformSphere:
      return json{{"type", "uniform"}};
    case MeasureSpec::Kind::CircleFamily: {
      json centers = json::array();
      for (const auto& c : spec.centers) centers.push_back({c.x(), c.y(), c.z()});
      return json{{"type", "circles"}, {"centers", centers}, {"radius", spec.radius}};
    }
    case MeasureSpec::Kind::Symmetrized:
      return json{{"type", "symmetrized"}, {"inner", spec_to_json(*spec.inner)}};
  }
  throw InvalidSpec("unknown measure kind");
}

MeasureSpec spec_from_json(const json& j) {
  if (!j.is_object() || !j.contains("type"))
    throw InvalidSpec("measure JSON must be an object with a \"type\" field");
  const std::string type = j.at("type").get<std::string>();
  if (type == "uniform") return MeasureSpec::uniform();
  if (type == "circles") {
    std::vector<UnitVec> centers;
    for (const auto& c : j.at("centers")) {
      if (!c.is_array() || c.size() != 3) throw InvalidSpec("center must be [x,y,z]");
      try {
        centers.emplace_back(UnitVec(Vec3{c[0].get<double>(), c[1].get<double>(), c[2].get<double>()}));
      } catch (const std::invalid_argument& e) {
        throw InvalidSpec(std::string("bad circle center: ") + e.what());
      }
    }
    return MeasureSpec::circles(std::move(centers), j.at("radius").get<double>());
  }
  if (type == "symmetrized") return MeasureSpec::symmetrized(spec_from_json(j.at("inner")));
  throw InvalidSpec("unknown measure type: " + type);
}

}  // namespace

std::string MeasureSpec::to_json() const { return spec_to_json(*this).dump(); }

MeasureSpec MeasureSpec::from_json(const std::string& text) {
  json j;
  try {
    j = json::parse(text);
  } catch (const json::parse_error& e) {
    throw InvalidSpec(std::string("measure JSON parse error: ") + e.what());
  }
  try {
    MeasureSpec s = spec_from_json(j);
    s.validate();
    return s;
  } catch (const json::exception& e) {
    throw InvalidSpec(std::string("measure JSON error: ") + e.what());
  }
}

}  // namespace spherecross
