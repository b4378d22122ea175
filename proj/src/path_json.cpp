#include "symmp/path_json.hpp"

#include <cstdio>

#include "symmp/errors.hpp"

namespace symmp {

namespace {

template <class Space>
Json common_node_to_json(const Path<Space>& p) {
  using P = Path<Space>;
  switch (p.kind()) {
    case P::Kind::constant:
      return Json{{"kind", "constant"}, {"point", point_to_json(p.as_constant())}};
    case P::Kind::concat:
      return Json{{"kind", "concat"},
                  {"children", Json::array({node_to_json(p.as_concat().left), node_to_json(p.as_concat().right)})}};
    case P::Kind::acted:
      return Json{{"kind", "acted"},
                  {"g", std::string(p.as_acted().g.name())},
                  {"children", Json::array({node_to_json(p.as_acted().inner)})}};
    case P::Kind::restrict:
      return Json{{"kind", "restrict"},
                  {"t0", p.as_restrict().t0},
                  {"t1", p.as_restrict().t1},
                  {"children", Json::array({node_to_json(p.as_restrict().inner)})}};
    case P::Kind::segment:
      break;
  }
  throw std::logic_error("segment nodes are space specific");
}

Z2 group_from_json(const Json& j) {
  std::string name = j.get<std::string>();
  if (name == "identity") return Z2::identity();
  if (name == "sigma") return Z2::sigma();
  throw ParseError("unknown group element '" + name + "'");
}

const Json& child(const Json& j, std::size_t i, std::size_t expected) {
  const Json& children = j.at("children");
  if (!children.is_array() || children.size() != expected) throw ParseError("wrong number of children");
  return children.at(i);
}

template <class Space, class Leaf>
Path<Space> common_node_from_json(const Json& j, Leaf&& leaf) {
  using P = Path<Space>;
  std::string kind = j.at("kind").get<std::string>();
  auto recurse = [&](const Json& c) { return common_node_from_json<Space>(c, leaf); };
  if (kind == "concat") return P::make_concat(recurse(child(j, 0, 2)), recurse(child(j, 1, 2)));
  if (kind == "acted") return P::make_acted(group_from_json(j.at("g")), recurse(child(j, 0, 1)));
  if (kind == "restrict")
    return P::make_restrict(recurse(child(j, 0, 1)), j.at("t0").get<double>(), j.at("t1").get<double>());
  return leaf(kind, j);
}

template <class Space>
Json row(double t, const typename Space::Point& p) {
  Json r = Json::array({t});
  for (const auto& c : point_to_json(p)) r.push_back(c);
  return r;
}

}  // namespace

Json point_to_json(const TorusPoint& p) { return Json::array({p.a.radians(), p.b.radians()}); }

Json point_to_json(const SpherePoint& p) {
  Json j = Json::array();
  for (double c : p.coords()) j.push_back(c);
  return j;
}

TorusPoint torus_point_from_json(const Json& j) {
  if (!j.is_array() || j.size() != 2) throw ParseError("torus point must be [a, b]");
  return TorusPoint::from_radians(j[0].get<double>(), j[1].get<double>());
}

SpherePoint sphere_point_from_json(const Json& j) {
  if (!j.is_array() || j.size() < 2) throw ParseError("sphere point must have at least two coordinates");
  return SpherePoint(j.get<std::vector<double>>());
}

Json node_to_json(const Path<TorusSpace>& p) {
  if (p.kind() != Path<TorusSpace>::Kind::segment) return common_node_to_json(p);
  const TorusRotate& r = p.as_segment();
  return Json{{"kind", "rotate"}, {"coord", r.coord()}, {"delta", r.delta()}, {"start", point_to_json(r.start())}};
}

Json node_to_json(const Path<SphereSpace>& p) {
  if (p.kind() != Path<SphereSpace>::Kind::segment) return common_node_to_json(p);
  const SphereGeodesic& g = p.as_segment();
  return Json{{"kind", "geodesic"}, {"from", point_to_json(g.start())}, {"to", point_to_json(g.end())}};
}

Path<TorusSpace> torus_node_from_json(const Json& j) {
  return common_node_from_json<TorusSpace>(j, [](const std::string& kind, const Json& n) {
    if (kind == "rotate")
      return Path<TorusSpace>::segment(
          TorusRotate(n.at("coord").get<int>(), n.at("delta").get<double>(), torus_point_from_json(n.at("start"))));
    if (kind == "constant") return Path<TorusSpace>::constant(torus_point_from_json(n.at("point")));
    throw ParseError("unknown torus path node '" + kind + "'");
  });
}

Path<SphereSpace> sphere_node_from_json(const Json& j) {
  return common_node_from_json<SphereSpace>(j, [](const std::string& kind, const Json& n) {
    if (kind == "geodesic")
      return Path<SphereSpace>::segment(
          SphereGeodesic(sphere_point_from_json(n.at("from")), sphere_point_from_json(n.at("to"))));
    if (kind == "constant") return Path<SphereSpace>::constant(sphere_point_from_json(n.at("point")));
    throw ParseError("unknown sphere path node '" + kind + "'");
  });
}

template <class Space>
Json sample_table(const Path<Space>& p, std::size_t count) {
  Json rows = Json::array();
  for (std::size_t i = 0; i < count; ++i) {
    double t = count == 1 ? 0.0 : static_cast<double>(i) / static_cast<double>(count - 1);
    rows.push_back(row<Space>(t, p.eval(t)));
  }
  return rows;
}

template <class Space>
Json path_to_json(const Path<Space>& p, std::size_t samples) {
  Json j{{"space", std::string(Space::name)}, {"node", node_to_json(p)}};
  if (samples > 0) j["samples"] = sample_table(p, samples);
  return j;
}

template <class Space>
Path<Space> path_from_json(const Json& j) {
  try {
    if (j.at("space").get<std::string>() != Space::name) throw ParseError("path belongs to a different space");
    if constexpr (std::is_same_v<Space, TorusSpace>) {
      return torus_node_from_json(j.at("node"));
    } else {
      return sphere_node_from_json(j.at("node"));
    }
  } catch (const nlohmann::json::exception& e) {
    throw ParseError(std::string("malformed path JSON: ") + e.what());
  }
}

template <class Space>
std::string samples_csv(const Path<Space>& p, std::size_t count) {
  Json rows = sample_table(p, count);
  std::string out = "t";
  std::size_t width = rows.empty() ? 0 : rows[0].size() - 1;
  for (std::size_t c = 0; c < width; ++c) out += ",c" + std::to_string(c);
  out += '\n';
  char buf[64];
  for (const auto& r : rows) {
    for (std::size_t c = 0; c < r.size(); ++c) {
      std::snprintf(buf, sizeof buf, "%.17g", r[c].get<double>());
      if (c > 0) out += ',';
      out += buf;
    }
    out += '\n';
  }
  return out;
}

template Json path_to_json(const Path<TorusSpace>&, std::size_t);
template Json path_to_json(const Path<SphereSpace>&, std::size_t);
template Path<TorusSpace> path_from_json<TorusSpace>(const Json&);
template Path<SphereSpace> path_from_json<SphereSpace>(const Json&);
template Json sample_table(const Path<TorusSpace>&, std::size_t);
template Json sample_table(const Path<SphereSpace>&, std::size_t);
template std::string samples_csv(const Path<TorusSpace>&, std::size_t);
template std::string samples_csv(const Path<SphereSpace>&, std::size_t);

}  // namespace symmp
