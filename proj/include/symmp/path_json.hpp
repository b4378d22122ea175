#pragma once

#include <string>

#include <json.hpp>

#include "symmp/path.hpp"
#include "symmp/sphere.hpp"
#include "symmp/torus.hpp"

namespace symmp {

using Json = nlohmann::ordered_json;

// Point encoding: torus points are [a, b] in radians, sphere points their coordinates.
Json point_to_json(const TorusPoint& p);
Json point_to_json(const SpherePoint& p);
TorusPoint torus_point_from_json(const Json& j);
SpherePoint sphere_point_from_json(const Json& j);

Json node_to_json(const Path<TorusSpace>& p);
Json node_to_json(const Path<SphereSpace>& p);
Path<TorusSpace> torus_node_from_json(const Json& j);
Path<SphereSpace> sphere_node_from_json(const Json& j);

/// {"space": ..., "node": {...}} plus an optional "samples" table of [t, coords...]
/// taken at `samples` evenly spaced times (omitted when samples == 0).
template <class Space>
Json path_to_json(const Path<Space>& p, std::size_t samples = 0);

/// Parses the output of path_to_json; "samples" is ignored. Throws ParseError.
template <class Space>
Path<Space> path_from_json(const Json& j);

/// Sample table rows [t, c0, c1, ...] at `count` evenly spaced times.
template <class Space>
Json sample_table(const Path<Space>& p, std::size_t count);

/// CSV rendering of sample_table with header t,c0,...,cn and 17 significant digits.
template <class Space>
std::string samples_csv(const Path<Space>& p, std::size_t count);

}  // namespace symmp
