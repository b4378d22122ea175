#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "symmp/broken_path.hpp"
#include "symmp/frame.hpp"
#include "symmp/path_json.hpp"
#include "symmp/sphere_planner.hpp"
#include "symmp/tolerance.hpp"
#include "symmp/torus_planner.hpp"

namespace symmp::harness {

using Rng = std::mt19937_64;

enum class SpaceKind { torus, sphere };

std::string_view space_name(SpaceKind s) noexcept;

struct SuiteOptions {
  SpaceKind space = SpaceKind::torus;
  /// Sphere dimension; ignored for the torus.
  int n = 2;
  /// Uniform samples for partition/sections (each stratum gets samples/10, at
  /// least 1), pairs per stratum for continuity, broken paths for identities.
  std::size_t samples = 1000;
  std::uint64_t seed = 0;
  Tolerances tol = kDefaultTolerances;
  /// Corrupts the suite's own run so that it must fail.
  bool inject_fault = false;
};

struct Report {
  Json json;
  bool passed = false;

  /// Pretty JSON with a trailing newline; identical for identical inputs.
  std::string serialize() const;
};

Report check_partition(const SuiteOptions& opt);
Report check_sections(const SuiteOptions& opt);
/// Deltas must be positive; successive entries are expected to shrink by 10x.
Report probe_continuity(const SuiteOptions& opt, const std::vector<double>& deltas = {1e-3, 1e-4, 1e-5});
Report run_identity_suite(const SuiteOptions& opt);

/// Dispatch by name: partition, sections, continuity, identities.
/// Throws std::invalid_argument for an unknown suite.
Report run_suite(std::string_view suite, const SuiteOptions& opt);

/// Continuity bound constant: 64 on the torus, 16 on spheres.
double continuity_constant(SpaceKind s) noexcept;

// ---------------------------------------------------------------- sampling

/// Uniform on (-pi, pi].
double random_angle(Rng& rng);
TorusPoint random_torus_point(Rng& rng);
/// Normalized Gaussian vector on S^n.
SpherePoint random_sphere_point(Rng& rng, int n);
Z2 random_jump(Rng& rng);

/// Torus stratum: queries are built from a parameter vector and a discrete
/// variant, so perturbing parameters keeps the query inside the stratum.
struct TorusStratum {
  std::string name;
  TorusLabel expected;
  std::function<void(Rng&, std::vector<double>&, int&)> sample;
  std::function<TorusQuery(std::span<const double>, int)> build;
};

/// D1, D2/OnCx, D2/OnCxD, D31, D32/OnCx, D32/OnCxD, D4.
const std::vector<TorusStratum>& torus_strata();

struct TorusSample {
  TorusQuery query;
  std::vector<double> params;
  int variant;
};
TorusSample sample_stratum(const TorusStratum& s, Rng& rng);

/// Sphere stratum of domain index i: <q, v_j(p)> = 0 for j < i and
/// <q, v_i(p)> >= margin for the returned lift q.
struct SphereSample {
  SphereQuery query;
  SpherePoint lift;
};
SphereSample sample_sphere_stratum(const Frame& f, int index, Rng& rng);
/// Moves p and q by about `size` while keeping the zero pattern of index i.
SphereSample perturb_sphere_sample(const Frame& f, int index, const SphereSample& s, double size, Rng& rng);

double query_distance(const TorusQuery& a, const TorusQuery& b);
double query_distance(const SphereQuery& a, const SphereQuery& b);

// ---------------------------------------------------------------- broken paths

TorusPath random_torus_path(Rng& rng, const TorusPoint& start);
SpherePath random_sphere_path(Rng& rng, const SpherePoint& start);

/// k stages (1 <= k <= 8), 1-3 segments per stage, uniform jumps, glued by construction.
BrokenPath<TorusSpace> random_broken_torus(Rng& rng, std::size_t k);
BrokenPath<SphereSpace> random_broken_sphere(Rng& rng, int n, std::size_t k);

Json to_json(const TorusQuery& q);
Json to_json(const SphereQuery& q);

}  // namespace symmp::harness
