#pragma once

#include <cstdint>
#include <vector>

#include "gnsscorr/geodesy.hpp"
#include "gnsscorr/types.hpp"

namespace gnsscorr {

struct TrajectorySample {
  double time = 0.0;                            // s
  EcefPosition truth_position = EcefPosition::Zero();
  Vector3 truth_velocity = Vector3::Zero();     // m/s, ECEF
};

struct TrajectoryConfig {
  double duration = 100.0;      // s
  double dt = 1.0;              // s, (0, 1]
  GeodeticPosition origin;      // anchor of the local NED workspace
  double v_max = 15.0;          // m/s
  double workspace_extent = 1000.0;  // m, square horizontal box

  void validate() const;
};

// Smooth horizontal trajectory: minimum-jerk (quintic) segments between
// uniformly sampled waypoints in the NED workspace, converted to ECEF.
// Inclusive endpoint sampling; deterministic given seed; speed <= v_max.
std::vector<TrajectorySample> simulate_trajectory(const TrajectoryConfig& cfg,
                                                  std::uint64_t seed);

std::vector<TrajectorySample> simulate_trajectory(double duration, double dt,
                                                  const GeodeticPosition& origin,
                                                  double v_max,
                                                  std::uint64_t seed);

}  // namespace gnsscorr
