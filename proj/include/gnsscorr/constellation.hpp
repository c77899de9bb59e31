#pragma once

#include <vector>

#include "gnsscorr/types.hpp"

namespace gnsscorr {

inline constexpr double kEarthMu = 3.986004418e14;       // m^3/s^2
inline constexpr double kGpsOrbitRadius = 26559700.0;    // m
inline constexpr double kGpsInclinationDeg = 55.0;

// Circular orbit; angles in radians.
struct SatelliteOrbit {
  int sat_id = 0;
  double semi_major_axis = kGpsOrbitRadius;
  double inclination = 0.0;
  double raan = 0.0;
  double mean_anomaly_at_epoch = 0.0;
};

struct SatelliteState {
  int sat_id = 0;
  EcefPosition position = EcefPosition::Zero();
};

// GPS-like Walker constellation: circular orbits at 26559.7 km, 55 deg
// inclination, RAANs evenly spaced, slots evenly spaced within each plane
// with a fixed per-plane phase offset. Deterministic.
std::vector<SatelliteOrbit> nominal_constellation(int n_planes,
                                                  int sats_per_plane);

// Circular Keplerian motion at rate sqrt(mu/a^3).
SatelliteState propagate(const SatelliteOrbit& orbit, double t);

std::vector<SatelliteState> propagate_all(
    const std::vector<SatelliteOrbit>& orbits, double t);

// Subset of `states` whose elevation at rx is >= mask, ordered by sat_id.
std::vector<SatelliteState> visible_satellites(
    const std::vector<SatelliteState>& states, const EcefPosition& rx,
    double mask);

}  // namespace gnsscorr
