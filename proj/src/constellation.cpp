#include "gnsscorr/constellation.hpp"

#include <algorithm>
#include <cmath>

#include "gnsscorr/errors.hpp"
#include "gnsscorr/geodesy.hpp"

namespace gnsscorr {

std::vector<SatelliteOrbit> nominal_constellation(int n_planes,
                                                  int sats_per_plane) {
  if (n_planes < 1 || sats_per_plane < 1) {
    throw ConfigError("nominal_constellation: counts must be >= 1");
  }
  const double inclination = kGpsInclinationDeg * M_PI / 180.0;
  const int total = n_planes * sats_per_plane;

  std::vector<SatelliteOrbit> orbits;
  orbits.reserve(total);
  for (int plane = 0; plane < n_planes; ++plane) {
    for (int slot = 0; slot < sats_per_plane; ++slot) {
      SatelliteOrbit o;
      o.sat_id = plane * sats_per_plane + slot + 1;
      o.semi_major_axis = kGpsOrbitRadius;
      o.inclination = inclination;
      o.raan = 2.0 * M_PI * plane / n_planes;
      // Walker-style phasing: slots even within a plane, planes offset by
      // one inter-slot step spread across the constellation.
      o.mean_anomaly_at_epoch = 2.0 * M_PI * slot / sats_per_plane +
                                2.0 * M_PI * plane / total;
      orbits.push_back(o);
    }
  }
  return orbits;
}

SatelliteState propagate(const SatelliteOrbit& orbit, double t) {
  const double a = orbit.semi_major_axis;
  const double rate = std::sqrt(kEarthMu / (a * a * a));
  const double anomaly = orbit.mean_anomaly_at_epoch + rate * t;

  const Vector3 in_plane(a * std::cos(anomaly), a * std::sin(anomaly), 0.0);

  const double ci = std::cos(orbit.inclination), si = std::sin(orbit.inclination);
  const double co = std::cos(orbit.raan), so = std::sin(orbit.raan);
  Matrix3 rot_x, rot_z;
  rot_x << 1, 0, 0,
           0, ci, -si,
           0, si, ci;
  rot_z << co, -so, 0,
           so, co, 0,
           0, 0, 1;

  return {orbit.sat_id, rot_z * rot_x * in_plane};
}

std::vector<SatelliteState> propagate_all(
    const std::vector<SatelliteOrbit>& orbits, double t) {
  std::vector<SatelliteState> states;
  states.reserve(orbits.size());
  for (const auto& o : orbits) states.push_back(propagate(o, t));
  return states;
}

std::vector<SatelliteState> visible_satellites(
    const std::vector<SatelliteState>& states, const EcefPosition& rx,
    double mask) {
  std::vector<SatelliteState> visible;
  for (const auto& s : states) {
    const auto [elevation, azimuth] = elevation_azimuth(s.position, rx);
    (void)azimuth;
    if (elevation >= mask) visible.push_back(s);
  }
  std::sort(visible.begin(), visible.end(),
            [](const SatelliteState& a, const SatelliteState& b) {
              return a.sat_id < b.sat_id;
            });
  return visible;
}

}  // namespace gnsscorr
