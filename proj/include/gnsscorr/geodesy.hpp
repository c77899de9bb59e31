#pragma once

#include <utility>

#include "gnsscorr/types.hpp"

namespace gnsscorr {

// WGS-84 ellipsoid.
namespace wgs84 {
inline constexpr double kSemiMajorAxis = 6378137.0;           // m
inline constexpr double kFlattening = 1.0 / 298.257223563;
inline constexpr double kEccSq = kFlattening * (2.0 - kFlattening);
inline constexpr double kSemiMinorAxis = kSemiMajorAxis * (1.0 - kFlattening);
}  // namespace wgs84

struct GeodeticPosition {
  double latitude = 0.0;   // rad, [-pi/2, pi/2]
  double longitude = 0.0;  // rad, (-pi, pi]
  double height = 0.0;     // m above the WGS-84 ellipsoid
};

// Direction-cosine matrix; rows are orthonormal, det = +1.
using Rotation3 = Matrix3;

// Iterative (Bowring-start) inverse mapping. Round-trips with
// geodetic_to_ecef to < 1e-6 m for receiver-class points.
// Throws NearSingular near the geocenter (|p| <= 1e5 m).
GeodeticPosition ecef_to_geodetic(const EcefPosition& p);

// Closed-form WGS-84 forward mapping.
EcefPosition geodetic_to_ecef(const GeodeticPosition& g);

// Rotation taking free ECEF vectors into the local NED frame at `ref`:
// v_ned = R * v_ecef. Rows are the north/east/down unit vectors.
Rotation3 ned_rotation(const GeodeticPosition& ref);

inline Rotation3 ned_rotation(const EcefPosition& ref) {
  return ned_rotation(ecef_to_geodetic(ref));
}

// Unit vector from rx toward sat plus geometric range.
// Throws DegenerateGeometry when the points are closer than 1 m.
std::pair<Vector3, double> los_and_range(const EcefPosition& sat,
                                         const EcefPosition& rx);

// Elevation in [-pi/2, pi/2] and azimuth in [0, 2*pi), both at rx.
std::pair<double, double> elevation_azimuth(const EcefPosition& sat,
                                            const EcefPosition& rx);

// Receiver positions in this toolkit live on or near the Earth's surface.
bool is_receiver_class(const EcefPosition& p);

}  // namespace gnsscorr
