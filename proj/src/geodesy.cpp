#include "gnsscorr/geodesy.hpp"

#include <cmath>

#include "gnsscorr/errors.hpp"

namespace gnsscorr {

GeodeticPosition ecef_to_geodetic(const EcefPosition& p) {
  const double x = p.x(), y = p.y(), z = p.z();
  const double r_xy = std::hypot(x, y);

  if (r_xy < 1e-3 && std::abs(z) < 1e-3) {
    throw NearSingular("ecef_to_geodetic: point at the geocenter");
  }
  if (p.norm() <= 1e5) {
    throw NearSingular("ecef_to_geodetic: point too close to the geocenter");
  }

  const double a = wgs84::kSemiMajorAxis;
  const double b = wgs84::kSemiMinorAxis;
  const double e2 = wgs84::kEccSq;

  GeodeticPosition g;
  g.longitude = std::atan2(y, x);

  if (r_xy < 1e-9) {
    // On the polar axis the latitude iteration is degenerate.
    g.latitude = (z >= 0.0) ? M_PI / 2.0 : -M_PI / 2.0;
    g.height = std::abs(z) - b;
    return g;
  }

  // Bowring's parametric-latitude start, then fixed-point refinement.
  const double ep2 = e2 / (1.0 - e2);
  const double u = std::atan2(z * a, r_xy * b);
  const double su = std::sin(u), cu = std::cos(u);
  double lat = std::atan2(z + ep2 * b * su * su * su,
                          r_xy - e2 * a * cu * cu * cu);

  double height = 0.0;
  for (int iter = 0; iter < 32; ++iter) {
    const double s = std::sin(lat);
    const double n = a / std::sqrt(1.0 - e2 * s * s);
    if (std::abs(lat) < M_PI / 4.0) {
      height = r_xy / std::cos(lat) - n;
    } else {
      height = z / s - n * (1.0 - e2);
    }
    const double next = std::atan2(z, r_xy * (1.0 - e2 * n / (n + height)));
    const double delta = std::abs(next - lat);
    lat = next;
    if (delta < 1e-14) break;
  }

  g.latitude = lat;
  g.height = height;
  return g;
}

EcefPosition geodetic_to_ecef(const GeodeticPosition& g) {
  const double s = std::sin(g.latitude), c = std::cos(g.latitude);
  const double n = wgs84::kSemiMajorAxis / std::sqrt(1.0 - wgs84::kEccSq * s * s);
  return {(n + g.height) * c * std::cos(g.longitude),
          (n + g.height) * c * std::sin(g.longitude),
          (n * (1.0 - wgs84::kEccSq) + g.height) * s};
}

Rotation3 ned_rotation(const GeodeticPosition& ref) {
  const double sp = std::sin(ref.latitude), cp = std::cos(ref.latitude);
  const double sl = std::sin(ref.longitude), cl = std::cos(ref.longitude);
  Rotation3 r;
  r << -sp * cl, -sp * sl, cp,
       -sl,      cl,       0.0,
       -cp * cl, -cp * sl, -sp;
  return r;
}

std::pair<Vector3, double> los_and_range(const EcefPosition& sat,
                                         const EcefPosition& rx) {
  const Vector3 d = sat - rx;
  const double range = d.norm();
  if (range < 1.0) {
    throw DegenerateGeometry("los_and_range: satellite within 1 m of receiver");
  }
  return {d / range, range};
}

std::pair<double, double> elevation_azimuth(const EcefPosition& sat,
                                            const EcefPosition& rx) {
  const auto [los, range] = los_and_range(sat, rx);
  const Vector3 ned = ned_rotation(rx) * los;
  const double elevation = std::asin(std::clamp(-ned.z(), -1.0, 1.0));
  double azimuth = std::atan2(ned.y(), ned.x());
  if (azimuth < 0.0) azimuth += 2.0 * M_PI;
  if (azimuth >= 2.0 * M_PI) azimuth = 0.0;
  return {elevation, azimuth};
}

bool is_receiver_class(const EcefPosition& p) {
  const double n = p.norm();
  return n >= 6.0e6 && n <= 7.0e6;
}

}  // namespace gnsscorr
