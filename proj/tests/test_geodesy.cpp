#include <cmath>

#include "doctest.h"
#include "gnsscorr/errors.hpp"
#include "gnsscorr/geodesy.hpp"
#include "gnsscorr/rng.hpp"

using namespace gnsscorr;

namespace {

// Independent oracle: plain latitude fixed point (no Bowring start), run to
// machine convergence.
GeodeticPosition geodetic_oracle(const EcefPosition& p) {
  const double a = wgs84::kSemiMajorAxis;
  const double e2 = wgs84::kEccSq;
  const double r_xy = std::hypot(p.x(), p.y());

  GeodeticPosition g;
  g.longitude = std::atan2(p.y(), p.x());
  double lat = std::atan2(p.z(), r_xy * (1.0 - e2));
  double h = 0.0;
  for (int i = 0; i < 200; ++i) {
    const double s = std::sin(lat);
    const double n = a / std::sqrt(1.0 - e2 * s * s);
    h = r_xy / std::cos(lat) - n;
    const double next = std::atan2(p.z(), r_xy * (1.0 - e2 * n / (n + h)));
    if (std::abs(next - lat) < 1e-15) {
      lat = next;
      break;
    }
    lat = next;
  }
  g.latitude = lat;
  g.height = h;
  return g;
}

GeodeticPosition random_receiver_geodetic(Rng& rng) {
  GeodeticPosition g;
  g.latitude = rng.uniform(-0.99 * M_PI / 2.0, 0.99 * M_PI / 2.0);
  g.longitude = rng.uniform(-M_PI, M_PI);
  g.height = rng.uniform(-100.0, 10000.0);
  return g;
}

}  // namespace

TEST_CASE("ecef_to_geodetic at reference points") {
  auto g = ecef_to_geodetic({wgs84::kSemiMajorAxis, 0.0, 0.0});
  CHECK(g.latitude == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(g.longitude == doctest::Approx(0.0).epsilon(1e-12));
  CHECK(g.height == doctest::Approx(0.0).epsilon(1e-6));

  auto pole = ecef_to_geodetic({0.0, 0.0, wgs84::kSemiMinorAxis});
  CHECK(pole.latitude == doctest::Approx(M_PI / 2.0).epsilon(1e-12));
  CHECK(pole.height == doctest::Approx(0.0).epsilon(1e-6));
}

TEST_CASE("geodetic_to_ecef at reference points") {
  EcefPosition p = geodetic_to_ecef({0.0, 0.0, 0.0});
  CHECK(p.isApprox(EcefPosition(wgs84::kSemiMajorAxis, 0.0, 0.0), 1e-12));

  EcefPosition east = geodetic_to_ecef({0.0, M_PI / 2.0, 0.0});
  CHECK(east.x() == doctest::Approx(0.0).epsilon(1e-9));
  CHECK(east.y() == doctest::Approx(wgs84::kSemiMajorAxis));
  CHECK(east.z() == doctest::Approx(0.0));

  GeodeticPosition g{0.6, -2.1, 35.0};
  auto rt = ecef_to_geodetic(geodetic_to_ecef(g));
  CHECK((geodetic_to_ecef(rt) - geodetic_to_ecef(g)).norm() < 1e-6);
}

TEST_CASE("round trip over random receiver-class points") {
  Rng rng(42);
  for (int i = 0; i < 1000; ++i) {
    const GeodeticPosition g = random_receiver_geodetic(rng);
    const EcefPosition p = geodetic_to_ecef(g);
    REQUIRE(is_receiver_class(p));

    const GeodeticPosition back = ecef_to_geodetic(p);
    CHECK((geodetic_to_ecef(back) - p).norm() < 1e-6);

    const GeodeticPosition ref = geodetic_oracle(p);
    CHECK(back.latitude == doctest::Approx(ref.latitude).epsilon(1e-12));
    CHECK(back.longitude == doctest::Approx(ref.longitude).epsilon(1e-12));
    CHECK(std::abs(back.height - ref.height) < 1e-6);
  }
}

TEST_CASE("ecef_to_geodetic rejects near-geocenter points") {
  CHECK_THROWS_AS(ecef_to_geodetic({1e-4, 1e-4, 1e-4}), NearSingular);
  CHECK_THROWS_AS(ecef_to_geodetic({5e4, 0.0, 0.0}), NearSingular);
}

TEST_CASE("ned_rotation axes at the equator/prime meridian") {
  const Rotation3 r = ned_rotation(GeodeticPosition{0.0, 0.0, 0.0});
  CHECK((r * Vector3(0, 0, 1) - Vector3(1, 0, 0)).norm() < 1e-12);
  CHECK((r * Vector3(-1, 0, 0) - Vector3(0, 0, 1)).norm() < 1e-12);
  CHECK((r * Vector3(0, 1, 0) - Vector3(0, 1, 0)).norm() < 1e-12);
}

TEST_CASE("ned_rotation is orthonormal with det +1") {
  Rng rng(7);
  for (int i = 0; i < 100; ++i) {
    const GeodeticPosition g = random_receiver_geodetic(rng);
    const Rotation3 r = ned_rotation(g);
    CHECK((r.transpose() * r - Matrix3::Identity()).cwiseAbs().maxCoeff() <
          1e-12);
    CHECK(std::abs(r.determinant() - 1.0) < 1e-12);
  }
}

TEST_CASE("los_and_range collinear example") {
  const auto [los, range] =
      los_and_range({26560000.0, 0.0, 0.0}, {wgs84::kSemiMajorAxis, 0.0, 0.0});
  CHECK((los - Vector3(1, 0, 0)).norm() < 1e-12);
  CHECK(range == doctest::Approx(20181863.0));
}

TEST_CASE("los_and_range properties over random pairs") {
  Rng rng(11);
  for (int i = 0; i < 200; ++i) {
    const EcefPosition rx = geodetic_to_ecef(random_receiver_geodetic(rng));
    const EcefPosition sat(rng.uniform(-2.6e7, 2.6e7),
                           rng.uniform(-2.6e7, 2.6e7),
                           rng.uniform(-2.6e7, 2.6e7));
    if ((sat - rx).norm() < 1.0) continue;
    const auto [los, range] = los_and_range(sat, rx);
    CHECK(std::abs(los.norm() - 1.0) < 1e-12);
    // brute-force norm oracle
    const double expected = std::sqrt((sat.x() - rx.x()) * (sat.x() - rx.x()) +
                                      (sat.y() - rx.y()) * (sat.y() - rx.y()) +
                                      (sat.z() - rx.z()) * (sat.z() - rx.z()));
    CHECK(range == doctest::Approx(expected).epsilon(1e-12));
    CHECK(los_and_range(rx, sat).second == doctest::Approx(range).epsilon(1e-12));
  }
}

TEST_CASE("los_and_range rejects coincident points") {
  const EcefPosition p{wgs84::kSemiMajorAxis, 0.0, 0.0};
  CHECK_THROWS_AS(los_and_range(p, p), DegenerateGeometry);
}

TEST_CASE("elevation_azimuth basics") {
  const GeodeticPosition site{0.65, -2.13, 0.0};
  const EcefPosition rx = geodetic_to_ecef(site);

  GeodeticPosition above = site;
  above.height = 2.0e7;
  const auto [el_zenith, az_zenith] = elevation_azimuth(geodetic_to_ecef(above), rx);
  CHECK(el_zenith == doctest::Approx(M_PI / 2.0).epsilon(1e-9));
  CHECK(az_zenith >= 0.0);
  CHECK(az_zenith < 2.0 * M_PI);

  const auto [el_below, az_below] = elevation_azimuth(-2.0 * rx, rx);
  (void)az_below;
  CHECK(el_below < 0.0);

  const auto [el_collinear, az2] = elevation_azimuth(
      {26560000.0, 0.0, 0.0}, {wgs84::kSemiMajorAxis, 0.0, 0.0});
  (void)az2;
  CHECK(el_collinear == doctest::Approx(M_PI / 2.0).epsilon(1e-9));
}

TEST_CASE("LOS transforms to NED and back exactly") {
  Rng rng(13);
  for (int i = 0; i < 100; ++i) {
    const EcefPosition rx = geodetic_to_ecef(random_receiver_geodetic(rng));
    const EcefPosition sat(rng.uniform(1.0e7, 2.6e7), rng.uniform(-1e7, 1e7),
                           rng.uniform(-1e7, 1e7));
    const auto [los, range] = los_and_range(sat, rx);
    (void)range;
    const Rotation3 r = ned_rotation(rx);
    const Vector3 recovered = r.transpose() * (r * los);
    CHECK((recovered - los).cwiseAbs().maxCoeff() < 1e-12);
  }
}
